#pragma once

#include <optional>
#include <string_view>

#include "weft/network.hpp"

namespace weft {

enum class SymmetrizeMethod { Max, Min, Sum, Or };

std::optional<SymmetrizeMethod> parse_symmetrize_method(std::string_view s) noexcept;

/// Turns a directed one-mode layer into a symmetric one. Pair values combine
/// as method(M, M^T) with absent edges read as 0; pairs that combine to 0 are
/// dropped. Or yields a binary union and is the only method for binary
/// layers. No-op on layers that are already symmetric.
void symmetrize(Network& net, std::string_view layer, SymmetrizeMethod method);

/// Makes a one-mode layer binary, keeping edges with value >= threshold (or
/// < threshold when keep_at_or_above is false). Binary edges count as 1.0.
void dichotomize(Network& net, std::string_view layer, float threshold, bool keep_at_or_above = true);

/// Removes one-mode edges whose value lies outside [min_value, max_value].
/// Binary edges count as 1.0.
void filter_edges(Network& net, std::string_view layer, std::optional<float> min_value,
                  std::optional<float> max_value);

}  // namespace weft
