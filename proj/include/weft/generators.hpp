#pragma once

#include <cstdint>
#include <string_view>

#include "weft/network.hpp"

namespace weft {

struct GenerationSummary {
  std::uint64_t edges = 0;        // one-mode generators
  std::uint64_t memberships = 0;  // two-mode generator
  std::uint64_t rewired = 0;      // Watts-Strogatz only
};

// All generators require an existing, empty layer of the right mode
// (NonEmptyLayer / WrongLayerMode otherwise) and operate on the nodeset's IDs
// in ascending order, so node index i means the i-th smallest ID. Identical
// parameters and seed produce identical layers.

/// G(n, p) on a symmetric one-mode layer by geometric skipping over the
/// lexicographic pair order.
GenerationSummary generate_er(Network& net, std::string_view layer, double p, std::uint64_t seed);

/// Ring lattice with k/2 neighbors per side, each lattice edge rewired with
/// probability beta (lower-index endpoint kept). Always n*k/2 edges.
GenerationSummary generate_ws(Network& net, std::string_view layer, std::uint32_t k, double beta,
                              std::uint64_t seed);

/// Preferential attachment with m edges per arriving node. Always m(n-m)
/// edges.
GenerationSummary generate_ba(Network& net, std::string_view layer, std::uint32_t m,
                              std::uint64_t seed);

/// Hyperedges "0".."h-1"; each node joins min(Poisson(a), h) distinct
/// hyperedges chosen uniformly.
GenerationSummary generate_2mode(Network& net, std::string_view layer, std::uint32_t h, double a,
                                 std::uint64_t seed);

}  // namespace weft
