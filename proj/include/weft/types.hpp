#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace weft {

using NodeId = std::uint32_t;

enum class EdgeTraversal { Both, Out, In };

enum class LayerMode : std::uint8_t { OneMode = 1, TwoMode = 2 };

enum class AttributeType : std::uint8_t { Int = 0, Float = 1, Bool = 2, Char = 3 };

/// A Unicode scalar value stored as a node attribute.
struct Char {
  char32_t value = 0;
  friend bool operator==(Char, Char) = default;
};

using AttributeValue = std::variant<std::int32_t, float, bool, Char>;

inline AttributeType type_of(const AttributeValue& v) noexcept {
  return static_cast<AttributeType>(v.index());
}

std::string_view to_string(AttributeType t) noexcept;
std::optional<AttributeType> parse_attribute_type(std::string_view s) noexcept;
std::string_view to_string(EdgeTraversal t) noexcept;
std::optional<EdgeTraversal> parse_traversal(std::string_view s) noexcept;

bool is_unicode_scalar(char32_t c) noexcept;

// UTF-8 helpers for Char attributes.
std::string encode_utf8(char32_t c);
/// Decodes exactly one scalar; nullopt if `s` is not a single valid scalar.
std::optional<char32_t> decode_single_utf8(std::string_view s) noexcept;

// Bitwise equality for floats so NaN payloads compare deterministically.
bool same_value(const AttributeValue& a, const AttributeValue& b) noexcept;

/// Names of layers and hyperedges must be non-empty and free of tab/CR/LF.
bool is_valid_name(std::string_view name) noexcept;

}  // namespace weft
