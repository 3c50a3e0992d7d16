#include <bit>
#include <cstring>

#include "weft/error.hpp"
#include "weft/types.hpp"

namespace weft {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::InvalidName: return "InvalidName";
    case ErrorCode::DuplicateLayer: return "DuplicateLayer";
    case ErrorCode::UnknownLayer: return "UnknownLayer";
    case ErrorCode::WrongLayerMode: return "WrongLayerMode";
    case ErrorCode::SelfTieForbidden: return "SelfTieForbidden";
    case ErrorCode::DuplicateHyperedge: return "DuplicateHyperedge";
    case ErrorCode::UnknownHyperedge: return "UnknownHyperedge";
    case ErrorCode::InboundUnavailable: return "InboundUnavailable";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::NonEmptyLayer: return "NonEmptyLayer";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::InvalidM: return "InvalidM";
    case ErrorCode::AlreadySymmetric: return "AlreadySymmetric";
    case ErrorCode::UnsupportedMethod: return "UnsupportedMethod";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::TypeParseError: return "TypeParseError";
    case ErrorCode::UnknownNodeInEdge: return "UnknownNodeInEdge";
    case ErrorCode::MalformedSection: return "MalformedSection";
    case ErrorCode::UnknownLayerHeaderKey: return "UnknownLayerHeaderKey";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::TypeError: return "TypeError";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::InvalidObject: return "InvalidObject";
  }
  return "Error";
}

std::string_view to_string(AttributeType t) noexcept {
  switch (t) {
    case AttributeType::Int: return "int";
    case AttributeType::Float: return "float";
    case AttributeType::Bool: return "bool";
    case AttributeType::Char: return "char";
  }
  return "?";
}

std::optional<AttributeType> parse_attribute_type(std::string_view s) noexcept {
  if (s == "int") return AttributeType::Int;
  if (s == "float") return AttributeType::Float;
  if (s == "bool") return AttributeType::Bool;
  if (s == "char") return AttributeType::Char;
  return std::nullopt;
}

std::string_view to_string(EdgeTraversal t) noexcept {
  switch (t) {
    case EdgeTraversal::Both: return "both";
    case EdgeTraversal::Out: return "out";
    case EdgeTraversal::In: return "in";
  }
  return "?";
}

std::optional<EdgeTraversal> parse_traversal(std::string_view s) noexcept {
  if (s == "both") return EdgeTraversal::Both;
  if (s == "out") return EdgeTraversal::Out;
  if (s == "in") return EdgeTraversal::In;
  return std::nullopt;
}

bool is_unicode_scalar(char32_t c) noexcept {
  return c <= 0x10FFFF && (c < 0xD800 || c > 0xDFFF);
}

std::string encode_utf8(char32_t c) {
  std::string s;
  if (c < 0x80) {
    s.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    s.push_back(static_cast<char>(0xC0 | (c >> 6)));
    s.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    s.push_back(static_cast<char>(0xE0 | (c >> 12)));
    s.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    s.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    s.push_back(static_cast<char>(0xF0 | (c >> 18)));
    s.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    s.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    s.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
  return s;
}

std::optional<char32_t> decode_single_utf8(std::string_view s) noexcept {
  if (s.empty()) return std::nullopt;
  const auto b0 = static_cast<unsigned char>(s[0]);
  std::size_t len = 0;
  char32_t c = 0;
  if (b0 < 0x80) {
    len = 1;
    c = b0;
  } else if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    c = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    c = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    c = b0 & 0x07;
  } else {
    return std::nullopt;
  }
  if (s.size() != len) return std::nullopt;
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[i]);
    if ((b & 0xC0) != 0x80) return std::nullopt;
    c = (c << 6) | (b & 0x3F);
  }
  // Reject overlong encodings.
  static constexpr char32_t min_for_len[] = {0, 0, 0x80, 0x800, 0x10000};
  if (c < min_for_len[len] || !is_unicode_scalar(c)) return std::nullopt;
  return c;
}

bool same_value(const AttributeValue& a, const AttributeValue& b) noexcept {
  if (a.index() != b.index()) return false;
  if (const auto* fa = std::get_if<float>(&a)) {
    return std::bit_cast<std::uint32_t>(*fa) == std::bit_cast<std::uint32_t>(std::get<float>(b));
  }
  return a == b;
}

bool is_valid_name(std::string_view name) noexcept {
  return !name.empty() && name.find_first_of("\t\r\n") == std::string_view::npos;
}

}  // namespace weft
