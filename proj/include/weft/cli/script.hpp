#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace weft::cli {

struct Value {
  enum class Kind { Number, Bool, String, Bare, List };

  Kind kind = Kind::Bare;
  /// Source text for numbers and bare tokens, unescaped content for strings.
  std::string text;
  bool boolean = false;
  std::vector<Value> items;  // List only
  std::size_t column = 0;    // 1-based
};

struct Argument {
  std::optional<std::string> name;
  Value value;
};

struct Statement {
  std::optional<std::string> target;
  std::string command;
  std::vector<Argument> args;
};

/// Parses one line:
///   stmt  := [ident "="] ident "(" [arg {"," arg}] ")"
///   arg   := [ident "="] value
///   value := scalar {";" scalar}
/// where a scalar is a number, true/false, a double-quoted string or a bare
/// token. `#` starts a comment. Returns nullopt for blank and comment-only
/// lines; throws Error(SyntaxError) with the 1-based column otherwise.
std::optional<Statement> parse_statement(std::string_view line);

}  // namespace weft::cli
