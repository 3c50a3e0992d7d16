#include "weft/cli/script.hpp"

#include <cctype>

#include "weft/error.hpp"

namespace weft::cli {

namespace {

struct Token {
  enum class Kind { Word, Quoted, Symbol, End };
  Kind kind;
  std::string text;
  std::size_t column;  // 1-based
};

[[noreturn]] void syntax_error(std::size_t column, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "column " + std::to_string(column) + ": " + what);
}

bool is_symbol(char c) { return c == '=' || c == '(' || c == ')' || c == ',' || c == ';'; }

std::vector<Token> lex(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') break;
    const std::size_t column = i + 1;
    if (is_symbol(c)) {
      tokens.push_back({Token::Kind::Symbol, std::string(1, c), column});
      ++i;
      continue;
    }
    if (c == '"') {
      std::string text;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        const char d = line[i++];
        if (d == '"') {
          closed = true;
          break;
        }
        if (d == '\\') {
          if (i >= line.size()) break;
          const char e = line[i++];
          switch (e) {
            case 'n': text += '\n'; break;
            case 't': text += '\t'; break;
            case '"': text += '"'; break;
            case '\\': text += '\\'; break;
            default: syntax_error(i - 1, std::string("unknown escape '\\") + e + "'");
          }
          continue;
        }
        text += d;
      }
      if (!closed) syntax_error(column, "unterminated string");
      tokens.push_back({Token::Kind::Quoted, std::move(text), column});
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && !is_symbol(line[j]) &&
           line[j] != '"' && line[j] != '#') {
      ++j;
    }
    tokens.push_back({Token::Kind::Word, std::string(line.substr(i, j - i)), column});
    i = j;
  }
  tokens.push_back({Token::Kind::End, "", line.size() + 1});
  return tokens;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

bool is_number(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  }
  if (digits == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t exp_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++exp_digits;
    if (exp_digits == 0) return false;
  }
  return i == s.size();
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Statement statement() {
    Statement stmt;
    std::string first = identifier("command name");
    if (peek_symbol('=')) {
      ++pos_;
      stmt.target = std::move(first);
      stmt.command = identifier("command name");
    } else {
      stmt.command = std::move(first);
    }
    expect('(');
    if (!peek_symbol(')')) {
      for (;;) {
        stmt.args.push_back(argument());
        if (!peek_symbol(',')) break;
        ++pos_;
      }
    }
    expect(')');
    if (current().kind != Token::Kind::End) syntax_error(current().column, "unexpected '" + current().text + "' after ')'");
    return stmt;
  }

 private:
  const Token& current() const { return tokens_[pos_]; }
  const Token& lookahead(std::size_t n) const { return tokens_[std::min(pos_ + n, tokens_.size() - 1)]; }

  bool peek_symbol(char c) const {
    return current().kind == Token::Kind::Symbol && current().text[0] == c;
  }

  void expect(char c) {
    if (!peek_symbol(c)) {
      const auto& t = current();
      syntax_error(t.column, std::string("expected '") + c + "'" +
                                 (t.kind == Token::Kind::End ? " before end of line" : ", found '" + t.text + "'"));
    }
    ++pos_;
  }

  std::string identifier(const char* what) {
    const auto& t = current();
    if (t.kind != Token::Kind::Word || !is_identifier(t.text)) {
      syntax_error(t.column, std::string("expected ") + what);
    }
    ++pos_;
    return t.text;
  }

  Argument argument() {
    Argument arg;
    const auto& t = current();
    const auto& next = lookahead(1);
    if (t.kind == Token::Kind::Word && next.kind == Token::Kind::Symbol && next.text == "=") {
      if (!is_identifier(t.text)) syntax_error(t.column, "invalid argument name '" + t.text + "'");
      arg.name = t.text;
      pos_ += 2;
    }
    arg.value = value();
    return arg;
  }

  Value scalar() {
    const auto& t = current();
    Value v;
    v.column = t.column;
    if (t.kind == Token::Kind::Quoted) {
      v.kind = Value::Kind::String;
    } else if (t.kind == Token::Kind::Word) {
      if (t.text == "true" || t.text == "false") {
        v.kind = Value::Kind::Bool;
        v.boolean = t.text == "true";
      } else {
        v.kind = is_number(t.text) ? Value::Kind::Number : Value::Kind::Bare;
      }
    } else {
      syntax_error(t.column, t.kind == Token::Kind::End ? "expected a value before end of line"
                                                        : "expected a value, found '" + t.text + "'");
    }
    v.text = t.text;
    ++pos_;
    return v;
  }

  Value value() {
    Value first = scalar();
    if (!peek_symbol(';')) return first;
    Value list;
    list.kind = Value::Kind::List;
    list.column = first.column;
    list.items.push_back(std::move(first));
    while (peek_symbol(';')) {
      ++pos_;
      list.items.push_back(scalar());
    }
    return list;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::optional<Statement> parse_statement(std::string_view line) {
  auto tokens = lex(line);
  if (tokens.size() == 1) return std::nullopt;
  return Parser(std::move(tokens)).statement();
}

}  // namespace weft::cli
