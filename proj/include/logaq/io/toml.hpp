#pragma once

// The subset of TOML used by input files: [dotted.tables], key = value, strings,
// integers, arrays (bare words allowed as strings), inline tables, # comments.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace logaq::io {

struct Position {
  int line = 1, column = 1;
  std::string to_string() const { return std::to_string(line) + ":" + std::to_string(column); }
};

class InputError : public std::runtime_error {
 public:
  InputError(const std::string& msg, Position pos)
      : std::runtime_error("line " + pos.to_string() + ": " + msg), pos_(pos) {}
  InputError(const std::string& msg) : std::runtime_error(msg), pos_{0, 0} {}
  Position position() const { return pos_; }

 private:
  Position pos_;
};

struct Value;
using Array = std::vector<Value>;
using Table = std::map<std::string, Value>;

struct Value {
  std::variant<std::string, long long, Array, Table> data;
  Position pos;
  bool bare = false;  ///< a bare word inside an array

  bool is_string() const { return std::holds_alternative<std::string>(data); }
  bool is_int() const { return std::holds_alternative<long long>(data); }
  bool is_array() const { return std::holds_alternative<Array>(data); }
  bool is_table() const { return std::holds_alternative<Table>(data); }

  const std::string& as_string(const std::string& what) const {
    if (!is_string()) throw InputError(what + " must be a string", pos);
    return std::get<std::string>(data);
  }
  long long as_int(const std::string& what) const {
    if (!is_int()) throw InputError(what + " must be an integer", pos);
    return std::get<long long>(data);
  }
  const Array& as_array(const std::string& what) const {
    if (!is_array()) throw InputError(what + " must be an array", pos);
    return std::get<Array>(data);
  }
  const Table& as_table(const std::string& what) const {
    if (!is_table()) throw InputError(what + " must be a table", pos);
    return std::get<Table>(data);
  }
};

class TomlParser {
 public:
  explicit TomlParser(std::string text) : s_(std::move(text)) {}

  Table parse() {
    Table root;
    Table* current = &root;
    while (true) {
      skip_blank_lines();
      if (eof()) break;
      if (peek() == '[') {
        Position p = pos_;
        advance();
        std::vector<std::string> path = dotted_key();
        skip_inline_space();
        expect(']');
        current = &root;
        for (const auto& k : path) {
          auto [it, inserted] = current->try_emplace(k, Value{Table{}, p});
          if (!it->second.is_table()) throw InputError("\"" + k + "\" is not a table", p);
          current = &std::get<Table>(it->second.data);
        }
      } else {
        Position p = pos_;
        std::string key = bare_key();
        skip_inline_space();
        expect('=');
        skip_inline_space();
        Value v = value();
        if (current->count(key)) throw InputError("duplicate key \"" + key + "\"", p);
        current->emplace(key, std::move(v));
      }
      end_of_line();
    }
    return root;
  }

 private:
  bool eof() const { return i_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[i_]; }

  void advance() {
    if (s_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw InputError(msg, pos_); }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'" + (eof() ? " before end of input" : ""));
    advance();
  }

  void skip_comment() {
    if (peek() == '#')
      while (!eof() && peek() != '\n') advance();
  }

  void skip_inline_space() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
    skip_comment();
  }

  void skip_blank_lines() {
    while (true) {
      skip_inline_space();
      if (peek() == '\n')
        advance();
      else
        break;
    }
  }

  // Inside arrays and inline tables newlines are whitespace.
  void skip_space() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n' || peek() == '#')) {
      if (peek() == '#')
        skip_comment();
      else
        advance();
    }
  }

  void end_of_line() {
    skip_inline_space();
    if (eof()) return;
    if (peek() != '\n') fail(std::string("unexpected character '") + peek() + "'");
    advance();
  }

  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '\'';
  }

  std::string bare_key() {
    std::string k;
    while (!eof() && word_char(peek())) {
      k += peek();
      advance();
    }
    if (k.empty()) fail("expected a key");
    return k;
  }

  std::vector<std::string> dotted_key() {
    std::vector<std::string> path;
    skip_inline_space();
    path.push_back(bare_key());
    while (peek() == '.') {
      advance();
      path.push_back(bare_key());
    }
    return path;
  }

  Value value() {
    Position p = pos_;
    char c = peek();
    if (c == '"') return {string_literal(), p};
    if (c == '[') return {array(), p};
    if (c == '{') return {inline_table(), p};
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) return {integer(), p};
    fail(eof() ? "expected a value before end of input" : std::string("unexpected character '") + c + "'");
  }

  std::string string_literal() {
    expect('"');
    std::string out;
    while (!eof() && peek() != '"') {
      if (peek() == '\n') fail("unterminated string");
      if (peek() == '\\') {
        advance();
        if (eof()) break;
      }
      out += peek();
      advance();
    }
    expect('"');
    return out;
  }

  long long integer() {
    Position p = pos_;
    std::string digits;
    if (peek() == '-' || peek() == '+') {
      digits += peek();
      advance();
    }
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    if (digits.empty() || digits == "-" || digits == "+") throw InputError("expected an integer", p);
    try {
      return std::stoll(digits);
    } catch (const std::out_of_range&) {
      throw InputError("integer out of range", p);
    }
  }

  Array array() {
    expect('[');
    Array out;
    skip_space();
    while (peek() != ']') {
      if (eof()) fail("unterminated array");
      Position p = pos_;
      if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        Value v{bare_key(), p};
        v.bare = true;
        out.push_back(std::move(v));
      } else {
        out.push_back(value());
      }
      skip_space();
      if (peek() == ',') {
        advance();
        skip_space();
      } else if (peek() != ']') {
        fail("expected ',' or ']' in array");
      }
    }
    advance();
    return out;
  }

  Table inline_table() {
    expect('{');
    Table out;
    skip_space();
    while (peek() != '}') {
      if (eof()) fail("unterminated inline table");
      Position p = pos_;
      std::string key = bare_key();
      skip_space();
      expect('=');
      skip_space();
      Value v = value();
      if (out.count(key)) throw InputError("duplicate key \"" + key + "\"", p);
      out.emplace(key, std::move(v));
      skip_space();
      if (peek() == ',') {
        advance();
        skip_space();
      } else if (peek() != '}') {
        fail("expected ',' or '}' in inline table");
      }
    }
    advance();
    return out;
  }

  std::string s_;
  std::size_t i_ = 0;
  Position pos_;
};

inline Table parse_toml(const std::string& text) { return TomlParser(text).parse(); }

}  // namespace logaq::io
