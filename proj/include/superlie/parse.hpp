#ifndef SUPERLIE_PARSE_HPP
#define SUPERLIE_PARSE_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superlie/core.hpp"
#include "superlie/reduce.hpp"

namespace superlie {

namespace detail {

inline bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) throw ParseError(pos, std::string("expected ") + what);
  }

  std::string name() {
    skip_space();
    std::size_t start = pos;
    while (!done() && name_char(text[pos])) ++pos;
    if (pos == start) throw ParseError(pos, "expected a name");
    return std::string(text.substr(start, pos - start));
  }

  Int integer() {
    skip_space();
    std::size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(pos, "expected an integer");
    return Int(std::string(text.substr(start, pos - start)));
  }
};

}  // namespace detail

/// "a:even b:odd" or "x:1, y:0" — declaration order is the alphabet order.
inline Alphabet parse_alphabet(std::string_view s) {
  detail::Cursor cur{s};
  std::vector<std::pair<std::string, Parity>> gens;
  for (;;) {
    cur.skip_space();
    while (cur.peek() == ',') {
      ++cur.pos;
      cur.skip_space();
    }
    if (cur.done()) break;
    std::size_t at = cur.pos;
    std::string name = cur.name();
    if (std::isdigit(static_cast<unsigned char>(name[0])))
      throw ParseError(at, "generator names may not start with a digit");
    cur.expect(':', "':' after generator name");
    std::size_t parity_at = cur.pos;
    std::string parity = cur.name();
    Parity p;
    if (parity == "even" || parity == "0")
      p = Parity::even;
    else if (parity == "odd" || parity == "1")
      p = Parity::odd;
    else
      throw ParseError(parity_at, "parity must be even/odd/0/1");
    for (const auto& [n, unused] : gens)
      if (n == name) throw ParseError(at, "duplicate generator name: " + name);
    gens.emplace_back(std::move(name), p);
  }
  if (gens.empty()) throw ParseError(0, "empty alphabet");
  return Alphabet(std::move(gens));
}

namespace detail {

inline LiePoly parse_expr(Cursor& cur, const Alphabet& alphabet);

// term := name | '[' expr (',' expr)+ ']'     (k-ary bracket is left-normed)
inline LiePoly parse_term(Cursor& cur, const Alphabet& alphabet) {
  cur.skip_space();
  if (cur.peek() == '[') {
    ++cur.pos;
    LiePoly acc = parse_expr(cur, alphabet);
    cur.expect(',', "',' inside bracket");
    acc = bracket(acc, parse_expr(cur, alphabet));
    while (cur.eat(',')) acc = bracket(acc, parse_expr(cur, alphabet));
    cur.expect(']', "']'");
    return acc;
  }
  std::size_t at = cur.pos;
  std::string name = cur.name();
  auto idx = alphabet.index_of(name);
  if (!idx) throw ParseError(at, "unknown generator: " + name);
  return LiePoly(LieTerm::leaf(alphabet, *idx));
}

// expr := ['-'] addend (('+'|'-') addend)*,  addend := [int '*'] term
inline LiePoly parse_expr(Cursor& cur, const Alphabet& alphabet) {
  LiePoly acc;
  bool first = true;
  Int sign = 1;
  for (;;) {
    cur.skip_space();
    if (first && cur.peek() == '-') {
      ++cur.pos;
      sign = -1;
    }
    Int coeff = sign;
    cur.skip_space();
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff *= cur.integer();
      cur.expect('*', "'*' after coefficient");
    }
    acc += coeff * parse_term(cur, alphabet);
    cur.skip_space();
    first = false;
    if (cur.peek() == '+') {
      ++cur.pos;
      sign = 1;
    } else if (cur.peek() == '-') {
      ++cur.pos;
      sign = -1;
    } else {
      return acc;
    }
  }
}

}  // namespace detail

/// Surface expression over a parsed alphabet, e.g. "3*[x,[y,x]] - [y,x,x]".
inline LiePoly parse_expression(std::string_view s, const Alphabet& alphabet) {
  detail::Cursor cur{s};
  LiePoly p = detail::parse_expr(cur, alphabet);
  cur.skip_space();
  if (!cur.done()) throw ParseError(cur.pos, "trailing input");
  return p;
}

/// Word syntax: bare concatenation when every generator name is a single
/// character ("baba"), otherwise "·"-separated names.
inline AssocWord parse_word(std::string_view s, const Alphabet& alphabet) {
  std::vector<int> letters;
  if (alphabet.single_char_names()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) continue;
      auto idx = alphabet.index_of(s.substr(i, 1));
      if (!idx) throw ParseError(i, "unknown generator: " + std::string(1, s[i]));
      letters.push_back(*idx);
    }
  } else {
    std::size_t pos = 0;
    while (pos < s.size()) {
      while (pos < s.size() &&
             std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (pos >= s.size()) break;
      std::size_t end = s.find("·", pos);
      if (end == std::string_view::npos) end = s.size();
      std::size_t last = end;
      while (last > pos && std::isspace(static_cast<unsigned char>(s[last - 1])))
        --last;
      std::string name(s.substr(pos, last - pos));
      auto idx = alphabet.index_of(name);
      if (!idx) throw ParseError(pos, "unknown generator: " + name);
      letters.push_back(*idx);
      pos = end + (end < s.size() ? std::string_view("·").size() : 0);
    }
  }
  if (letters.empty()) throw ParseError(0, "empty word");
  return AssocWord(std::move(letters));
}

}  // namespace superlie

#endif  // SUPERLIE_PARSE_HPP
