#ifndef SUPERLIE_CORE_HPP
#define SUPERLIE_CORE_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace superlie {

/// Exact integer coefficients. Everything in this library is computed over Z.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Malformed value (bad generator index, inconsistent tree, ...).
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input outside an operation's mathematical domain (non-Lyndon word to
/// theta, non-homogeneous argument, dependent basis, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A weight bound or table capacity was exceeded.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Surface-syntax error; `position` is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error(what), position(position) {}
  std::size_t position;
};

// ---------------------------------------------------------------------------
// Parity
// ---------------------------------------------------------------------------

/// Z_2 degree of a homogeneous element.
enum class Parity : int { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return Parity((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

constexpr bool is_odd(Parity p) { return p == Parity::odd; }

/// (-1)^{|a||b|}
constexpr int koszul_sign(Parity a, Parity b) {
  return (is_odd(a) && is_odd(b)) ? -1 : 1;
}

inline std::string to_string(Parity p) {
  return is_odd(p) ? "odd" : "even";
}

// ---------------------------------------------------------------------------
// Alphabet
// ---------------------------------------------------------------------------

struct Generator {
  int index = 0;
  std::string name;
  Parity parity = Parity::even;
};

/// Ordered set of homogeneous free generators. Declaration order is the
/// total order used everywhere (word comparisons, basic-commutator order).
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::pair<std::string, Parity>> gens) {
    if (gens.empty())
      throw StructuralError("alphabet must have at least one generator");
    gens_.reserve(gens.size());
    for (auto& [name, parity] : gens) {
      validate_name(name);
      if (index_of(name))
        throw StructuralError("duplicate generator name: " + name);
      gens_.push_back({static_cast<int>(gens_.size()), name, parity});
    }
  }

  int size() const { return static_cast<int>(gens_.size()); }

  const Generator& operator[](int i) const {
    if (i < 0 || i >= size())
      throw StructuralError("generator index out of range: " +
                            std::to_string(i));
    return gens_[static_cast<std::size_t>(i)];
  }

  std::optional<int> index_of(std::string_view name) const {
    for (const auto& g : gens_)
      if (g.name == name) return g.index;
    return std::nullopt;
  }

  const std::vector<Generator>& generators() const { return gens_; }

  bool single_char_names() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Generator& g) { return g.name.size() == 1; });
  }

  /// "a:even b:odd" — the same syntax parse_alphabet accepts.
  std::string to_string() const {
    std::string out;
    for (const auto& g : gens_) {
      if (!out.empty()) out += ' ';
      out += g.name + ':' + superlie::to_string(g.parity);
    }
    return out;
  }

  static void validate_name(const std::string& name) {
    if (name.empty()) throw StructuralError("empty generator name");
    for (char c : name)
      if (c == '[' || c == ']' || c == ',' || c == ':' || c == '*' ||
          c == '+' || c == '-' || std::isspace(static_cast<unsigned char>(c)))
        throw StructuralError("illegal character in generator name: " + name);
  }

 private:
  std::vector<Generator> gens_;
};

// ---------------------------------------------------------------------------
// LieTerm — immutable bracket tree
// ---------------------------------------------------------------------------

/// A formal Lie monomial: either a generator leaf or a bracket of two
/// subterms. Weight (leaf count) and parity are cached at construction;
/// nodes share subtree storage, so copies are cheap.
class LieTerm {
 public:
  static LieTerm leaf(const Alphabet& alphabet, int generator) {
    const Generator& g = alphabet[generator];
    auto impl = std::make_shared<Impl>();
    impl->generator = g.index;
    impl->weight = 1;
    impl->parity = g.parity;
    return LieTerm(std::move(impl));
  }

  static LieTerm node(LieTerm left, LieTerm right) {
    auto impl = std::make_shared<Impl>();
    impl->weight = left.weight() + right.weight();
    impl->parity = left.parity() + right.parity();
    impl->left = left.impl_;
    impl->right = right.impl_;
    return LieTerm(std::move(impl));
  }

  bool is_leaf() const { return impl_->left == nullptr; }
  int generator() const {
    if (!is_leaf()) throw StructuralError("generator() on a bracket node");
    return impl_->generator;
  }
  LieTerm left() const {
    if (is_leaf()) throw StructuralError("left() on a leaf");
    return LieTerm(impl_->left);
  }
  LieTerm right() const {
    if (is_leaf()) throw StructuralError("right() on a leaf");
    return LieTerm(impl_->right);
  }
  int weight() const { return impl_->weight; }
  Parity parity() const { return impl_->parity; }

  /// Canonical total order: by weight, then leaves before nodes, leaves by
  /// generator index, nodes lexicographically on (left, right).
  static int compare(const LieTerm& a, const LieTerm& b) {
    if (a.impl_ == b.impl_) return 0;
    if (a.weight() != b.weight()) return a.weight() < b.weight() ? -1 : 1;
    if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? -1 : 1;
    if (a.is_leaf()) {
      if (a.generator() != b.generator())
        return a.generator() < b.generator() ? -1 : 1;
      return 0;
    }
    if (int c = compare(a.left(), b.left()); c != 0) return c;
    return compare(a.right(), b.right());
  }

  friend bool operator==(const LieTerm& a, const LieTerm& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const LieTerm& a, const LieTerm& b) {
    return compare(a, b) < 0;
  }

 private:
  struct Impl {
    int generator = -1;
    int weight = 0;
    Parity parity = Parity::even;
    std::shared_ptr<const Impl> left, right;
  };

  explicit LieTerm(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

struct LieTermLess {
  bool operator()(const LieTerm& a, const LieTerm& b) const { return a < b; }
};

/// Builds the left-normed product [t_0, t_1, ..., t_{n-1}].
inline LieTerm left_normed(std::vector<LieTerm> factors) {
  if (factors.empty()) throw StructuralError("left_normed of nothing");
  LieTerm acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i)
    acc = LieTerm::node(acc, factors[i]);
  return acc;
}

/// Recomputed (not cached) parity; also validates every leaf index.
inline Parity parity_of(const LieTerm& t, const Alphabet& alphabet) {
  if (t.is_leaf()) return alphabet[t.generator()].parity;
  return parity_of(t.left(), alphabet) + parity_of(t.right(), alphabet);
}

inline int weight_of(const LieTerm& t) { return t.weight(); }

// ---------------------------------------------------------------------------
// AssocWord
// ---------------------------------------------------------------------------

/// Word in the free associative superalgebra: a sequence of generator
/// indices. The empty word is the ring unit and only appears internally.
class AssocWord {
 public:
  AssocWord() = default;
  explicit AssocWord(std::vector<int> letters) : letters_(std::move(letters)) {}

  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  AssocWord concat(const AssocWord& other) const {
    std::vector<int> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return AssocWord(std::move(out));
  }

  AssocWord subword(int begin, int end) const {
    return AssocWord(std::vector<int>(letters_.begin() + begin,
                                      letters_.begin() + end));
  }

  AssocWord rotation(int i) const {
    std::vector<int> out(letters_.begin() + i, letters_.end());
    out.insert(out.end(), letters_.begin(), letters_.begin() + i);
    return AssocWord(std::move(out));
  }

  /// Length-graded lexicographic order (map-key order for AssocPoly).
  static int compare(const AssocWord& a, const AssocWord& b) {
    if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
    if (a.letters_ < b.letters_) return -1;
    if (b.letters_ < a.letters_) return 1;
    return 0;
  }

  /// Plain lexicographic comparison; rotations have equal length, so this is
  /// the order the Lyndon/regular predicates use.
  static int compare_lex(const AssocWord& a, const AssocWord& b) {
    if (a.letters_ < b.letters_) return -1;
    if (b.letters_ < a.letters_) return 1;
    return 0;
  }

  friend bool operator==(const AssocWord& a, const AssocWord& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator<(const AssocWord& a, const AssocWord& b) {
    return compare(a, b) < 0;
  }

 private:
  std::vector<int> letters_;
};

inline Parity parity_of(const AssocWord& w, const Alphabet& alphabet) {
  Parity p = Parity::even;
  for (int i : w.letters()) p = p + alphabet[i].parity;
  return p;
}

/// Letter counts per generator; the sum equals the length.
inline std::vector<int> multidegree(const AssocWord& w,
                                    const Alphabet& alphabet) {
  std::vector<int> deg(static_cast<std::size_t>(alphabet.size()), 0);
  for (int i : w.letters()) {
    alphabet[i];  // validate
    ++deg[static_cast<std::size_t>(i)];
  }
  return deg;
}

/// Leaf sequence of a bracket tree, read left to right.
inline AssocWord foliage(const LieTerm& t) {
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(t.weight()));
  auto walk = [&](auto&& self, const LieTerm& u) -> void {
    if (u.is_leaf()) {
      letters.push_back(u.generator());
    } else {
      self(self, u.left());
      self(self, u.right());
    }
  };
  walk(walk, t);
  return AssocWord(std::move(letters));
}

inline std::vector<int> multidegree(const LieTerm& t, const Alphabet& a) {
  return multidegree(foliage(t), a);
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

namespace detail {

/// Coefficient map that never stores zeros.
template <typename Key, typename Less>
class TermMap {
 public:
  using Map = std::map<Key, Int, Less>;

  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const& { return terms_; }
  Map terms() && { return std::move(terms_); }  // safe to iterate temporaries
  std::size_t size() const { return terms_.size(); }

  void add(const Key& k, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Int coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_all(const TermMap& other, const Int& scale = 1) {
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  void scale(const Int& s) {
    if (s == 0) {
      terms_.clear();
      return;
    }
    for (auto& [k, c] : terms_) c *= s;
  }

  friend bool operator==(const TermMap& a, const TermMap& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Map terms_;
};

}  // namespace detail

/// Z-linear combination of bracket trees.
class LiePoly : public detail::TermMap<LieTerm, LieTermLess> {
 public:
  LiePoly() = default;
  explicit LiePoly(const LieTerm& t, Int c = 1) { add(t, c); }

  LiePoly& operator+=(const LiePoly& o) { add_all(o); return *this; }
  LiePoly& operator-=(const LiePoly& o) { add_all(o, -1); return *this; }
  LiePoly& operator*=(const Int& s) { scale(s); return *this; }

  friend LiePoly operator+(LiePoly a, const LiePoly& b) { return a += b; }
  friend LiePoly operator-(LiePoly a, const LiePoly& b) { return a -= b; }
  friend LiePoly operator*(const Int& s, LiePoly p) { return p *= s; }
};

/// Z-linear combination of associative words.
class AssocPoly : public detail::TermMap<AssocWord, std::less<AssocWord>> {
 public:
  AssocPoly() = default;
  explicit AssocPoly(const AssocWord& w, Int c = 1) { add(w, c); }

  AssocPoly& operator+=(const AssocPoly& o) { add_all(o); return *this; }
  AssocPoly& operator-=(const AssocPoly& o) { add_all(o, -1); return *this; }
  AssocPoly& operator*=(const Int& s) { scale(s); return *this; }

  friend AssocPoly operator+(AssocPoly a, const AssocPoly& b) { return a += b; }
  friend AssocPoly operator-(AssocPoly a, const AssocPoly& b) { return a -= b; }
  friend AssocPoly operator*(const Int& s, AssocPoly p) { return p *= s; }

  /// Concatenation product, extended bilinearly.
  friend AssocPoly operator*(const AssocPoly& a, const AssocPoly& b) {
    AssocPoly out;
    for (const auto& [wa, ca] : a.terms())
      for (const auto& [wb, cb] : b.terms()) out.add(wa.concat(wb), ca * cb);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Canonical text rendering
// ---------------------------------------------------------------------------

inline std::string to_string(const AssocWord& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  bool dots = !alphabet.single_char_names();
  for (int i : w.letters()) {
    if (dots && !out.empty()) out += "·";
    out += alphabet[i].name;
  }
  return out;
}

/// Left-normed chains render with the "[a,b,c]" sugar.
inline std::string to_string(const LieTerm& t, const Alphabet& alphabet) {
  if (t.is_leaf()) return alphabet[t.generator()].name;
  std::vector<LieTerm> chain;
  LieTerm cur = t;
  while (!cur.is_leaf()) {
    chain.push_back(cur.right());
    cur = cur.left();
  }
  chain.push_back(cur);
  std::string out = "[";
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    if (it != chain.rbegin()) out += ',';
    out += to_string(*it, alphabet);
  }
  return out + "]";
}

namespace detail {

/// "t1 + 3*t2 - t3": signed decimal coefficients, no 1*/−1* noise.
inline void append_term(std::string& out, const Int& coeff,
                        const std::string& rendered) {
  Int mag = coeff < 0 ? Int(-coeff) : coeff;
  if (out.empty()) {
    if (coeff < 0) out += '-';
  } else {
    out += coeff < 0 ? " - " : " + ";
  }
  if (mag != 1) out += mag.str() + "*";
  out += rendered;
}

}  // namespace detail

inline std::string to_string(const LiePoly& p, const Alphabet& alphabet) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [t, c] : p.terms())
    detail::append_term(out, c, to_string(t, alphabet));
  return out;
}

inline std::string to_string(const AssocPoly& p, const Alphabet& alphabet) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : p.terms())
    detail::append_term(out, c, to_string(w, alphabet));
  return out;
}

}  // namespace superlie

#endif  // SUPERLIE_CORE_HPP
