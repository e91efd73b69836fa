#ifndef SUPERLIE_ASSOC_HPP
#define SUPERLIE_ASSOC_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "superlie/core.hpp"
#include "superlie/hall.hpp"
#include "superlie/words.hpp"

namespace superlie {

// ---------------------------------------------------------------------------
// Expansion into the free associative superalgebra
// ---------------------------------------------------------------------------

/// Image of a bracket tree under [u,v] = uv - (-1)^{|u||v|} vu.
inline AssocPoly expand(const LieTerm& t, const Alphabet& alphabet) {
  if (t.is_leaf()) {
    alphabet[t.generator()];
    return AssocPoly(AssocWord({t.generator()}));
  }
  AssocPoly u = expand(t.left(), alphabet);
  AssocPoly v = expand(t.right(), alphabet);
  return u * v - Int(koszul_sign(t.left().parity(), t.right().parity())) * (v * u);
}

inline AssocPoly expand(const LiePoly& p, const Alphabet& alphabet) {
  AssocPoly out;
  for (const auto& [t, c] : p.terms()) out += c * expand(t, alphabet);
  return out;
}

inline AssocPoly expand(const SuperBasisElement& e, const Alphabet& alphabet) {
  return expand(e.term, alphabet);
}

// ---------------------------------------------------------------------------
// Basic products
// ---------------------------------------------------------------------------

/// Product c_1 c_2 ... c_m of basic commutators with c_1 <= c_2 <= ... <= c_m.
struct BasicProduct {
  std::vector<int> factors;

  friend bool operator==(const BasicProduct& a, const BasicProduct& b) {
    return a.factors == b.factors;
  }
  friend bool operator<(const BasicProduct& a, const BasicProduct& b) {
    return a.factors < b.factors;
  }
};

inline int weight_of(const BasicProduct& p, const BasicSet& basics) {
  int w = 0;
  for (int f : p.factors) w += basics[f].weight;
  return w;
}

inline AssocPoly expand(const BasicProduct& p, const BasicSet& basics) {
  AssocPoly out(AssocWord{});  // ring unit
  for (int f : p.factors) out = out * expand(basics[f].term, basics.alphabet());
  return out;
}

inline std::string to_string(const BasicProduct& p, const BasicSet& basics) {
  const Alphabet& a = basics.alphabet();
  std::string out;
  bool dots = !a.single_char_names();
  for (int f : p.factors) {
    if (dots && !out.empty()) out += "·";
    out += to_string(basics[f].term, a);
  }
  return out;
}

/// All nondecreasing factor sequences of total weight exactly `weight`, in
/// lexicographic order on the factor indices.
inline std::vector<BasicProduct> enum_basic_products(const BasicSet& basics,
                                                     int weight) {
  if (weight < 1) throw DomainError("weight must be >= 1");
  if (weight > basics.max_weight())
    throw CapacityError("basic list incomplete for weight " +
                        std::to_string(weight));
  std::vector<BasicProduct> out;
  std::vector<int> factors;
  auto rec = [&](auto&& self, int first, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(BasicProduct{factors});
      return;
    }
    for (int f = first; f < basics.size(); ++f) {
      int w = basics[f].weight;
      if (w > remaining) break;  // index order refines weight order
      factors.push_back(f);
      self(self, f, remaining - w);
      factors.pop_back();
    }
  };
  rec(rec, 0, weight);
  return out;
}

// ---------------------------------------------------------------------------
// Hall collection
// ---------------------------------------------------------------------------

/// Integer combination of products of basic commutators, keyed by the
/// factor-index sequence. Fully collected polynomials (collect_full) are
/// supported on nondecreasing sequences, i.e. genuine basic products.
class CollectedPoly
    : public detail::TermMap<std::vector<int>, std::less<std::vector<int>>> {
 public:
  CollectedPoly() = default;

  AssocPoly expanded(const BasicSet& basics) const {
    AssocPoly out;
    for (const auto& [seq, c] : terms())
      out += c * expand(BasicProduct{seq}, basics);
    return out;
  }
};

inline std::string to_string(const CollectedPoly& p, const BasicSet& basics) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [seq, c] : p.terms())
    detail::append_term(out, c, to_string(BasicProduct{seq}, basics));
  return out;
}

namespace detail {

inline void accumulate(std::map<std::vector<int>, Int>& m,
                       std::vector<int> key, const Int& value) {
  if (value == 0) return;
  auto [it, fresh] = m.try_emplace(std::move(key), Int(0));
  it->second += value;
  if (it->second == 0) m.erase(it);
}

/// One stage of the collection process: moves every occurrence of the
/// basic commutator `b` leftward past larger factors, leftmost first.
/// cb = [c,b] + (-1)^{|c||b|} bc, and [c,b] is again basic here.
inline void collect_stage(std::map<std::vector<int>, Int>& terms, int b,
                          const BasicSet& basics) {
  std::map<std::vector<int>, Int> work;
  work.swap(terms);
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const std::vector<int>& seq = node.key();
    const Int coeff = std::move(node.mapped());
    if (coeff == 0) continue;
    std::size_t pos = 0;
    for (std::size_t i = 1; i < seq.size(); ++i)
      if (seq[i] == b && seq[i - 1] > b) {
        pos = i;
        break;
      }
    if (pos == 0) {
      accumulate(terms, seq, coeff);
      continue;
    }
    int c = seq[pos - 1];
    auto merged = basics.find_pair(c, b);
    if (!merged)
      throw StructuralError("collection produced a non-basic pair");
    std::vector<int> m(seq.begin(), seq.begin() + static_cast<long>(pos) - 1);
    m.push_back(*merged);
    m.insert(m.end(), seq.begin() + static_cast<long>(pos) + 1, seq.end());
    accumulate(work, std::move(m), coeff);
    std::vector<int> s = seq;
    std::swap(s[pos - 1], s[pos]);
    accumulate(work, std::move(s),
               coeff * koszul_sign(basics[c].parity, basics[b].parity));
  }
}

inline std::map<std::vector<int>, Int> seed_word(const AssocWord& w,
                                                 const BasicSet& basics) {
  if (w.empty()) throw DomainError("cannot collect the empty word");
  if (w.length() > basics.max_weight())
    throw CapacityError("word length " + std::to_string(w.length()) +
                        " exceeds the basic list capacity " +
                        std::to_string(basics.max_weight()));
  for (int i : w.letters()) basics.alphabet()[i];
  return {{w.letters(), Int(1)}};
}

}  // namespace detail

/// Collection of the first (smallest) generator's entries to the left:
/// the worked identity, e.g. baba = aabb + ab[b,a] + 2a[b,a]b + [b,a][b,a]
/// + [b,a,a]b over two even generators b > a. Every remaining factor is a
/// basic commutator, but the factor sequences need not be nondecreasing;
/// collect_full continues the process to completion.
inline CollectedPoly collect(const AssocWord& w, const BasicSet& basics) {
  auto terms = detail::seed_word(w, basics);
  detail::collect_stage(terms, 0, basics);
  CollectedPoly out;
  for (auto& [seq, c] : terms) out.add(seq, c);
  return out;
}

/// Full collection, stage by stage in increasing basic order. The result
/// is the (unique) expression of w in the basic-product basis of A_n.
inline CollectedPoly collect_full(const AssocWord& w, const BasicSet& basics) {
  auto terms = detail::seed_word(w, basics);
  for (int b = 0; b < basics.size(); ++b)
    detail::collect_stage(terms, b, basics);
  CollectedPoly out;
  for (auto& [seq, c] : terms) {
    for (std::size_t i = 1; i < seq.size(); ++i)
      if (seq[i - 1] > seq[i])
        throw StructuralError("full collection left a decreasing pair");
    out.add(seq, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact integer rank and coordinate solving
// ---------------------------------------------------------------------------

struct RankReport {
  int input_count = 0;
  int rows = 0;
  int cols = 0;
  int rank = 0;
  bool independent = true;
  std::vector<AssocWord> pivot_words;
};

namespace detail {

/// Fraction-free (Bareiss) row echelon. Matrix is dense, row-major.
/// Returns the rank; `pivot_cols` receives the pivot column of each pivot
/// row, in order. The matrix is left in echelon form for back-substitution.
inline int bareiss_echelon(std::vector<std::vector<Int>>& m, int ncols_solve,
                           std::vector<int>* pivot_cols = nullptr) {
  int rows = static_cast<int>(m.size());
  int rank = 0;
  Int prev = 1;
  for (int col = 0; col < ncols_solve && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      const Int& v = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (v == 0) continue;
      if (pivot < 0 ||
          abs(v) < abs(m[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)]))
        pivot = r;
    }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
    auto& prow = m[static_cast<std::size_t>(rank)];
    // Row signs are units: keep pivots positive so that equal consecutive
    // pivots make the zero-factor rescale below a no-op.
    if (prow[static_cast<std::size_t>(col)] < 0)
      for (Int& x : prow) x = -x;
    const Int p = prow[static_cast<std::size_t>(col)];
    int width = static_cast<int>(prow.size());
    for (int r = rank + 1; r < rows; ++r) {
      auto& row = m[static_cast<std::size_t>(r)];
      Int factor = row[static_cast<std::size_t>(col)];
      if (factor == 0) {
        if (p == prev) continue;  // row would be rescaled by p/prev == 1
        for (int j = col + 1; j < width; ++j) {
          Int& x = row[static_cast<std::size_t>(j)];
          if (x != 0) x = x * p / prev;
        }
        continue;
      }
      row[static_cast<std::size_t>(col)] = 0;
      for (int j = col + 1; j < width; ++j) {
        Int& x = row[static_cast<std::size_t>(j)];
        const Int& y = prow[static_cast<std::size_t>(j)];
        if (x == 0 && y == 0) continue;
        x = (p * x - factor * y) / prev;
      }
    }
    prev = p;
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

inline std::vector<AssocWord> column_words(const std::vector<AssocPoly>& rows,
                                           const std::vector<AssocPoly>* extra =
                                               nullptr) {
  std::map<AssocWord, int> words;
  for (const auto& p : rows)
    for (const auto& [w, c] : p.terms()) words.emplace(w, 0);
  if (extra)
    for (const auto& p : *extra)
      for (const auto& [w, c] : p.terms()) words.emplace(w, 0);
  std::vector<AssocWord> out;
  out.reserve(words.size());
  for (auto& [w, unused] : words) out.push_back(w);
  return out;
}

}  // namespace detail

/// Exact rank of the coefficient matrix of `rows` over the rationals (which
/// for distinct integer vectors decides Z-linear independence of the set).
inline RankReport rank_over_integers(const std::vector<AssocPoly>& rows) {
  RankReport report;
  report.input_count = static_cast<int>(rows.size());
  if (rows.empty()) return report;

  std::vector<AssocWord> words = detail::column_words(rows);
  std::map<AssocWord, int> col_of;
  for (int j = 0; j < static_cast<int>(words.size()); ++j)
    col_of.emplace(words[static_cast<std::size_t>(j)], j);

  std::vector<std::vector<Int>> m(
      rows.size(), std::vector<Int>(words.size(), Int(0)));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [w, c] : rows[i].terms())
      m[i][static_cast<std::size_t>(col_of.at(w))] = c;

  report.rows = static_cast<int>(rows.size());
  report.cols = static_cast<int>(words.size());
  std::vector<int> pivot_cols;
  report.rank = detail::bareiss_echelon(m, report.cols, &pivot_cols);
  report.independent = (report.rank == report.input_count);
  for (int c : pivot_cols)
    report.pivot_words.push_back(words[static_cast<std::size_t>(c)]);
  return report;
}

/// Integer coordinates of each target in the span of `basis`, or nullopt
/// for targets with no integer expression there. The basis rows must be
/// linearly independent. One shared elimination serves all targets.
inline std::vector<std::optional<std::vector<Int>>> solve_coordinates_many(
    const std::vector<AssocPoly>& basis,
    const std::vector<AssocPoly>& targets) {
  const int k = static_cast<int>(basis.size());
  std::vector<AssocWord> words = detail::column_words(basis, &targets);
  std::map<AssocWord, int> row_of;
  for (int j = 0; j < static_cast<int>(words.size()); ++j)
    row_of.emplace(words[static_cast<std::size_t>(j)], j);
  const int rows = static_cast<int>(words.size());
  const int width = k + static_cast<int>(targets.size());

  // equations indexed by words: sum_j basis_j[w] x_j = target[w]
  std::vector<std::vector<Int>> m(
      static_cast<std::size_t>(std::max(rows, 1)),
      std::vector<Int>(static_cast<std::size_t>(width), Int(0)));
  for (int j = 0; j < k; ++j)
    for (const auto& [w, c] : basis[static_cast<std::size_t>(j)].terms())
      m[static_cast<std::size_t>(row_of.at(w))][static_cast<std::size_t>(j)] = c;
  for (int t = 0; t < static_cast<int>(targets.size()); ++t)
    for (const auto& [w, c] : targets[static_cast<std::size_t>(t)].terms())
      m[static_cast<std::size_t>(row_of.at(w))][static_cast<std::size_t>(k + t)] = c;

  std::vector<int> pivot_cols;
  int rank = detail::bareiss_echelon(m, k, &pivot_cols);
  if (rank < k) throw DomainError("basis rows are not linearly independent");

  std::vector<std::optional<std::vector<Int>>> out;
  for (int t = 0; t < static_cast<int>(targets.size()); ++t) {
    const std::size_t tc = static_cast<std::size_t>(k + t);
    bool solvable = true;
    for (int r = rank; r < rows && solvable; ++r)
      solvable = (m[static_cast<std::size_t>(r)][tc] == 0);
    if (!solvable) {
      out.push_back(std::nullopt);
      continue;
    }
    std::vector<Rational> x(static_cast<std::size_t>(k), Rational(0));
    bool integral = true;
    for (int r = rank - 1; r >= 0; --r) {
      const auto& row = m[static_cast<std::size_t>(r)];
      int pc = pivot_cols[static_cast<std::size_t>(r)];
      Rational acc(row[tc]);
      for (int j = pc + 1; j < k; ++j)
        if (row[static_cast<std::size_t>(j)] != 0)
          acc -= Rational(row[static_cast<std::size_t>(j)]) *
                 x[static_cast<std::size_t>(j)];
      x[static_cast<std::size_t>(pc)] = acc / Rational(row[static_cast<std::size_t>(pc)]);
    }
    std::vector<Int> coords;
    coords.reserve(static_cast<std::size_t>(k));
    for (const Rational& v : x) {
      if (denominator(v) != 1) {
        integral = false;
        break;
      }
      coords.push_back(numerator(v));
    }
    if (integral)
      out.push_back(std::move(coords));
    else
      out.push_back(std::nullopt);
  }
  return out;
}

inline std::optional<std::vector<Int>> solve_coordinates(
    const AssocPoly& p, const std::vector<AssocPoly>& basis) {
  return solve_coordinates_many(basis, {p}).front();
}

// ---------------------------------------------------------------------------
// Basis verification (independence and the r^n census)
// ---------------------------------------------------------------------------

enum class Scheme { hall, lyndon, shirshov };

inline std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::hall: return "hall";
    case Scheme::lyndon: return "lyndon";
    default: return "shirshov";
  }
}

struct WeightReport {
  int weight = 0;
  int count = 0;
  int rank = 0;
  bool independent = true;
  // hall scheme only: the weight-n basic-product census against r^n
  std::optional<Int> expected;
  std::optional<int> product_count;
  std::optional<int> product_rank;
};

/// Bracket trees of the scheme's super basis, every weight up to max_weight.
inline std::vector<LieTerm> scheme_super_basis(const Alphabet& alphabet,
                                               Scheme scheme, int max_weight) {
  switch (scheme) {
    case Scheme::lyndon:
      return word_super_basis(alphabet, WordKind::lyndon, max_weight);
    case Scheme::shirshov:
      return word_super_basis(alphabet, WordKind::regular, max_weight);
    case Scheme::hall:
    default: {
      std::vector<LieTerm> out;
      for (const SuperBasisElement& e : super_basis(alphabet, max_weight))
        out.push_back(e.term);
      return out;
    }
  }
}

/// Per-weight independence (and, for hall, spanning) report: expands the
/// scheme's super-basis elements of each weight and certifies their rank.
inline std::vector<WeightReport> verify_basis(const Alphabet& alphabet,
                                              int max_weight, Scheme scheme) {
  if (max_weight < 1) throw DomainError("max_weight must be >= 1");
  std::vector<LieTerm> elements = scheme_super_basis(alphabet, scheme, max_weight);
  std::optional<BasicSet> basics;
  if (scheme == Scheme::hall) basics.emplace(alphabet, max_weight);

  std::vector<WeightReport> out;
  for (int n = 1; n <= max_weight; ++n) {
    WeightReport rep;
    rep.weight = n;
    std::vector<AssocPoly> rows;
    for (const LieTerm& t : elements)
      if (t.weight() == n) rows.push_back(expand(t, alphabet));
    rep.count = static_cast<int>(rows.size());
    RankReport rr = rank_over_integers(rows);
    rep.rank = rr.rank;
    rep.independent = rr.independent;
    if (scheme == Scheme::hall) {
      Int expected = 1;
      for (int i = 0; i < n; ++i) expected *= alphabet.size();
      rep.expected = expected;
      std::vector<AssocPoly> product_rows;
      for (const BasicProduct& p : enum_basic_products(*basics, n))
        product_rows.push_back(expand(p, *basics));
      rep.product_count = static_cast<int>(product_rows.size());
      rep.product_rank = rank_over_integers(product_rows).rank;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace superlie

#endif  // SUPERLIE_ASSOC_HPP
