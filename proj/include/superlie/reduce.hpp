#ifndef SUPERLIE_REDUCE_HPP
#define SUPERLIE_REDUCE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superlie/assoc.hpp"
#include "superlie/core.hpp"
#include "superlie/hall.hpp"

namespace superlie {

/// Formal bracket, extended bilinearly. No normalization is applied.
inline LiePoly bracket(const LiePoly& p, const LiePoly& q) {
  LiePoly out;
  for (const auto& [tp, cp] : p.terms())
    for (const auto& [tq, cq] : q.terms())
      out.add(LieTerm::node(tp, tq), cp * cq);
  return out;
}

namespace detail {

// Left normalization works over opaque "atoms": generators in the first
// pass, whole basic commutators during straightening. An atom is (key,
// parity); keys are compared, smaller means earlier.
struct AtomTree {
  int atom = -1;  // leaf: atom key
  std::shared_ptr<const AtomTree> left, right;
  int min_key = 0;
  Parity parity = Parity::even;
};

using AtomTreePtr = std::shared_ptr<const AtomTree>;

inline AtomTreePtr atom_leaf(int key, Parity parity) {
  auto t = std::make_shared<AtomTree>();
  t->atom = key;
  t->min_key = key;
  t->parity = parity;
  return t;
}

inline AtomTreePtr atom_node(AtomTreePtr l, AtomTreePtr r) {
  auto t = std::make_shared<AtomTree>();
  t->min_key = std::min(l->min_key, r->min_key);
  t->parity = l->parity + r->parity;
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

inline AtomTreePtr atom_comb(const std::vector<std::pair<int, Parity>>& atoms) {
  AtomTreePtr acc = atom_leaf(atoms[0].first, atoms[0].second);
  for (std::size_t i = 1; i < atoms.size(); ++i)
    acc = atom_node(acc, atom_leaf(atoms[i].first, atoms[i].second));
  return acc;
}

using CombMap = std::map<std::vector<int>, Int>;

inline void accumulate_comb(CombMap& m, std::vector<int> key,
                            const Int& value) {
  if (value == 0) return;
  auto [it, fresh] = m.try_emplace(std::move(key), Int(0));
  it->second += value;
  if (it->second == 0) m.erase(it);
}

/// Rewrites the tree as a Z-combination of left-normed products whose
/// first entry is the designated atom — the leftmost occurrence of the
/// minimal key. Rules, for homogeneous u, v, x, y:
///   [u,v] = -(-1)^{|u||v|} [v,u]            (when the designated atom is in v)
///   [u,[x,y]] = [[u,x],y] - (-1)^{|x||y|} [[u,y],x]
inline void left_normed_combs(const AtomTreePtr& t, const Int& coeff, CombMap& out) {
  if (coeff == 0) return;
  if (!t->left) {
    accumulate_comb(out, {t->atom}, coeff);
    return;
  }
  const AtomTreePtr& u = t->left;
  const AtomTreePtr& v = t->right;
  if (v->min_key < u->min_key) {
    left_normed_combs(atom_node(v, u),
                 coeff * -koszul_sign(u->parity, v->parity), out);
    return;
  }
  if (!v->left) {
    CombMap inner;
    left_normed_combs(u, coeff, inner);
    for (auto& [comb, c] : inner) {
      std::vector<int> extended = comb;
      extended.push_back(v->atom);
      accumulate_comb(out, std::move(extended), c);
    }
    return;
  }
  left_normed_combs(atom_node(atom_node(u, v->left), v->right), coeff, out);
  left_normed_combs(atom_node(atom_node(u, v->right), v->left),
               coeff * -koszul_sign(v->left->parity, v->right->parity), out);
}

inline AtomTreePtr atoms_of_term(const LieTerm& t) {
  if (t.is_leaf()) return atom_leaf(t.generator(), t.parity());
  return atom_node(atoms_of_term(t.left()), atoms_of_term(t.right()));
}

}  // namespace detail

/// t as an integer combination of left-normed products of its leaves, each
/// beginning with the minimal leaf.
inline LiePoly left_normalize(const LieTerm& t, const Alphabet& alphabet) {
  detail::CombMap combs;
  detail::left_normed_combs(detail::atoms_of_term(t), 1, combs);
  LiePoly out;
  for (const auto& [comb, c] : combs) {
    std::vector<LieTerm> leaves;
    leaves.reserve(comb.size());
    for (int g : comb) leaves.push_back(LieTerm::leaf(alphabet, g));
    out.add(left_normed(std::move(leaves)), c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normal form (super-basis coordinates)
// ---------------------------------------------------------------------------

/// Coordinates in a super basis: sparse map from element position to
/// coefficient, tagged with the basis fingerprint.
struct Coordinates {
  std::map<int, Int> coeffs;
  std::string basis_fingerprint;

  bool is_zero() const { return coeffs.empty(); }

  friend bool operator==(const Coordinates& a, const Coordinates& b) {
    return a.coeffs == b.coeffs && a.basis_fingerprint == b.basis_fingerprint;
  }
};

inline LiePoly to_lie_poly(const Coordinates& c, const SuperBasis& basis) {
  LiePoly out;
  for (const auto& [i, v] : c.coeffs) out.add(basis[i].term, v);
  return out;
}

inline std::string to_string(const Coordinates& c, const SuperBasis& basis) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [i, v] : c.coeffs)
    detail::append_term(out, v, to_string(basis[i].term, basis.alphabet()));
  return out;
}

namespace detail {

/// Straightening of a min-first left-normed product of basic commutators
/// [c_1, c_2, ..., c_k], case by case on the two leading factors:
///   c_1 < c_2             ->  +/- [[c_2,c_1], c_3, ..., c_k]
///   c_1 = c_2 even        ->  0
///   c_1 = c_2 odd, k = 2  ->  the square [c_1,c_1]
///   c_1 = c_2 = c_3 odd   ->  0                      ([c,c,c] = 0)
///   c_1 = c_2 odd, k >= 3 ->  -2 [[c_3,c_1,c_1], c_4, ..., c_k]
/// Sequences that stop being min-first are re-sorted by left normalization
/// over the (now larger) basic-commutator atoms; k strictly decreases at
/// each merge.
class Straightener {
 public:
  explicit Straightener(const SuperBasis& basis) : basis_(basis) {}

  void feed(const std::vector<int>& seq, const Int& coeff) {
    push(seq, coeff);
    run();
  }

  Coordinates take() {
    Coordinates out;
    out.basis_fingerprint = basis_.fingerprint();
    out.coeffs = std::move(coords_);
    coords_.clear();
    return out;
  }

 private:
  void emit(int position, const Int& coeff) {
    auto [it, fresh] = coords_.try_emplace(position, Int(0));
    it->second += coeff;
    if (it->second == 0) coords_.erase(it);
  }

  int merge(int left, int right) {
    auto idx = basis_.basics().find_pair(left, right);
    if (!idx) throw StructuralError("straightening produced a non-basic pair");
    return *idx;
  }

  bool min_first(const std::vector<int>& seq) const {
    for (std::size_t i = 1; i < seq.size(); ++i)
      if (seq[i] < seq[0]) return false;
    return true;
  }

  void push(const std::vector<int>& seq, const Int& coeff) {
    if (coeff == 0) return;
    if (min_first(seq)) {
      accumulate_comb(work_, seq, coeff);
      return;
    }
    std::vector<std::pair<int, Parity>> atoms;
    atoms.reserve(seq.size());
    for (int i : seq) atoms.emplace_back(i, basis_.basics()[i].parity);
    CombMap combs;
    left_normed_combs(atom_comb(atoms), coeff, combs);
    for (auto& [comb, c] : combs) accumulate_comb(work_, comb, c);
  }

  void run() {
    while (!work_.empty()) {
      auto node = work_.extract(work_.begin());
      const std::vector<int>& seq = node.key();
      const Int coeff = std::move(node.mapped());
      if (coeff == 0) continue;
      if (seq.size() == 1) {
        emit(basis_.position_plain(seq[0]).value(), coeff);
        continue;
      }
      const int c1 = seq[0];
      const Parity p1 = basis_.basics()[c1].parity;
      if (seq[1] != c1) {
        const Parity p2 = basis_.basics()[seq[1]].parity;
        std::vector<int> next;
        next.reserve(seq.size() - 1);
        next.push_back(merge(seq[1], c1));
        next.insert(next.end(), seq.begin() + 2, seq.end());
        push(next, coeff * -koszul_sign(p1, p2));
        continue;
      }
      if (!is_odd(p1)) continue;  // [c,c] = 0 for even c
      if (seq.size() == 2) {
        emit(basis_.position_square(c1).value(), coeff);
        continue;
      }
      if (seq[2] == c1) continue;  // [c,c,c] = 0 for odd c
      std::vector<int> next;
      next.reserve(seq.size() - 2);
      next.push_back(merge(merge(seq[2], c1), c1));
      next.insert(next.end(), seq.begin() + 3, seq.end());
      push(next, coeff * -2);
    }
  }

  const SuperBasis& basis_;
  CombMap work_;
  std::map<int, Int> coords_;
};

}  // namespace detail

/// Coordinates of p in the super basis. The represented combination equals
/// p identically in the free Lie superalgebra; expand() of both sides
/// agrees, which the test suite checks against random inputs.
inline Coordinates normal_form(const LiePoly& p, const SuperBasis& basis) {
  detail::Straightener s(basis);
  for (const auto& [t, c] : p.terms()) {
    if (t.weight() > basis.max_weight())
      throw CapacityError("term weight " + std::to_string(t.weight()) +
                          " exceeds basis max_weight " +
                          std::to_string(basis.max_weight()));
    detail::CombMap combs;
    detail::left_normed_combs(detail::atoms_of_term(t), c, combs);
    for (const auto& [comb, cc] : combs) s.feed(comb, cc);
  }
  return s.take();
}

inline Coordinates normal_form(const LieTerm& t, const SuperBasis& basis) {
  return normal_form(LiePoly(t), basis);
}

// ---------------------------------------------------------------------------
// Axiom checking
// ---------------------------------------------------------------------------

struct AxiomCheck {
  std::string description;
  bool zero_by_normal_form = false;
  bool zero_by_expansion = false;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_zero = true;
};

namespace detail {

inline Parity poly_parity(const LiePoly& p) {
  std::optional<Parity> parity;
  for (const auto& [t, c] : p.terms()) {
    if (parity && *parity != t.parity())
      throw DomainError("argument is not parity-homogeneous");
    parity = t.parity();
  }
  return parity.value_or(Parity::even);
}

}  // namespace detail

/// Evaluates the graded antisymmetry and Jacobi combinations (and the even
/// square / odd cube rules) on every pair and triple from the sample, both
/// through normal_form and through associative expansion.
inline AxiomReport check_axioms(const std::vector<LiePoly>& sample,
                                const Alphabet& alphabet) {
  std::vector<Parity> parity;
  int max_weight = 1;
  for (const LiePoly& p : sample) {
    parity.push_back(detail::poly_parity(p));
    for (const auto& [t, c] : p.terms())
      max_weight = std::max(max_weight, t.weight());
  }
  SuperBasis basis(alphabet, 3 * max_weight);

  AxiomReport report;
  auto record = [&](std::string description, const LiePoly& combo) {
    AxiomCheck check;
    check.description = std::move(description);
    check.zero_by_normal_form = normal_form(combo, basis).is_zero();
    check.zero_by_expansion = expand(combo, alphabet).is_zero();
    report.all_zero &= check.zero_by_normal_form && check.zero_by_expansion;
    report.checks.push_back(std::move(check));
  };

  const int n = static_cast<int>(sample.size());
  for (int i = 0; i < n; ++i) {
    const LiePoly& a = sample[static_cast<std::size_t>(i)];
    if (!is_odd(parity[static_cast<std::size_t>(i)]))
      record("even_square(" + std::to_string(i) + ")", bracket(a, a));
    else
      record("odd_cube(" + std::to_string(i) + ")",
             bracket(bracket(a, a), a));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const LiePoly& a = sample[static_cast<std::size_t>(i)];
      const LiePoly& b = sample[static_cast<std::size_t>(j)];
      LiePoly combo = bracket(a, b);
      combo += Int(koszul_sign(parity[static_cast<std::size_t>(i)],
                               parity[static_cast<std::size_t>(j)])) *
               bracket(b, a);
      record("antisymmetry(" + std::to_string(i) + "," + std::to_string(j) + ")",
             combo);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        const LiePoly& a = sample[static_cast<std::size_t>(i)];
        const LiePoly& b = sample[static_cast<std::size_t>(j)];
        const LiePoly& c = sample[static_cast<std::size_t>(k)];
        Parity pa = parity[static_cast<std::size_t>(i)];
        Parity pb = parity[static_cast<std::size_t>(j)];
        Parity pc = parity[static_cast<std::size_t>(k)];
        LiePoly combo = Int(koszul_sign(pa, pc)) * bracket(a, bracket(b, c));
        combo += Int(koszul_sign(pb, pa)) * bracket(b, bracket(c, a));
        combo += Int(koszul_sign(pc, pb)) * bracket(c, bracket(a, b));
        record("jacobi(" + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k) + ")",
               combo);
      }
  return report;
}

}  // namespace superlie

#endif  // SUPERLIE_REDUCE_HPP
