#ifndef SUPERLIE_HALL_HPP
#define SUPERLIE_HALL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superlie/core.hpp"

namespace superlie {

/// One basic commutator: its bracket tree, position in the fixed global
/// order, and (for weight >= 2) the indices of its two halves.
struct BasicCommutator {
  LieTerm term;
  int index = 0;
  int weight = 1;
  Parity parity = Parity::even;
  int left_index = -1;   // -1 on generators
  int right_index = -1;
};

/// Complete set of basic commutators of weight <= max_weight, in the fixed
/// admissible order: by weight, then by (left_index, right_index)
/// lexicographically, generators in alphabet order.
///
/// Weight 1: the generators. Weight k >= 2: [c,d] with wt(c)+wt(d) = k,
/// c > d, and if c = [e,f] then f <= d.
class BasicSet {
 public:
  BasicSet(Alphabet alphabet, int max_weight)
      : alphabet_(std::move(alphabet)), max_weight_(max_weight) {
    if (max_weight < 1) throw DomainError("max_weight must be >= 1");
    for (const Generator& g : alphabet_.generators())
      push(BasicCommutator{LieTerm::leaf(alphabet_, g.index), g.index, 1,
                           g.parity, -1, -1});
    for (int k = 2; k <= max_weight_; ++k) {
      // scan the completed lower weights, then append the new layer
      int below = static_cast<int>(elems_.size());
      std::vector<BasicCommutator> layer;
      for (int ci = 0; ci < below; ++ci) {
        const BasicCommutator& c = elems_[static_cast<std::size_t>(ci)];
        for (int di = 0; di < ci; ++di) {
          const BasicCommutator& d = elems_[static_cast<std::size_t>(di)];
          if (c.weight + d.weight != k) continue;
          if (c.weight >= 2 && c.right_index > di) continue;  // condition 3
          layer.push_back(BasicCommutator{
              LieTerm::node(c.term, d.term),
              below + static_cast<int>(layer.size()), k, c.parity + d.parity,
              ci, di});
        }
      }
      for (BasicCommutator& c : layer) push(std::move(c));
    }
  }

  const Alphabet& alphabet() const { return alphabet_; }
  int max_weight() const { return max_weight_; }
  const std::vector<BasicCommutator>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }

  const BasicCommutator& operator[](int index) const {
    if (index < 0 || index >= size())
      throw StructuralError("basic-commutator index out of range");
    return elems_[static_cast<std::size_t>(index)];
  }

  std::optional<int> find(const LieTerm& t) const {
    auto it = by_term_.find(t);
    if (it == by_term_.end()) return std::nullopt;
    return it->second;
  }

  /// Index of [left, right] if that pair is basic and within capacity.
  std::optional<int> find_pair(int left, int right) const {
    auto it = by_pair_.find({left, right});
    if (it == by_pair_.end()) return std::nullopt;
    return it->second;
  }

  int count_of_weight(int w) const {
    int n = 0;
    for (const auto& c : elems_) n += (c.weight == w) ? 1 : 0;
    return n;
  }

 private:
  void push(BasicCommutator c) {
    by_term_.emplace(c.term, c.index);
    if (c.weight >= 2) by_pair_.emplace(std::pair{c.left_index, c.right_index}, c.index);
    elems_.push_back(std::move(c));
  }

  Alphabet alphabet_;
  int max_weight_;
  std::vector<BasicCommutator> elems_;
  std::map<LieTerm, int, LieTermLess> by_term_;
  std::map<std::pair<int, int>, int> by_pair_;
};

inline std::vector<BasicCommutator> enum_basic(const Alphabet& alphabet,
                                               int max_weight) {
  return BasicSet(alphabet, max_weight).elements();
}

/// Ordinal of t in the basic list, if t is structurally one of them.
inline std::optional<int> basic_index(
    const LieTerm& t, const std::vector<BasicCommutator>& basis) {
  for (const BasicCommutator& c : basis)
    if (c.term == t) return c.index;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Super basis
// ---------------------------------------------------------------------------

enum class SuperKind { plain, odd_square };

/// Element of the super basis: a basic commutator c, or the square [c,c]
/// of an odd one.
struct SuperBasisElement {
  SuperKind kind = SuperKind::plain;
  int basic = 0;     // index into the BasicSet
  int index = 0;     // position in the super basis
  int weight = 1;    // wt(c), or 2 wt(c) for squares
  Parity parity = Parity::even;
  LieTerm term;      // c itself, or the node [c,c]
};

/// C u {[c,c] | c in C odd}, ordered by (weight, plain before square,
/// basic index). Owns its BasicSet.
class SuperBasis {
 public:
  SuperBasis(Alphabet alphabet, int max_weight)
      : basics_(std::move(alphabet), max_weight) {
    plain_pos_.assign(static_cast<std::size_t>(basics_.size()), -1);
    square_pos_.assign(static_cast<std::size_t>(basics_.size()), -1);
    for (int w = 1; w <= max_weight; ++w) {
      for (const BasicCommutator& c : basics_.elements()) {
        if (c.weight != w) continue;
        plain_pos_[static_cast<std::size_t>(c.index)] =
            static_cast<int>(elems_.size());
        elems_.push_back({SuperKind::plain, c.index,
                          static_cast<int>(elems_.size()), c.weight, c.parity,
                          c.term});
      }
      for (const BasicCommutator& c : basics_.elements()) {
        if (!is_odd(c.parity) || 2 * c.weight != w) continue;
        square_pos_[static_cast<std::size_t>(c.index)] =
            static_cast<int>(elems_.size());
        elems_.push_back({SuperKind::odd_square, c.index,
                          static_cast<int>(elems_.size()), w, Parity::even,
                          LieTerm::node(c.term, c.term)});
      }
    }
  }

  const BasicSet& basics() const { return basics_; }
  const Alphabet& alphabet() const { return basics_.alphabet(); }
  int max_weight() const { return basics_.max_weight(); }
  const std::vector<SuperBasisElement>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }

  const SuperBasisElement& operator[](int index) const {
    if (index < 0 || index >= size())
      throw StructuralError("super-basis index out of range");
    return elems_[static_cast<std::size_t>(index)];
  }

  std::optional<int> position_plain(int basic) const {
    int p = plain_pos_.at(static_cast<std::size_t>(basic));
    if (p < 0) return std::nullopt;
    return p;
  }

  std::optional<int> position_square(int basic) const {
    int p = square_pos_.at(static_cast<std::size_t>(basic));
    if (p < 0) return std::nullopt;
    return p;
  }

  int dimension_at_weight(int w) const {
    int n = 0;
    for (const auto& e : elems_) n += (e.weight == w) ? 1 : 0;
    return n;
  }

  /// Identifies the basis (and every order convention baked into it) for
  /// Coordinates consumers.
  std::string fingerprint() const {
    return "superlie/1 alphabet=" + alphabet().to_string() +
           " max_weight=" + std::to_string(max_weight()) +
           " order=hall(weight,left,right) normalize:min-leftmost";
  }

 private:
  BasicSet basics_;
  std::vector<SuperBasisElement> elems_;
  std::vector<int> plain_pos_, square_pos_;
};

inline std::vector<SuperBasisElement> super_basis(const Alphabet& alphabet,
                                                  int max_weight) {
  return SuperBasis(alphabet, max_weight).elements();
}

inline std::string to_string(const SuperBasisElement& e,
                             const Alphabet& alphabet) {
  return to_string(e.term, alphabet);
}

}  // namespace superlie

#endif  // SUPERLIE_HALL_HPP
