#ifndef SUPERLIE_WORDS_HPP
#define SUPERLIE_WORDS_HPP

#include <utility>
#include <vector>

#include "superlie/core.hpp"

namespace superlie {

enum class WordKind { lyndon, regular };

inline std::string to_string(WordKind k) {
  return k == WordKind::lyndon ? "lyndon" : "regular";
}

/// True iff w is strictly smaller than every proper cyclic rotation.
inline bool is_lyndon(const AssocWord& w, const Alphabet& alphabet) {
  if (w.empty()) throw DomainError("empty word");
  for (int i : w.letters()) alphabet[i];
  for (int i = 1; i < w.length(); ++i)
    if (AssocWord::compare_lex(w, w.rotation(i)) >= 0) return false;
  return true;
}

/// True iff w is strictly greater than every proper cyclic rotation
/// (Shirshov-regular).
inline bool is_regular(const AssocWord& w, const Alphabet& alphabet) {
  if (w.empty()) throw DomainError("empty word");
  for (int i : w.letters()) alphabet[i];
  for (int i = 1; i < w.length(); ++i)
    if (AssocWord::compare_lex(w, w.rotation(i)) <= 0) return false;
  return true;
}

inline bool is_of_kind(const AssocWord& w, WordKind kind,
                       const Alphabet& alphabet) {
  return kind == WordKind::lyndon ? is_lyndon(w, alphabet)
                                  : is_regular(w, alphabet);
}

/// All words of the given kind with length <= max_len, sorted by
/// (length, lexicographic). Exhaustive filtering; fine at desk scale.
inline std::vector<AssocWord> enum_words(const Alphabet& alphabet,
                                         WordKind kind, int max_len) {
  if (max_len < 1) throw DomainError("max_len must be >= 1");
  std::vector<AssocWord> out;
  int r = alphabet.size();
  for (int n = 1; n <= max_len; ++n) {
    std::vector<int> letters(static_cast<std::size_t>(n), 0);
    for (;;) {
      AssocWord w(letters);
      if (is_of_kind(w, kind, alphabet)) out.push_back(w);
      // odometer step in lexicographic order
      int i = n - 1;
      while (i >= 0 && letters[static_cast<std::size_t>(i)] == r - 1) {
        letters[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++letters[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

/// Standard factorization w = uv: v is the longest proper suffix of the
/// same kind, and u then is of that kind as well (asserted).
inline std::pair<AssocWord, AssocWord> standard_factorization(
    const AssocWord& w, WordKind kind, const Alphabet& alphabet) {
  if (w.length() < 2) throw DomainError("factorization needs length >= 2");
  if (!is_of_kind(w, kind, alphabet))
    throw DomainError("standard factorization needs a " + to_string(kind) +
                      " word");
  for (int split = 1; split < w.length(); ++split) {
    AssocWord v = w.subword(split, w.length());
    if (is_of_kind(v, kind, alphabet)) {
      AssocWord u = w.subword(0, split);
      if (!is_of_kind(u, kind, alphabet))
        throw StructuralError("left factor fails its kind predicate");
      return {u, v};
    }
  }
  throw StructuralError("no factorization found");  // unreachable: last letter qualifies
}

namespace detail {

inline LieTerm bracketing(const AssocWord& w, WordKind kind,
                          const Alphabet& alphabet) {
  if (w.length() == 1) return LieTerm::leaf(alphabet, w.letters()[0]);
  auto [u, v] = standard_factorization(w, kind, alphabet);
  return LieTerm::node(bracketing(u, kind, alphabet),
                       bracketing(v, kind, alphabet));
}

}  // namespace detail

/// Lyndon bracketing: theta(uv) = [theta(u), theta(v)].
inline LieTerm theta(const AssocWord& w, const Alphabet& alphabet) {
  if (!is_lyndon(w, alphabet))
    throw DomainError("theta requires a Lyndon word");
  return detail::bracketing(w, WordKind::lyndon, alphabet);
}

/// Shirshov bracketing: pi(uv) = [pi(u), pi(v)].
inline LieTerm pi(const AssocWord& w, const Alphabet& alphabet) {
  if (!is_regular(w, alphabet))
    throw DomainError("pi requires a regular word");
  return detail::bracketing(w, WordKind::regular, alphabet);
}

/// Word-scheme super basis: the bracketings of all kind-words of weight
/// <= max_weight, plus [t,t] for each odd bracketing t with 2 wt(t) <=
/// max_weight. Ordered by (weight, canonical term order).
inline std::vector<LieTerm> word_super_basis(const Alphabet& alphabet,
                                             WordKind kind, int max_weight) {
  if (max_weight < 1) throw DomainError("max_weight must be >= 1");
  std::vector<LieTerm> out;
  for (const AssocWord& w : enum_words(alphabet, kind, max_weight)) {
    LieTerm t = detail::bracketing(w, kind, alphabet);
    out.push_back(t);
    if (is_odd(t.parity()) && 2 * t.weight() <= max_weight)
      out.push_back(LieTerm::node(t, t));
  }
  std::sort(out.begin(), out.end(), LieTermLess{});
  return out;
}

inline std::vector<LieTerm> shirshov_super_basis(const Alphabet& alphabet,
                                                 int max_weight) {
  return word_super_basis(alphabet, WordKind::regular, max_weight);
}

}  // namespace superlie

#endif  // SUPERLIE_WORDS_HPP
