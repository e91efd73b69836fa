#include <doctest.h>

#include <set>

#include "superlie/words.hpp"

#include "oracles.hpp"

using namespace superlie;

namespace {

Alphabet ab() { return Alphabet({{"a", Parity::even}, {"b", Parity::even}}); }

AssocWord w(const Alphabet& a, const std::string& s) {
  std::vector<int> letters;
  for (char c : s) letters.push_back(*a.index_of(std::string(1, c)));
  return AssocWord(std::move(letters));
}

}  // namespace

TEST_CASE("lyndon and regular predicates") {
  Alphabet a = ab();
  CHECK(is_lyndon(w(a, "ab"), a));
  CHECK(!is_lyndon(w(a, "aa"), a));
  CHECK(!is_lyndon(w(a, "ba"), a));
  CHECK(is_regular(w(a, "ba"), a));
  CHECK(!is_regular(w(a, "aa"), a));
  CHECK(!is_regular(w(a, "bab"), a));
  CHECK(is_lyndon(w(a, "a"), a));
  CHECK(is_regular(w(a, "b"), a));
  CHECK_THROWS_AS(is_lyndon(AssocWord{}, a), DomainError);
}

TEST_CASE("enum_words") {
  Alphabet a = ab();
  auto lyndon = enum_words(a, WordKind::lyndon, 3);
  std::vector<AssocWord> expected_l = {w(a, "a"), w(a, "b"), w(a, "ab"),
                                       w(a, "aab"), w(a, "abb")};
  CHECK(lyndon == expected_l);

  auto regular = enum_words(a, WordKind::regular, 3);
  std::vector<AssocWord> expected_r = {w(a, "a"), w(a, "b"), w(a, "ba"),
                                       w(a, "baa"), w(a, "bba")};
  CHECK(regular == expected_r);

  Alphabet one({{"a", Parity::even}});
  std::vector<AssocWord> just_a = {AssocWord({0})};
  CHECK(enum_words(one, WordKind::lyndon, 3) == just_a);
  CHECK(enum_words(one, WordKind::regular, 3) == just_a);
}

TEST_CASE("enum_words output is duplicate-free and passes its predicate") {
  for (int r = 1; r <= 3; ++r) {
    std::vector<std::pair<std::string, Parity>> gens;
    for (int i = 0; i < r; ++i)
      gens.emplace_back(std::string(1, static_cast<char>('a' + i)),
                        i % 2 ? Parity::odd : Parity::even);
    Alphabet a(gens);
    for (WordKind kind : {WordKind::lyndon, WordKind::regular}) {
      auto words = enum_words(a, kind, 5);
      std::set<std::vector<int>> seen;
      for (const AssocWord& u : words) {
        CHECK(is_of_kind(u, kind, a));
        CHECK(seen.insert(u.letters()).second);
      }
    }
  }
}

TEST_CASE("lyndon and regular words are equinumerous, matching Witt counts") {
  for (int r = 1; r <= 3; ++r) {
    std::vector<std::pair<std::string, Parity>> gens;
    for (int i = 0; i < r; ++i)
      gens.emplace_back(std::string(1, static_cast<char>('a' + i)),
                        Parity::even);
    Alphabet a(gens);
    const int max_len = 8;
    auto lyndon = enum_words(a, WordKind::lyndon, max_len);
    auto regular = enum_words(a, WordKind::regular, max_len);
    for (int n = 1; n <= max_len; ++n) {
      auto count = [n](const std::vector<AssocWord>& ws) {
        long long c = 0;
        for (const AssocWord& u : ws) c += (u.length() == n) ? 1 : 0;
        return c;
      };
      CHECK(count(lyndon) == count(regular));
      CHECK(count(lyndon) == oracles::witt_count(r, n));
    }
  }
}

TEST_CASE("standard factorization") {
  Alphabet a = ab();
  auto [u1, v1] = standard_factorization(w(a, "ab"), WordKind::lyndon, a);
  CHECK(u1 == w(a, "a"));
  CHECK(v1 == w(a, "b"));
  auto [u2, v2] = standard_factorization(w(a, "aab"), WordKind::lyndon, a);
  CHECK(u2 == w(a, "a"));
  CHECK(v2 == w(a, "ab"));
  auto [u3, v3] = standard_factorization(w(a, "baa"), WordKind::regular, a);
  CHECK(u3 == w(a, "ba"));
  CHECK(v3 == w(a, "a"));
  CHECK_THROWS_AS(standard_factorization(w(a, "ba"), WordKind::lyndon, a),
                  DomainError);
  CHECK_THROWS_AS(standard_factorization(w(a, "a"), WordKind::lyndon, a),
                  DomainError);
}

TEST_CASE("factorization succeeds on every enumerated word, factors of same kind") {
  Alphabet a = ab();
  for (WordKind kind : {WordKind::lyndon, WordKind::regular})
    for (const AssocWord& word : enum_words(a, kind, 7)) {
      if (word.length() < 2) continue;
      auto [u, v] = standard_factorization(word, kind, a);
      CHECK(u.concat(v) == word);
      CHECK(is_of_kind(u, kind, a));
      CHECK(is_of_kind(v, kind, a));
      // v maximal: no longer proper suffix of the kind
      for (int split = 1; split < u.length(); ++split)
        CHECK(!is_of_kind(word.subword(split, word.length()), kind, a));
    }
}

TEST_CASE("theta bracketing") {
  Alphabet a = ab();
  LieTerm A = LieTerm::leaf(a, 0), B = LieTerm::leaf(a, 1);
  CHECK(theta(w(a, "ab"), a) == LieTerm::node(A, B));
  CHECK(theta(w(a, "aab"), a) == LieTerm::node(A, LieTerm::node(A, B)));
  CHECK(theta(w(a, "abb"), a) == LieTerm::node(LieTerm::node(A, B), B));
  CHECK_THROWS_AS(theta(w(a, "ba"), a), DomainError);
}

TEST_CASE("pi bracketing") {
  Alphabet a = ab();
  LieTerm A = LieTerm::leaf(a, 0), B = LieTerm::leaf(a, 1);
  CHECK(pi(w(a, "ba"), a) == LieTerm::node(B, A));
  CHECK(pi(w(a, "baa"), a) == LieTerm::node(LieTerm::node(B, A), A));
  CHECK(pi(w(a, "bba"), a) == LieTerm::node(B, LieTerm::node(B, A)));
  CHECK_THROWS_AS(pi(w(a, "ab"), a), DomainError);
}

TEST_CASE("bracketing maps preserve the letter sequence") {
  std::vector<std::pair<std::string, Parity>> gens = {
      {"a", Parity::even}, {"b", Parity::odd}, {"c", Parity::even}};
  Alphabet a(gens);
  for (const AssocWord& word : enum_words(a, WordKind::lyndon, 6))
    CHECK(foliage(theta(word, a)) == word);
  for (const AssocWord& word : enum_words(a, WordKind::regular, 6))
    CHECK(foliage(pi(word, a)) == word);
}

TEST_CASE("shirshov super basis") {
  Alphabet one_odd({{"x", Parity::odd}});
  LieTerm x = LieTerm::leaf(one_odd, 0);
  auto basis = shirshov_super_basis(one_odd, 3);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == x);
  CHECK(basis[1] == LieTerm::node(x, x));

  Alphabet eb({{"a", Parity::even}, {"b", Parity::odd}});
  LieTerm A = LieTerm::leaf(eb, 0), B = LieTerm::leaf(eb, 1);
  auto basis2 = shirshov_super_basis(eb, 2);
  REQUIRE(basis2.size() == 4);
  CHECK(basis2[0] == A);
  CHECK(basis2[1] == B);
  CHECK(basis2[2] == LieTerm::node(B, A));
  CHECK(basis2[3] == LieTerm::node(B, B));

  Alphabet ee({{"a", Parity::even}, {"b", Parity::even}});
  auto plain = shirshov_super_basis(ee, 4);
  for (const LieTerm& t : plain)
    CHECK(!(!t.is_leaf() && t.left() == t.right()));  // no squares added
}
