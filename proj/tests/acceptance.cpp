// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fail. Everything is exact integer arithmetic; the only tolerances are the
// wall-clock budgets printed next to each line.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "superlie/superlie.hpp"

#include "oracles.hpp"

using namespace superlie;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  std::string label;
  double budget_seconds;
  std::function<bool(std::string&)> check;
};

AssocWord word_of(const Alphabet& a, const std::string& s) {
  std::vector<int> letters;
  for (char c : s) letters.push_back(*a.index_of(std::string(1, c)));
  return AssocWord(std::move(letters));
}

bool expect(bool ok, const std::string& what, std::string& diag) {
  if (!ok && diag.empty()) diag = what;
  return ok;
}

// 1. collect("baba") over two even generators b > a is the five-term
//    identity with exact coefficients 1,1,2,1,1.
bool criterion_golden_collect(std::string& diag) {
  Alphabet a({{"a", Parity::even}, {"b", Parity::even}});
  BasicSet basics(a, 4);
  CollectedPoly got = collect(word_of(a, "baba"), basics);
  const std::string expected =
      "aabb + ab[b,a] + 2*a[b,a]b + [b,a][b,a] + [b,a,a]b";
  bool ok = expect(to_string(got, basics) == expected,
                   "got " + to_string(got, basics), diag);
  ok &= expect(got.expanded(basics) == AssocPoly(word_of(a, "baba")),
               "collected polynomial does not expand back to baba", diag);
  return ok;
}

// 2. Census: the number of basic products of weight n is r^n and their
//    expansions have exact rank r^n (r=2 up to n=8, r=3 up to n=6).
bool criterion_census(std::string& diag) {
  struct Case {
    int r, max_n;
  };
  for (Case c : {Case{2, 8}, Case{3, 6}}) {
    std::vector<std::pair<std::string, Parity>> gens;
    for (int i = 0; i < c.r; ++i)
      gens.emplace_back(std::string(1, static_cast<char>('a' + i)),
                        i % 2 ? Parity::odd : Parity::even);
    Alphabet alphabet(gens);
    BasicSet basics(alphabet, c.max_n);
    for (int n = 1; n <= c.max_n; ++n) {
      long long expected = 1;
      for (int i = 0; i < n; ++i) expected *= c.r;
      auto products = enum_basic_products(basics, n);
      if (!expect(static_cast<long long>(products.size()) == expected,
                  "r=" + std::to_string(c.r) + " n=" + std::to_string(n) +
                      ": count " + std::to_string(products.size()) +
                      " != " + std::to_string(expected),
                  diag))
        return false;
      std::vector<AssocPoly> rows;
      rows.reserve(products.size());
      for (const auto& p : products) rows.push_back(expand(p, basics));
      RankReport rank = rank_over_integers(rows);
      if (!expect(static_cast<long long>(rank.rank) == expected,
                  "r=" + std::to_string(c.r) + " n=" + std::to_string(n) +
                      ": rank " + std::to_string(rank.rank) +
                      " != " + std::to_string(expected),
                  diag))
        return false;
    }
  }
  return true;
}

std::vector<Alphabet> four_alphabets() {
  return {
      Alphabet({{"a", Parity::even}, {"b", Parity::even}}),
      Alphabet({{"x", Parity::odd}}),
      Alphabet({{"x", Parity::odd}, {"y", Parity::odd}}),
      Alphabet({{"a", Parity::even}, {"x", Parity::odd}}),
  };
}

// 3. The expanded Hall super basis has full rank at every weight
//    n <= 6 for the four reference alphabets.
bool criterion_hall_independence(std::string& diag) {
  for (const Alphabet& alphabet : four_alphabets()) {
    auto reports = verify_basis(alphabet, 6, Scheme::hall);
    for (const auto& r : reports) {
      if (!expect(r.independent && r.rank == r.count,
                  "alphabet \"" + alphabet.to_string() + "\" weight " +
                      std::to_string(r.weight) + ": rank " +
                      std::to_string(r.rank) + " of " +
                      std::to_string(r.count),
                  diag))
        return false;
    }
  }
  return true;
}

// 4. Scheme agreement: Hall, Lyndon and Shirshov super bases
//    have equal per-weight sizes, and each solves integrally in the span
//    of the others.
bool criterion_scheme_agreement(std::string& diag) {
  for (const Alphabet& alphabet : four_alphabets()) {
    std::vector<std::vector<LieTerm>> schemes;
    for (Scheme s : {Scheme::hall, Scheme::lyndon, Scheme::shirshov})
      schemes.push_back(scheme_super_basis(alphabet, s, 6));
    for (int n = 1; n <= 6; ++n) {
      std::vector<std::vector<AssocPoly>> expansions(3);
      for (int s = 0; s < 3; ++s)
        for (const LieTerm& t : schemes[static_cast<std::size_t>(s)])
          if (t.weight() == n)
            expansions[static_cast<std::size_t>(s)].push_back(
                expand(t, alphabet));
      if (!expect(expansions[0].size() == expansions[1].size() &&
                      expansions[0].size() == expansions[2].size(),
                  "alphabet \"" + alphabet.to_string() + "\" weight " +
                      std::to_string(n) + ": sizes differ",
                  diag))
        return false;
      for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) {
          if (s == t || expansions[static_cast<std::size_t>(s)].empty())
            continue;
          auto solved = solve_coordinates_many(
              expansions[static_cast<std::size_t>(s)],
              expansions[static_cast<std::size_t>(t)]);
          for (const auto& coords : solved)
            if (!expect(coords.has_value(),
                        "alphabet \"" + alphabet.to_string() + "\" weight " +
                            std::to_string(n) + ": scheme " +
                            std::to_string(t) + " not in span of " +
                            std::to_string(s),
                        diag))
              return false;
        }
    }
  }
  return true;
}

// 5. Reducer soundness: expand(normal_form(e)) == expand(e) and
//    normal_form is idempotent for >= 200 seeded random expressions.
bool criterion_reducer_soundness(std::string& diag) {
  std::vector<Alphabet> alphabets = {
      Alphabet({{"x", Parity::odd}}),
      Alphabet({{"a", Parity::even}, {"x", Parity::odd}}),
      Alphabet({{"x", Parity::odd}, {"y", Parity::odd}}),
      Alphabet({{"a", Parity::even}, {"b", Parity::even}, {"x", Parity::odd}}),
      Alphabet({{"a", Parity::even}, {"x", Parity::odd}, {"y", Parity::odd}}),
  };
  std::mt19937 rng(20240131);
  int checked = 0;
  for (const Alphabet& alphabet : alphabets) {
    SuperBasis basis(alphabet, 5);
    for (int i = 0; i < 42; ++i) {
      LiePoly e = oracles::random_poly(rng, alphabet, 5);
      Coordinates nf = normal_form(e, basis);
      if (!expect(expand(to_lie_poly(nf, basis), alphabet) ==
                      expand(e, alphabet),
                  "expansion mismatch on sample " + std::to_string(checked),
                  diag))
        return false;
      if (!expect(normal_form(to_lie_poly(nf, basis), basis) == nf,
                  "normal form is not idempotent on sample " +
                      std::to_string(checked),
                  diag))
        return false;
      ++checked;
    }
  }
  return expect(checked >= 200,
                "only " + std::to_string(checked) + " samples", diag);
}

// 6. Super-axiom suite over exhaustive parity combinations of random
//    homogeneous arguments of weight <= 4, through both routes.
bool criterion_axioms(std::string& diag) {
  Alphabet alphabet({{"a", Parity::even}, {"x", Parity::odd}});
  std::mt19937 rng(271828);
  for (int round = 0; round < 2; ++round)
    for (Parity pa : {Parity::even, Parity::odd})
      for (Parity pb : {Parity::even, Parity::odd})
        for (Parity pc : {Parity::even, Parity::odd}) {
          std::vector<LiePoly> sample = {
              oracles::random_homogeneous_poly(rng, alphabet, 4, pa, 2),
              oracles::random_homogeneous_poly(rng, alphabet, 4, pb, 2),
              oracles::random_homogeneous_poly(rng, alphabet, 4, pc, 2),
          };
          AxiomReport report = check_axioms(sample, alphabet);
          for (const auto& check : report.checks)
            if (!expect(check.zero_by_normal_form && check.zero_by_expansion,
                        check.description + " with parities " +
                            to_string(pa) + "," + to_string(pb) + "," +
                            to_string(pc),
                        diag))
              return false;
        }
  return true;
}

// 7. Odd-square rule: [x,x,y] = -2[y,x,x] for odd x and either parity of y.
bool criterion_odd_square(std::string& diag) {
  for (Parity py : {Parity::even, Parity::odd}) {
    Alphabet alphabet({{"x", Parity::odd}, {"y", py}});
    SuperBasis basis(alphabet, 3);
    LieTerm x = LieTerm::leaf(alphabet, 0), y = LieTerm::leaf(alphabet, 1);
    Coordinates nf = normal_form(LiePoly(left_normed({x, x, y})), basis);
    if (!expect(to_string(nf, basis) == "-2*[y,x,x]",
                "y " + to_string(py) + ": got " + to_string(nf, basis), diag))
      return false;
  }
  return true;
}

// 8. One odd generator: per-weight sizes 1,1,0,0,0,0 and independence.
bool criterion_one_odd_collapse(std::string& diag) {
  Alphabet alphabet({{"x", Parity::odd}});
  SuperBasis basis(alphabet, 6);
  std::vector<int> sizes;
  for (int n = 1; n <= 6; ++n) sizes.push_back(basis.dimension_at_weight(n));
  if (!expect(sizes == std::vector<int>{1, 1, 0, 0, 0, 0},
              "per-weight sizes are not 1,1,0,0,0,0", diag))
    return false;
  if (!expect(basis.size() == 2, "total dimension is not 2", diag))
    return false;
  for (const auto& r : verify_basis(alphabet, 6, Scheme::hall))
    if (!expect(r.independent, "weight " + std::to_string(r.weight), diag))
      return false;
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"golden identity: collect(baba) = aabb + ab[b,a] + 2a[b,a]b + "
       "[b,a][b,a] + [b,a,a]b",
       1.0, criterion_golden_collect},
      {"census: r^n basic products of weight n, rank r^n (r=2 n<=8, r=3 "
       "n<=6)",
       60.0, criterion_census},
      {"Hall super basis independent at every weight <= 6, four alphabets",
       0.0, criterion_hall_independence},
      {"Hall/Lyndon/Shirshov bases equinumerous and mutually solvable",
       0.0, criterion_scheme_agreement},
      {"reducer soundness + idempotence on >= 200 random expressions",
       30.0, criterion_reducer_soundness},
      {"super axioms hold through normal form and expansion",
       0.0, criterion_axioms},
      {"odd-square rule: [x,x,y] -> -2[y,x,x]", 0.0, criterion_odd_square},
      {"one odd generator collapses to sizes 1,1,0,... (total 2)",
       0.0, criterion_one_odd_collapse},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    std::string diag;
    bool ok = false;
    double seconds = 0.0;
    try {
      auto start = Clock::now();
      ok = c.check(diag);
      seconds = std::chrono::duration<double>(Clock::now() - start).count();
      if (ok && c.budget_seconds > 0 && seconds >= c.budget_seconds) {
        ok = false;
        diag = "exceeded " + std::to_string(c.budget_seconds) + "s budget";
      }
    } catch (const std::exception& e) {
      diag = std::string("exception: ") + e.what();
    }
    std::printf("%s  criterion %zu: %s  (%.2fs)\n", ok ? "PASS" : "FAIL",
                i + 1, c.label.c_str(), seconds);
    if (!ok) {
      if (!diag.empty()) std::printf("      %s\n", diag.c_str());
      ++failures;
    }
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
