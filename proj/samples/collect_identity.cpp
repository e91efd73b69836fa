// Collects the word "baba" over two even generators, first to the worked
// identity and then all the way down to basic products, checking that both
// expand back to the original word.
#include <iostream>

#include "superlie/superlie.hpp"

using namespace superlie;

int main() {
  Alphabet alphabet({{"a", Parity::even}, {"b", Parity::even}});
  BasicSet basics(alphabet, 4);
  AssocWord baba({1, 0, 1, 0});

  CollectedPoly first = collect(baba, basics);
  CollectedPoly full = collect_full(baba, basics);

  std::cout << "baba = " << to_string(first, basics) << "\n";
  std::cout << "     = " << to_string(full, basics) << "  (fully collected)\n";
  std::cout << "expansions agree: "
            << (first.expanded(basics) == AssocPoly(baba) &&
                full.expanded(basics) == AssocPoly(baba))
            << "\n";
}
