// Lists the super basis on one even and one odd generator up to weight 4,
// then reduces a bracket expression to coordinates in it.
#include <iostream>

#include "superlie/superlie.hpp"

using namespace superlie;

int main() {
  Alphabet alphabet = parse_alphabet("a:even x:odd");
  SuperBasis basis(alphabet, 4);

  for (const SuperBasisElement& e : basis.elements())
    std::cout << e.index << ": " << to_string(e.term, alphabet)
              << "  weight=" << e.weight
              << " parity=" << to_string(e.parity) << "\n";

  LiePoly p = parse_expression("[x,x,a] + 2*[a,[a,x]]", alphabet);
  std::cout << "normal form of [x,x,a] + 2*[a,[a,x]]: "
            << to_string(normal_form(p, basis), basis) << "\n";
}
