// Walk-through: compute every invariant of one squarefree ideal.

#include <iostream>

#include "tspread/tspread.hpp"

int main() {
  using namespace tspread;

  MonomialIdeal I = parse_ideal(R"({"n": 11, "generators": [[2,4],[1,5,7],[3,7,9,11]]})");

  std::cout << "generators:";
  for (const Monomial& g : I.gens) std::cout << ' ' << print_monomial(g);
  std::cout << "\nsupport_index = " << support_index(I) << "  (pd <= " << pd_bound(I) << ")\n"
            << "cosize        = " << cosize(I) << "  (reg <= " << reg_bound(I) << ")\n";

  BettiTable quotient = betti_table(I);
  std::cout << "pd(I) = " << pd(I) << ", reg(I) = " << reg(I) << ", depth(I) = " << depth_of(I)
            << "\n\nBetti diagram of the quotient:\n"
            << render_betti_diagram(quotient);
  return 0;
}
