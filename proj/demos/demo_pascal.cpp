// Walk-through: closed-form data of a Pascal ideal against the exact oracle.

#include <iostream>

#include "tspread/tspread.hpp"

int main() {
  using namespace tspread;

  const int n = 10;
  const int t = 3;
  PascalIdeal P = pascal_ideal(n, t);

  std::cout << "Pascal ideal of type (" << n << ", " << t << "), generators:";
  for (const Monomial& g : P.gens_by_residue) std::cout << ' ' << print_monomial(g);
  std::cout << '\n';

  auto [proj_dim, regularity] = ci_invariants(P.ideal());
  std::cout << "pd = " << proj_dim << ", reg = " << regularity << '\n';

  std::cout << "f_t-vector:";
  for (long long e : pascal_ft_vector(n, t).entries) std::cout << ' ' << e;
  std::cout << '\n';

  HilbertSeries series = pascal_hilbert_series(n, t);
  std::cout << "Hilbert numerator:";
  for (long long c : series.numerator) std::cout << ' ' << c;
  std::cout << "   / (1-z)^" << series.denominator_exponent << '\n';

  if (auto companion = pascal_tlex(n, t)) {
    std::cout << "t-lex companion:";
    for (const Monomial& g : companion->gens) std::cout << ' ' << print_monomial(g);
    std::cout << '\n';
  }

  std::cout << "\nBetti diagram (exact oracle):\n" << render_betti_diagram(betti_table(P.ideal()));
  return 0;
}
