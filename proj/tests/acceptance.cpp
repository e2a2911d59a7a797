// Acceptance suite: one pass/fail line per criterion on stdout, diagnostics
// on stderr, exit 0 exactly when every criterion holds.  All comparisons are
// exact; there are no tolerances anywhere.

#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "tspread/tspread.hpp"

namespace {

using tspread::BettiTable;
using tspread::Monomial;
using tspread::MonomialIdeal;

Monomial M(std::initializer_list<int> indices) { return Monomial::from_indices(indices); }

struct Criterion {
  std::string name;
  bool ok = true;

  explicit Criterion(std::string n) : name(std::move(n)) {}

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      std::cerr << "  [" << name << "] failed: " << what << "\n";
    }
  }
};

// 1. Three generators in eleven variables: support index, the exact minimal
//    resolution degrees, and pd/reg.
bool criterion_three_generator_ideal() {
  Criterion c("three-generator-ideal");
  MonomialIdeal I = tspread::minimalize(11, {M({2, 4}), M({1, 5, 7}), M({3, 7, 9, 11})});
  c.expect(tspread::support_index(I) == 2, "support index != 2");
  c.expect(oracle::support_index(I) == 2, "subset-scan support index != 2");
  BettiTable b = tspread::to_subject(tspread::betti_table(I), BettiTable::Subject::ideal);
  c.expect(b.pd() == 2, "pd != 2");
  c.expect(b.reg() == 6, "reg != 6");
  // free modules: position 0 = S(-2) + S(-3) + S(-4), position 1 = S(-5) +
  // S(-6)^2, position 2 = S(-8)
  c.expect(b.at(0, 2) == 1 && b.at(0, 3) == 1 && b.at(0, 4) == 1,
           "first step degrees differ");
  c.expect(b.at(1, 5) == 1 && b.at(1, 6) == 2, "second step degrees differ");
  c.expect(b.at(2, 8) == 1, "third step degrees differ");
  c.expect(b.entries.size() == 6, "stray graded entries present");
  return c.ok;
}

// 2. Four generators in nine variables: Taylor complex degree multisets and
//    the exact invariants against their bounds.
bool criterion_four_generator_taylor() {
  Criterion c("four-generator-taylor");
  MonomialIdeal I =
      tspread::minimalize(9, {M({1, 4}), M({1, 3, 8}), M({2, 4, 6}), M({1, 3, 5, 7, 9})});
  tspread::GradedComplex t = tspread::taylor_complex(I);
  c.expect(t.steps.size() == 4, "taylor complex length != 4");
  c.expect(t.steps[0] == std::vector<int>{2, 3, 3, 5}, "step 0 degrees differ");
  c.expect(t.steps[1] == std::vector<int>{4, 4, 6, 6, 6, 8}, "step 1 degrees differ");
  c.expect(t.steps[2] == std::vector<int>{6, 7, 8, 9}, "step 2 degrees differ");
  c.expect(t.steps[3] == std::vector<int>{9}, "step 3 degrees differ");
  c.expect(tspread::support_index(I) == 3, "support index != 3");
  int pd = tspread::pd(I);
  int reg = tspread::reg(I);
  c.expect(pd == 2, "pd != 2");
  c.expect(pd <= 3, "pd exceeds the support-index bound");
  c.expect(reg == 5, "reg != 5");
  c.expect(reg <= 7, "reg exceeds the cosize bound");
  return c.ok;
}

// 3. A complete intersection with split supports in eight variables.
bool criterion_split_support_ci() {
  Criterion c("split-support-complete-intersection");
  MonomialIdeal I = tspread::minimalize(8, {M({8}), M({1, 2}), M({3, 4, 5, 7})});
  c.expect(tspread::is_regular_sequence(I), "not a regular sequence");
  auto [pd, reg] = tspread::ci_invariants(I);
  c.expect(pd == 2 && reg == 5, "ci invariants != (2, 5)");
  c.expect(tspread::support_index(I) == 2, "support index != 2");
  c.expect(tspread::support_index(I) == static_cast<int>(I.gens.size()) - 1,
           "support index != generator count - 1");
  return c.ok;
}

// 4. The residue-class ideal of type (10, 3): diagram bytes, both subjects'
//    pd and reg, the single extremal entry, the lex companion, and the
//    face-count closed form against enumeration.
bool criterion_residue_class_10_3() {
  Criterion c("residue-class-ideal-10-3");
  MonomialIdeal I = tspread::pascal_ideal(10, 3).ideal();
  BettiTable q = tspread::betti_table(I);
  c.expect(tspread::render_betti_diagram(q) ==
               "     0 1 2 3\n"
               "Tot: 1 3 3 1\n"
               "  0: 1 - - -\n"
               "  1: - - - -\n"
               "  2: - 2 - -\n"
               "  3: - 1 - -\n"
               "  4: - - 1 -\n"
               "  5: - - 2 -\n"
               "  6: - - - -\n"
               "  7: - - - 1\n",
           "diagram bytes differ");
  c.expect(q.pd() == 3 && q.reg() == 7, "quotient pd/reg != (3, 7)");
  c.expect(tspread::pd(I) == 2 && tspread::reg(I) == 8, "ideal pd/reg != (2, 8)");
  auto extremal = tspread::extremal_betti(q);
  c.expect(extremal.size() == 1 && extremal[0].first == std::pair<int, int>{3, 10} &&
               extremal[0].second == 1,
           "extremal entries != {(3, 10): 1}");
  std::optional<MonomialIdeal> L = tspread::pascal_tlex(10, 3);
  c.expect(L.has_value(), "lex companion missing");
  if (L) {
    c.expect(L->gens == std::vector<Monomial>{M({1, 4, 7}), M({1, 4, 8})},
             "lex companion generators differ");
    c.expect(tspread::is_t_spread_lexsegment(*L, 3), "companion is not a lex segment");
    c.expect(tspread::ft_vector(*L, 3) == tspread::pascal_ft_vector(10, 3),
             "companion face counts differ");
  }
  c.expect(tspread::pascal_ft_vector(10, 3) == tspread::ft_vector(I, 3),
           "face-count closed form differs from enumeration");
  c.expect(tspread::pascal_ft_vector(10, 3).entries ==
               std::vector<long long>{1, 10, 28, 18, 0},
           "face-count values differ");
  return c.ok;
}

// 5. The complete degree-d families through n = 7: pd = n - d, reg = d,
//    support index binomial(n-1, d), and equality in the pd bound exactly at
//    d in {1, n-1, n}.
bool criterion_complete_degree_families() {
  Criterion c("complete-degree-families");
  for (int n = 2; n <= 7; ++n)
    for (int d = 1; d <= n; ++d) {
      std::vector<Monomial> gens;
      for (const Monomial& m : tspread::enumerate_t_spread_monomials(n, d, 1).members)
        gens.push_back(m);
      MonomialIdeal I = tspread::minimalize(n, std::move(gens));
      std::string tag = "(n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
      int s = tspread::support_index(I);
      c.expect(s == tspread::binomial(n - 1, d), "support index differs at " + tag);
      int pd = tspread::pd(I);
      c.expect(pd == n - d, "pd != n - d at " + tag);
      c.expect(tspread::reg(I) == d, "reg != d at " + tag);
      bool equality = pd == std::min(s, I.n);
      bool should = (d == 1 || d == n - 1 || d == n);
      c.expect(equality == should, "pd-bound equality pattern differs at " + tag);
    }
  return c.ok;
}

// 6. Randomized battery over more than five hundred ideals with n <= 10, at
//    most five generators, and spreads t <= 3.
bool criterion_random_battery() {
  Criterion c("randomized-property-battery");
  std::mt19937_64 rng(20240815);
  int checked = 0;
  int stable_checked = 0;
  for (int trial = 0; trial < 510; ++trial) {
    int t = trial % 3 + 1;
    bool spread = trial % 3 != 0;
    MonomialIdeal I =
        spread ? oracle::random_t_spread_ideal(rng, t) : oracle::random_ideal(rng);
    if (I.is_unit()) continue;
    ++checked;
    std::string tag = " at trial " + std::to_string(trial);
    BettiTable b = tspread::to_subject(tspread::betti_table(I), BettiTable::Subject::ideal);
    tspread::GradedComplex taylor = tspread::taylor_complex(I);
    for (const auto& [key, value] : b.entries) {
      auto [i, j] = key;
      long long basis = 0;
      if (i <= taylor.length())
        for (int deg : taylor.steps[static_cast<std::size_t>(i)])
          if (deg == j) ++basis;
      c.expect(value <= basis, "graded entry exceeds its Taylor count" + tag);
    }
    int pd = b.pd();
    int reg = b.reg();
    c.expect(pd <= std::min(tspread::support_index(I), I.n),
             "pd exceeds min(s, n)" + tag);
    c.expect(tspread::support_index(I) == oracle::support_index(I),
             "support index disagrees with the subset scan" + tag);
    c.expect(reg <= oracle::cosize(I) + 1, "reg exceeds cosize + 1" + tag);
    MonomialIdeal dual = tspread::alexander_dual(I);
    c.expect(reg == tspread::pd(dual) + 1, "duality pd/reg exchange fails" + tag);
    c.expect(tspread::alexander_dual(dual).gens == I.gens && dual.n == I.n,
             "double dual differs" + tag);
    if (spread) {
      c.expect(reg <= tspread::reg_bound_tspread(I.n, t), "spread cap fails" + tag);
      int d = 0;
      bool all_degree_two = true;
      for (const Monomial& g : I.gens) {
        d = std::max(d, g.degree());
        all_degree_two = all_degree_two && g.degree() == 2;
      }
      if (all_degree_two)
        c.expect(reg <= I.n / 2 + 1, "degree-two cap fails" + tag);
      if (I.n >= 1 + (d - 1) * t)
        c.expect(reg <= tspread::reg_bound_degree_at_most_d(I.n, d, t),
                 "degree-bounded cap fails" + tag);
    }
    if (trial % 6 == 0) {
      MonomialIdeal S = oracle::random_strongly_stable_ideal(rng, t);
      if (!S.is_unit()) {
        ++stable_checked;
        auto [pd_formula, reg_formula] = tspread::strongly_stable_invariants(S, t);
        c.expect(pd_formula == tspread::pd(S) && reg_formula == tspread::reg(S),
                 "stable-ideal formulas disagree with homology" + tag);
      }
    }
  }
  c.expect(checked >= 500, "fewer than 500 ideals exercised");
  c.expect(stable_checked >= 50, "fewer than 50 stable ideals exercised");
  return c.ok;
}

// 7. The residue-class grid with n <= 12, t <= 4: total Betti rows, Hilbert
//    series expansion vs inclusion-exclusion, lex-companion existence vs
//    exhaustive search and the residue criterion, and the shadow count vs
//    direct enumeration.
bool criterion_residue_class_grid() {
  Criterion c("residue-class-grid");
  for (int n = 2; n <= 12; ++n)
    for (int t = 1; t <= std::min(n, 4); ++t) {
      std::string tag = " at (n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")";
      tspread::PascalIdeal p = tspread::pascal_ideal(n, t);
      MonomialIdeal I = p.ideal();

      // total Betti numbers: binomial row, checked against the Koszul
      // resolution (exact for a regular sequence) and, within the default
      // guard, against the homological computation
      std::vector<long long> closed = tspread::pascal_total_betti(n, t);
      std::vector<long long> expected = {1};
      for (const auto& step : tspread::koszul_complex(I).steps)
        expected.push_back(static_cast<long long>(step.size()));
      c.expect(closed == expected, "total Betti differs from the Koszul row" + tag);
      bool binomial_row = static_cast<int>(closed.size()) == t + 1;
      for (int i = 0; i <= t && binomial_row; ++i)
        binomial_row = closed[static_cast<std::size_t>(i)] == tspread::binomial(t, i);
      c.expect(binomial_row, "total Betti is not the binomial row" + tag);
      if (n <= 10)
        c.expect(tspread::betti_table(I).totals() == closed,
                 "homological totals differ" + tag);

      // Hilbert series expansion vs the inclusion-exclusion Hilbert function
      c.expect(tspread::pascal_hilbert_series(n, t).expand(n) ==
                   tspread::hilbert_function(I, n),
               "Hilbert expansion differs" + tag);

      // lex-companion existence: closed-form decision vs exhaustive search vs
      // the residue criterion
      std::optional<MonomialIdeal> L = tspread::pascal_tlex(n, t);
      bool exhaustive = oracle::tlex_with_same_ft_exists(I, t);
      int i = p.residue;
      bool residue_criterion = (i == 1 || i == t - 1 || i == t);
      c.expect(L.has_value() == exhaustive, "companion decision differs from search" + tag);
      c.expect(L.has_value() == residue_criterion,
               "companion decision differs from the residue criterion" + tag);
      if (L) {
        c.expect(tspread::is_t_spread_lexsegment(*L, t), "companion not lex" + tag);
        c.expect(tspread::ft_vector(*L, t) == tspread::pascal_ft_vector(n, t),
                 "companion face counts differ" + tag);
      }

      // shadow count vs direct enumeration of the candidate segment's shadow
      if (i != t) {
        int k = p.layer;
        std::vector<Monomial> all = tspread::enumerate_t_spread_monomials(n, k, t).members;
        std::vector<Monomial> candidates(all.begin(), all.begin() + (t - i));
        long long direct =
            static_cast<long long>(oracle::t_shadow(candidates, n, t).size());
        c.expect(tspread::shadow_discrepancy(n, t) == direct,
                 "shadow count differs from enumeration" + tag);
        c.expect((direct == i) == L.has_value(),
                 "shadow count does not witness the companion decision" + tag);
      }
    }
  return c.ok;
}

// 8. Graphs: random forests obey reg = induced matching + 1 (homology vs the
//    exhaustive matching search), and the split-pair family attains
//    floor(n/2) + 1 for 2 <= n <= 12.
bool criterion_forest_regularity() {
  Criterion c("forest-regularity");
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 50; ++trial) {
    tspread::Graph g = oracle::random_forest(rng);
    std::string tag = " at trial " + std::to_string(trial);
    int im = oracle::induced_matching_number(g);
    c.expect(tspread::induced_matching_number(g) == im,
             "matching search disagrees with enumeration" + tag);
    c.expect(tspread::forest_regularity(g) == im + 1, "forest formula differs" + tag);
    c.expect(tspread::reg(tspread::edge_ideal(g)) == im + 1,
             "homological reg differs from matching + 1" + tag);
  }
  for (int n = 2; n <= 12; ++n) {
    std::string tag = " at n = " + std::to_string(n);
    tspread::Graph g = tspread::corollary_graph(n);
    c.expect(tspread::is_forest(g), "family member is not a forest" + tag);
    c.expect(tspread::induced_matching_number(g) == n / 2,
             "family matching number != floor(n/2)" + tag);
    c.expect(tspread::reg(tspread::edge_ideal(g), true) == n / 2 + 1,
             "family regularity != floor(n/2) + 1" + tag);
  }
  return c.ok;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    bool (*run)();
  };
  const Entry criteria[] = {
      {"three-generator-ideal", criterion_three_generator_ideal},
      {"four-generator-taylor", criterion_four_generator_taylor},
      {"split-support-complete-intersection", criterion_split_support_ci},
      {"residue-class-ideal-10-3", criterion_residue_class_10_3},
      {"complete-degree-families", criterion_complete_degree_families},
      {"randomized-property-battery", criterion_random_battery},
      {"residue-class-grid", criterion_residue_class_grid},
      {"forest-regularity", criterion_forest_regularity},
  };
  int failed = 0;
  for (const Entry& e : criteria) {
    bool ok = false;
    try {
      ok = e.run();
    } catch (const std::exception& ex) {
      std::cerr << "  [" << e.name << "] threw: " << ex.what() << "\n";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << e.name << "\n";
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
