// Command-line front end: parse ideals and graphs, compute invariants,
// resolutions, and the closed-form families, and run the reproduction suite.
//
// Exit codes: 0 success, 1 domain error (a mathematical precondition failed),
// 2 parse error (malformed input; the message names the offending token).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tspread/tspread.hpp"

namespace {

using nlohmann::json;
using tspread::BettiTable;
using tspread::Monomial;
using tspread::MonomialIdeal;

// ---------------------------------------------------------------------------
// input plumbing

std::string read_input(const std::string& inline_text, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw tspread::parse_error("cannot read file '" + file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  if (inline_text.empty())
    throw tspread::parse_error("no input given (pass it inline or via --file)");
  return inline_text;
}

MonomialIdeal ideal_argument(const std::string& inline_text, const std::string& file, int n) {
  return tspread::parse_ideal(read_input(inline_text, file), n);
}

json gens_json(const MonomialIdeal& I) {
  json out = json::array();
  for (const Monomial& g : I.gens) out.push_back(g.indices());
  return out;
}

std::string gens_text(const MonomialIdeal& I) {
  std::string out;
  for (const Monomial& g : I.gens) {
    if (!out.empty()) out += ", ";
    out += tspread::print_monomial(g);
  }
  return out;
}

void emit(const json& j, const std::string& format, const std::string& table_text) {
  if (format == "table")
    std::cout << table_text;
  else
    std::cout << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// subcommand bodies

int run_invariants(const MonomialIdeal& I, bool force, const std::string& format) {
  BettiTable q = tspread::betti_table(I, force);
  json j{{"n", I.n},
         {"generators", gens_json(I)},
         {"support_index", tspread::support_index(I)},
         {"bcos", tspread::bcos(I)},
         {"cosize", tspread::cosize(I)},
         {"pd_bound", tspread::pd_bound(I)},
         {"reg_bound", tspread::reg_bound(I)},
         {"pd", q.pd() - 1},
         {"reg", q.reg() + 1},
         {"depth", I.n - (q.pd() - 1)}};
  std::ostringstream t;
  t << "ideal: " << gens_text(I) << "  (n = " << I.n << ")\n"
    << "support index: " << j["support_index"].get<int>() << "\n"
    << "bcos: " << j["bcos"].get<int>() << "\n"
    << "cosize: " << j["cosize"].get<int>() << "\n"
    << "pd bound: " << j["pd_bound"].get<int>() << "\n"
    << "reg bound: " << j["reg_bound"].get<int>() << "\n"
    << "pd: " << j["pd"].get<int>() << "\n"
    << "reg: " << j["reg"].get<int>() << "\n"
    << "depth: " << j["depth"].get<int>() << "\n";
  emit(j, format, t.str());
  return 0;
}

int run_bounds(const MonomialIdeal& I, const std::string& format) {
  json j{{"n", I.n},
         {"generators", gens_json(I)},
         {"support_index", tspread::support_index(I)},
         {"bcos", tspread::bcos(I)},
         {"cosize", tspread::cosize(I)},
         {"pd_bound", tspread::pd_bound(I)},
         {"reg_bound", tspread::reg_bound(I)}};
  std::ostringstream t;
  t << "ideal: " << gens_text(I) << "  (n = " << I.n << ")\n"
    << "support index: " << j["support_index"].get<int>() << "\n"
    << "bcos: " << j["bcos"].get<int>() << "\n"
    << "cosize: " << j["cosize"].get<int>() << "\n"
    << "pd <= " << j["pd_bound"].get<int>() << "\n"
    << "reg <= " << j["reg_bound"].get<int>() << "\n";
  emit(j, format, t.str());
  return 0;
}

int run_betti(const MonomialIdeal& I, bool force, const std::string& subject,
              const std::string& format) {
  BettiTable table = tspread::betti_table(I, force);
  if (subject == "ideal") table = tspread::to_subject(table, BettiTable::Subject::ideal);
  json entries = json::array();
  for (const auto& [key, value] : table.entries)
    entries.push_back(json{{"i", key.first}, {"j", key.second}, {"value", value}});
  json extremal = json::array();
  for (const auto& [key, value] : tspread::extremal_betti(table))
    extremal.push_back(json{{"i", key.first}, {"j", key.second}, {"value", value}});
  json j{{"subject", subject},
         {"entries", entries},
         {"totals", table.totals()},
         {"pd", table.pd()},
         {"reg", table.reg()},
         {"extremal", extremal}};
  emit(j, format, tspread::render_betti_diagram(table));
  return 0;
}

int run_taylor(const MonomialIdeal& I, const std::string& format) {
  tspread::GradedComplex t = tspread::taylor_complex(I);
  json j{{"steps", t.steps}, {"length", t.length()}};
  std::ostringstream out;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    out << "step " << i << ":";
    for (int deg : t.steps[i]) out << ' ' << deg;
    out << '\n';
  }
  emit(j, format, out.str());
  return 0;
}

int run_pascal(int n, int t, const std::string& format) {
  tspread::PascalIdeal p = tspread::pascal_ideal(n, t);
  MonomialIdeal I = p.ideal();
  tspread::HilbertSeries h = tspread::pascal_hilbert_series(n, t);
  json j{{"n", n},
         {"t", t},
         {"residue", p.residue},
         {"layer", p.layer},
         {"generators", gens_json(I)},
         {"total_betti", tspread::pascal_total_betti(n, t)},
         {"ft_vector", tspread::pascal_ft_vector(n, t).entries},
         {"hilbert_numerator", h.numerator},
         {"hilbert_denominator_exponent", h.denominator_exponent}};
  std::optional<MonomialIdeal> L = tspread::pascal_tlex(n, t);
  if (L) {
    j["tlex"] = gens_json(*L);
  } else {
    j["tlex"] = nullptr;
    j["tlex_witness"] =
        json{{"discrepancy", tspread::shadow_discrepancy(n, t)}, {"residue", p.residue}};
  }
  std::ostringstream out;
  out << "generators: " << gens_text(I) << "\n";
  out << "total Betti numbers:";
  for (long long b : tspread::pascal_total_betti(n, t)) out << ' ' << b;
  out << "\nft vector:";
  for (long long f : tspread::pascal_ft_vector(n, t).entries) out << ' ' << f;
  out << "\nHilbert numerator:";
  for (long long c : h.numerator) out << ' ' << c;
  out << "\nHilbert denominator exponent: " << h.denominator_exponent << "\n";
  if (L)
    out << "t-lex companion: " << gens_text(*L) << "\n";
  else
    out << "t-lex companion: none (shadow count " << tspread::shadow_discrepancy(n, t)
        << " != residue " << p.residue << ")\n";
  emit(j, format, out.str());
  return 0;
}

int run_tlex(int n, int t, const std::string& format) {
  std::optional<MonomialIdeal> L = tspread::pascal_tlex(n, t);
  tspread::PascalIdeal p = tspread::pascal_ideal(n, t);
  json j{{"n", n}, {"t", t}, {"exists", L.has_value()}};
  std::ostringstream out;
  if (L) {
    j["generators"] = gens_json(*L);
    out << gens_text(*L) << "\n";
  } else {
    j["witness"] =
        json{{"discrepancy", tspread::shadow_discrepancy(n, t)}, {"residue", p.residue}};
    out << "none (shadow count " << tspread::shadow_discrepancy(n, t) << " != residue "
        << p.residue << ")\n";
  }
  emit(j, format, out.str());
  return 0;
}

int run_ftvector(const MonomialIdeal& I, int t, const std::string& format) {
  tspread::FtVector f = tspread::ft_vector(I, t);
  json j{{"t", t}, {"entries", f.entries}};
  std::ostringstream out;
  out << "f_" << t << " =";
  for (long long e : f.entries) out << ' ' << e;
  out << '\n';
  emit(j, format, out.str());
  return 0;
}

int run_hilbert(const MonomialIdeal& I, int up_to, const std::string& format) {
  if (up_to < 0) up_to = I.n;
  json j{{"n", I.n}, {"values", tspread::hilbert_function(I, up_to)}};
  std::ostringstream out;
  if (tspread::is_regular_sequence(I)) {
    tspread::HilbertSeries h = tspread::hilbert_series_ci(I);
    j["numerator"] = h.numerator;
    j["denominator_exponent"] = h.denominator_exponent;
    out << "numerator:";
    for (long long c : h.numerator) out << ' ' << c;
    out << "\ndenominator exponent: " << h.denominator_exponent << '\n';
  }
  out << "values 0.." << up_to << ":";
  for (long long v : j["values"].get<std::vector<long long>>()) out << ' ' << v;
  out << '\n';
  emit(j, format, out.str());
  return 0;
}

int run_edge_ideal(const tspread::Graph& g, bool force, const std::string& format) {
  MonomialIdeal I = tspread::edge_ideal(g);
  json j = tspread::graph_to_json(g);
  j["generators"] = gens_json(I);
  j["is_forest"] = tspread::is_forest(g);
  j["induced_matching_number"] = tspread::induced_matching_number(g);
  if (tspread::is_forest(g)) j["regularity"] = tspread::forest_regularity(g);
  try {
    j["regularity_resolution"] = tspread::reg(I, force);
  } catch (const std::invalid_argument&) {
    // over the vertex guard: leave the exact value out
  }
  std::ostringstream out;
  out << "edge ideal: " << gens_text(I) << "  (n = " << g.n << ")\n"
      << "forest: " << (tspread::is_forest(g) ? "yes" : "no") << "\n"
      << "induced matching number: " << j["induced_matching_number"].get<int>() << "\n";
  if (j.contains("regularity")) out << "regularity: " << j["regularity"].get<int>() << "\n";
  if (j.contains("regularity_resolution"))
    out << "regularity (resolution): " << j["regularity_resolution"].get<int>() << "\n";
  emit(j, format, out.str());
  return 0;
}

int run_dual(const MonomialIdeal& I, const std::string& format) {
  MonomialIdeal dual = tspread::alexander_dual(I);
  json j{{"n", dual.n}, {"generators", gens_json(dual)}};
  emit(j, format, gens_text(dual) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// reproduction suite

struct Reproduction {
  int passed = 0;
  int failed = 0;

  void check(const std::string& slug, bool ok) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << slug << "\n";
    ++(ok ? passed : failed);
  }
};

Monomial M(std::initializer_list<int> indices) { return Monomial::from_indices(indices); }

void reproduce_examples(Reproduction& r) {
  // --- monomial basics ------------------------------------------------------
  r.check("spread-predicate-on-a-pair", M({2, 4}).is_t_spread(2));
  r.check("max-index-of-the-unit-monomial", Monomial::one().max_index() == 0);

  // --- a three-generator ideal whose minimal resolution has length two ----
  MonomialIdeal three = tspread::minimalize(11, {M({2, 4}), M({1, 5, 7}), M({3, 7, 9, 11})});
  r.check("three-generator-ideal-already-minimal", three.gens.size() == 3);
  r.check("three-generator-ideal-support-index",
          tspread::support_index(three) == 2 && tspread::bcos(three) == 3);
  BettiTable three_ideal =
      tspread::to_subject(tspread::betti_table(three), BettiTable::Subject::ideal);
  r.check("three-generator-ideal-resolution-degrees",
          three_ideal.at(0, 2) == 1 && three_ideal.at(0, 3) == 1 && three_ideal.at(0, 4) == 1 &&
              three_ideal.at(1, 5) == 1 && three_ideal.at(1, 6) == 2 &&
              three_ideal.at(2, 8) == 1 && three_ideal.entries.size() == 6);
  r.check("three-generator-ideal-pd-reg",
          tspread::pd(three) == 2 && tspread::reg(three) == 6);
  r.check("terai-duality-on-the-example",
          tspread::reg(three) == tspread::pd(tspread::alexander_dual(three)) + 1);

  // --- a four-generator ideal with support index three --------------------
  MonomialIdeal four =
      tspread::minimalize(9, {M({1, 4}), M({1, 3, 8}), M({2, 4, 6}), M({1, 3, 5, 7, 9})});
  r.check("four-generator-ideal-support-index", tspread::support_index(four) == 3);
  r.check("four-generator-ideal-support-union",
          tspread::support_family(four).omega ==
              M({1, 2, 3, 4, 5, 6, 7, 8, 9}));
  tspread::GradedComplex taylor = tspread::taylor_complex(four);
  r.check("four-generator-ideal-taylor-degrees",
          taylor.steps[0] == std::vector<int>{2, 3, 3, 5} &&
              taylor.steps[1] == std::vector<int>{4, 4, 6, 6, 6, 8} &&
              taylor.steps[2] == std::vector<int>{6, 7, 8, 9} &&
              taylor.steps[3] == std::vector<int>{9});
  r.check("four-generator-ideal-bounds",
          tspread::pd_bound(four) == 3 && tspread::reg_bound(four) == 7);
  r.check("four-generator-ideal-pd-reg", tspread::pd(four) == 2 && tspread::reg(four) == 5);

  // --- a complete intersection with split supports -------------------------
  MonomialIdeal split = tspread::minimalize(8, {M({8}), M({1, 2}), M({3, 4, 5, 7})});
  r.check("split-support-regular-sequence", tspread::is_regular_sequence(split));
  auto [ci_pd, ci_reg] = tspread::ci_invariants(split);
  r.check("split-support-ci-invariants", ci_pd == 2 && ci_reg == 5);
  r.check("split-support-cosize", tspread::cosize(split) == 4 && tspread::reg(split) == 5);
  r.check("split-support-support-index",
          tspread::support_index(split) == static_cast<int>(split.gens.size()) - 1);

  // --- shadows and the lex order -------------------------------------------
  tspread::MonomialSet tail{10, {M({2, 5, 8}), M({3, 6, 9})}};
  r.check("shadow-of-trailing-generators-empty", tspread::t_shadow(tail, 3).members.empty());
  r.check("lex-order-on-adjacent-generators",
          tspread::slex_greater(M({1, 4, 7}), M({1, 4, 8})));

  // --- the residue-class family -------------------------------------------
  tspread::PascalIdeal p103 = tspread::pascal_ideal(10, 3);
  r.check("residue-family-10-3-generators",
          p103.gens_by_residue == std::vector<Monomial>{M({1, 4, 7, 10}), M({2, 5, 8}),
                                                        M({3, 6, 9})});
  MonomialIdeal p44 = tspread::pascal_ideal(4, 4).ideal();
  bool p44_maximal = p44.gens.size() == 4;
  for (const Monomial& g : p44.gens) p44_maximal = p44_maximal && g.degree() == 1;
  r.check("residue-family-n-equals-t-maximal", p44_maximal);
  r.check("residue-family-regular-sequence", tspread::is_regular_sequence(p103.ideal()));

  MonomialIdeal I103 = p103.ideal();
  BettiTable q103 = tspread::betti_table(I103);
  r.check("residue-family-10-3-total-betti",
          q103.totals() == std::vector<long long>{1, 3, 3, 1});
  r.check("residue-family-10-3-diagram",
          tspread::render_betti_diagram(q103) ==
              "     0 1 2 3\n"
              "Tot: 1 3 3 1\n"
              "  0: 1 - - -\n"
              "  1: - - - -\n"
              "  2: - 2 - -\n"
              "  3: - 1 - -\n"
              "  4: - - 1 -\n"
              "  5: - - 2 -\n"
              "  6: - - - -\n"
              "  7: - - - 1\n");
  r.check("residue-family-10-3-pd-reg-depth",
          tspread::pd(I103) == 2 && tspread::reg(I103) == 8 && tspread::depth_of(I103) == 8);
  auto extremal = tspread::extremal_betti(q103);
  r.check("residue-family-10-3-single-extremal",
          extremal.size() == 1 && extremal[0].first == std::pair<int, int>{3, 10} &&
              extremal[0].second == 1);
  r.check("residue-family-10-3-ft-vector",
          tspread::pascal_ft_vector(10, 3).entries ==
                  std::vector<long long>{1, 10, 28, 18, 0} &&
              tspread::pascal_ft_vector(10, 3) == tspread::ft_vector(I103, 3));
  tspread::HilbertSeries h103 = tspread::pascal_hilbert_series(10, 3);
  r.check("residue-family-10-3-hilbert-series",
          h103.numerator == std::vector<long long>{1, 3, 6, 8, 8, 6, 3, 1} &&
              h103.denominator_exponent == 7 &&
              h103 == tspread::hilbert_series_ci(I103));
  std::optional<MonomialIdeal> L103 = tspread::pascal_tlex(10, 3);
  r.check("residue-family-10-3-tlex",
          L103 && L103->gens == std::vector<Monomial>{M({1, 4, 7}), M({1, 4, 8})} &&
              tspread::is_t_spread_lexsegment(*L103, 3) &&
              tspread::ft_vector(*L103, 3) == tspread::pascal_ft_vector(10, 3));

  // residue t-1: the shadow count equals the residue, so the companion exists
  r.check("residue-t-minus-one-shadow-count",
          tspread::shadow_discrepancy(8, 3) == tspread::pascal_ideal(8, 3).residue &&
              tspread::pascal_tlex(8, 3).has_value());

  bool cm_grid = true;
  for (int n = 2; n <= 12 && cm_grid; ++n)
    for (int t = 1; t <= std::min(n, 4) && cm_grid; ++t) {
      MonomialIdeal I = tspread::pascal_ideal(n, t).ideal();
      auto [pd_ci2, reg_ci2] = tspread::ci_invariants(I);
      cm_grid = pd_ci2 == t - 1 && reg_ci2 == n - (t - 1) &&
                reg_ci2 == tspread::reg_bound_tspread(n, t);
    }
  r.check("residue-family-cohen-macaulay-grid", cm_grid);

  // --- the squarefree complete-degree family -------------------------------
  std::vector<Monomial> v52;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) v52.push_back(M({a, b}));
  MonomialIdeal veronese52 = tspread::minimalize(5, v52);
  r.check("degree-complete-5-2-invariants",
          tspread::pd(veronese52) == 3 && tspread::reg(veronese52) == 2);
  r.check("degree-complete-support-index",
          tspread::support_index(veronese52) == tspread::binomial(4, 2));
  bool pd1 = true;
  for (int n = 3; n <= 7; ++n) {
    std::vector<Monomial> gens;
    for (int skip = 1; skip <= n; ++skip) {
      Monomial g;
      for (int v = 1; v <= n; ++v)
        if (v != skip) g = g.with(v);
      gens.push_back(g);
    }
    pd1 = pd1 && tspread::pd_bound(tspread::minimalize(n, gens)) == 1;
  }
  r.check("degree-complete-codegree-one-bound", pd1);

  // --- the maximal ideal ----------------------------------------------------
  std::vector<Monomial> vars3 = {M({1}), M({2}), M({3})};
  BettiTable koszul3 = tspread::betti_table(tspread::minimalize(3, vars3));
  bool koszul_ok = koszul3.entries.size() == 4;
  for (int i = 0; i <= 3; ++i)
    koszul_ok = koszul_ok && koszul3.at(i, i) == tspread::binomial(3, i);
  r.check("maximal-ideal-koszul-pattern", koszul_ok);

  // --- regularity caps ------------------------------------------------------
  r.check("spread-regularity-cap-10-3", tspread::reg_bound_tspread(10, 3) == 8);
  r.check("spread-regularity-cap-n-1", tspread::reg_bound_tspread(9, 1) == 9);
  bool degree_cap = true;
  for (int n = 4; n <= 12 && degree_cap; ++n)
    for (int t = 1; t <= 3 && degree_cap; ++t) {
      int d = tspread::max_t_spread_degree(n, t);
      if (n < 1 + (d - 1) * t) continue;
      degree_cap = tspread::reg_bound_degree_at_most_d(n, d, t) ==
                   tspread::reg_bound_tspread(n, t);
    }
  r.check("degree-cap-collapses-at-top-degree", degree_cap);
  MonomialIdeal witness = tspread::max_reg_witness(10, 3, 2);
  auto [w_pd, w_reg] = tspread::ci_invariants(witness);
  r.check("degree-cap-witness-10-3-2",
          witness.gens.size() == 4 && w_reg == tspread::reg_bound_degree_at_most_d(10, 3, 2));
  r.check("degree-cap-witness-small-spread",
          tspread::max_reg_witness(6, 2, 4).gens == tspread::pascal_ideal(6, 4).ideal().gens);

  // --- graphs ---------------------------------------------------------------
  r.check("split-pair-graph-even",
          tspread::edge_ideal(tspread::corollary_graph(6)).gens ==
              std::vector<Monomial>{M({1, 4}), M({2, 5}), M({3, 6})});
  r.check("split-pair-graph-odd",
          tspread::edge_ideal(tspread::corollary_graph(5)).gens ==
              std::vector<Monomial>{M({1, 3}), M({1, 5}), M({2, 4})});
  bool forests = true;
  bool family_reg = true;
  for (int n = 2; n <= 12; ++n) {
    tspread::Graph g = tspread::corollary_graph(n);
    forests = forests && tspread::is_forest(g);
    family_reg = family_reg && tspread::forest_regularity(g) == n / 2 + 1;
  }
  r.check("split-pair-graphs-are-forests", forests);
  r.check("split-pair-graph-regularity-family", family_reg);
  r.check("split-pair-graph-odd-matching",
          tspread::induced_matching_number(tspread::corollary_graph(5)) == 2);
  r.check("degree-two-witness-is-even-split-pair-family",
          tspread::max_reg_witness(6, 2, 3).gens ==
              tspread::edge_ideal(tspread::corollary_graph(6)).gens);
}

Monomial random_monomial(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> degree_dist(1, n);
  int d = degree_dist(rng);
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  return Monomial::from_indices({pool.begin(), pool.begin() + d});
}

MonomialIdeal random_plain_ideal(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_dist(2, 10);
  int n = n_dist(rng);
  std::uniform_int_distribution<int> count_dist(1, 5);
  int count = count_dist(rng);
  std::vector<Monomial> gens;
  for (int k = 0; k < count; ++k) gens.push_back(random_monomial(rng, n));
  return tspread::minimalize(n, std::move(gens));
}

Monomial random_spread_monomial(std::mt19937_64& rng, int n, int t, int degree) {
  std::vector<Monomial> all = tspread::enumerate_t_spread_monomials(n, degree, t).members;
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

MonomialIdeal random_spread_ideal(std::mt19937_64& rng, int t) {
  std::uniform_int_distribution<int> n_dist(std::max(2, t), 10);
  int n = n_dist(rng);
  int top = tspread::max_t_spread_degree(n, t);
  std::uniform_int_distribution<int> count_dist(1, 5);
  int count = count_dist(rng);
  std::vector<Monomial> gens;
  for (int k = 0; k < count; ++k) {
    std::uniform_int_distribution<int> degree_dist(1, top);
    gens.push_back(random_spread_monomial(rng, n, t, degree_dist(rng)));
  }
  return tspread::minimalize(n, std::move(gens));
}

// Close random seeds degreewise under shadows and exchange moves so the
// result satisfies the slice-level stability property, then minimalize.
MonomialIdeal random_stable_ideal(std::mt19937_64& rng, int t) {
  std::uniform_int_distribution<int> n_dist(std::max(2, t + 1), 9);
  int n = n_dist(rng);
  int top = tspread::max_t_spread_degree(n, t);
  std::vector<std::set<std::uint64_t>> slice(static_cast<std::size_t>(top) + 1);
  std::uniform_int_distribution<int> seed_count_dist(1, 3);
  int seeds = seed_count_dist(rng);
  for (int k = 0; k < seeds; ++k) {
    std::uniform_int_distribution<int> degree_dist(1, top);
    int d = degree_dist(rng);
    slice[static_cast<std::size_t>(d)].insert(random_spread_monomial(rng, n, t, d).bits());
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 1; j <= top; ++j) {
      auto& s = slice[static_cast<std::size_t>(j)];
      std::vector<std::uint64_t> work(s.begin(), s.end());
      for (std::size_t w = 0; w < work.size(); ++w) {
        Monomial u = Monomial::from_bits(work[w]);
        for (int jj : u.indices())
          for (int i = 1; i < jj; ++i) {
            if (u.contains(i)) continue;
            Monomial v = u.without(jj).with(i);
            if (!v.is_t_spread(t)) continue;
            if (s.insert(v.bits()).second) {
              work.push_back(v.bits());
              changed = true;
            }
          }
      }
      if (j < top) {
        std::vector<Monomial> ms;
        ms.reserve(s.size());
        for (std::uint64_t b : s) ms.push_back(Monomial::from_bits(b));
        if (!ms.empty())
          for (const Monomial& ext : tspread::t_shadow({n, std::move(ms)}, t).members)
            if (slice[static_cast<std::size_t>(j) + 1].insert(ext.bits()).second)
              changed = true;
      }
    }
  }
  std::vector<Monomial> gens;
  for (const auto& s : slice)
    for (std::uint64_t b : s) gens.push_back(Monomial::from_bits(b));
  return tspread::minimalize(n, std::move(gens));
}

void reproduce_fuzz(Reproduction& r, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  bool taylor_ok = true, pd_ok = true, reg_ok = true, terai_ok = true, dual_ok = true;
  bool spread_ok = true, degree2_ok = true, degreed_ok = true, stable_ok = true;
  for (int trial = 0; trial < count; ++trial) {
    int mode = trial % 3;
    int t = trial % 3 + 1;
    MonomialIdeal I = (mode == 0) ? random_plain_ideal(rng) : random_spread_ideal(rng, t);
    if (I.is_unit()) continue;
    BettiTable b = tspread::to_subject(tspread::betti_table(I), BettiTable::Subject::ideal);
    tspread::GradedComplex taylor = tspread::taylor_complex(I);
    for (const auto& [key, value] : b.entries) {
      auto [i, j] = key;
      long long basis = 0;
      if (i <= taylor.length())
        for (int deg : taylor.steps[static_cast<std::size_t>(i)])
          if (deg == j) ++basis;
      taylor_ok = taylor_ok && value <= basis;
    }
    int pd_exact = b.pd();
    int reg_exact = b.reg();
    pd_ok = pd_ok && pd_exact <= tspread::pd_bound(I);
    reg_ok = reg_ok && reg_exact <= tspread::reg_bound(I);
    MonomialIdeal dual = tspread::alexander_dual(I);
    terai_ok = terai_ok && reg_exact == tspread::pd(dual) + 1;
    dual_ok = dual_ok && tspread::alexander_dual(dual).gens == I.gens;
    if (mode != 0) {
      spread_ok = spread_ok && reg_exact <= tspread::reg_bound_tspread(I.n, t);
      int d = 0;
      bool all2 = true;
      for (const Monomial& g : I.gens) {
        d = std::max(d, g.degree());
        all2 = all2 && g.degree() == 2;
      }
      if (all2) degree2_ok = degree2_ok && reg_exact <= I.n / 2 + 1;
      if (I.n >= 1 + (d - 1) * t)
        degreed_ok = degreed_ok && reg_exact <= tspread::reg_bound_degree_at_most_d(I.n, d, t);
    }
    if (trial % 7 == 0) {
      MonomialIdeal S = random_stable_ideal(rng, t);
      if (!S.is_unit()) {
        auto [pd_formula, reg_formula] = tspread::strongly_stable_invariants(S, t);
        stable_ok =
            stable_ok && pd_formula == tspread::pd(S) && reg_formula == tspread::reg(S);
      }
    }
  }
  r.check("fuzz-taylor-ranks-dominate", taylor_ok);
  r.check("fuzz-pd-bound", pd_ok);
  r.check("fuzz-reg-bound", reg_ok);
  r.check("fuzz-terai-duality", terai_ok);
  r.check("fuzz-double-dual-identity", dual_ok);
  r.check("fuzz-spread-regularity-cap", spread_ok);
  r.check("fuzz-degree-two-cap", degree2_ok);
  r.check("fuzz-degree-bounded-cap", degreed_ok);
  r.check("fuzz-strongly-stable-formulas", stable_ok);
}

int run_reproduce(bool fuzz, std::uint64_t seed, int count) {
  Reproduction r;
  reproduce_examples(r);
  if (fuzz) reproduce_fuzz(r, seed, count);
  std::cout << r.passed << " passed, " << r.failed << " failed\n";
  return r.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of squarefree and t-spread monomial ideals"};
  app.require_subcommand(1);

  std::string ideal_text, graph_text, file, format = "json", subject = "quotient";
  int n = 0, t = 1, d = 1, up_to = -1, count = 500;
  std::uint64_t seed = 20240801;
  bool force = false, fuzz = false;

  auto add_ideal_options = [&](CLI::App* sub) {
    sub->add_option("ideal", ideal_text,
                    "ideal as monomial text (x2*x4, x1*x5*x7) or JSON "
                    "({\"n\":..,\"generators\":[[..],..]})");
    sub->add_option("--file", file, "read the ideal from a file instead");
    sub->add_option("--n", n, "ambient variable count (default: inferred)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* inv = app.add_subcommand("invariants",
                                     "support index, bounds, and exact pd/reg/depth");
  add_ideal_options(inv);
  add_format(inv);
  inv->add_flag("--force", force, "lift the vertex-count guard (may be slow)");

  CLI::App* bounds = app.add_subcommand("bounds", "combinatorial bounds only (no resolution)");
  add_ideal_options(bounds);
  add_format(bounds);

  CLI::App* betti = app.add_subcommand("betti", "graded Betti numbers and extremal entries");
  add_ideal_options(betti);
  add_format(betti);
  betti->add_option("--pascal-t", t, "use the residue-class ideal of this spread on --n")
      ->check(CLI::PositiveNumber);
  betti->add_option("--subject", subject, "report the ideal or the quotient")
      ->check(CLI::IsMember({"ideal", "quotient"}));
  betti->add_flag("--force", force, "lift the vertex-count guard (may be slow)");

  CLI::App* taylor = app.add_subcommand("taylor", "degree data of the Taylor complex");
  add_ideal_options(taylor);
  add_format(taylor);

  CLI::App* pascal = app.add_subcommand("pascal", "closed forms for the residue-class family");
  pascal->add_option("--n", n, "variable count")->required();
  pascal->add_option("--t", t, "spread")->required();
  add_format(pascal);

  CLI::App* tlex = app.add_subcommand("tlex", "lex companion with the same face counts");
  tlex->add_option("--n", n, "variable count")->required();
  tlex->add_option("--t", t, "spread")->required();
  add_format(tlex);

  CLI::App* ftv = app.add_subcommand("ftvector", "spread face-count vector of an ideal");
  add_ideal_options(ftv);
  ftv->add_option("--t", t, "spread")->required();
  add_format(ftv);

  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function (and series when CI)");
  add_ideal_options(hilbert);
  hilbert->add_option("--up-to", up_to, "top degree to report (default n)");
  add_format(hilbert);

  CLI::App* edge = app.add_subcommand("edge-ideal", "edge ideal and graph invariants");
  edge->add_option("graph", graph_text, "graph as edge text (1-4,2-5) or JSON");
  edge->add_option("--file", file, "read the graph from a file instead");
  edge->add_option("--n", n, "vertex count (default: inferred)");
  edge->add_flag("--force", force, "lift the vertex-count guard (may be slow)");
  add_format(edge);

  CLI::App* dual = app.add_subcommand("dual", "Alexander dual generators");
  add_ideal_options(dual);
  add_format(dual);

  CLI::App* reproduce = app.add_subcommand("reproduce", "re-run the worked examples");
  reproduce->add_flag("--fuzz", fuzz, "add the randomized property battery");
  reproduce->add_option("--seed", seed, "random seed for --fuzz");
  reproduce->add_option("--count", count, "random ideals for --fuzz")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (inv->parsed()) return run_invariants(ideal_argument(ideal_text, file, n), force, format);
    if (bounds->parsed()) return run_bounds(ideal_argument(ideal_text, file, n), format);
    if (betti->parsed()) {
      MonomialIdeal I = (betti->count("--pascal-t") > 0)
                            ? tspread::pascal_ideal(n, t).ideal()
                            : ideal_argument(ideal_text, file, n);
      return run_betti(I, force, subject, format);
    }
    if (taylor->parsed()) return run_taylor(ideal_argument(ideal_text, file, n), format);
    if (pascal->parsed()) return run_pascal(n, t, format);
    if (tlex->parsed()) return run_tlex(n, t, format);
    if (ftv->parsed()) return run_ftvector(ideal_argument(ideal_text, file, n), t, format);
    if (hilbert->parsed()) return run_hilbert(ideal_argument(ideal_text, file, n), up_to, format);
    if (edge->parsed())
      return run_edge_ideal(tspread::parse_graph(read_input(graph_text, file), n), force, format);
    if (dual->parsed()) return run_dual(ideal_argument(ideal_text, file, n), format);
    if (reproduce->parsed()) return run_reproduce(fuzz, seed, count);
  } catch (const tspread::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
