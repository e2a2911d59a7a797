#pragma once

// Free resolutions of squarefree monomial ideals: the Taylor and Koszul
// complexes as graded degree data, exact graded Betti numbers through reduced
// homology of induced subcomplexes of the Stanley-Reisner complex, the
// derived invariants pd / reg / depth, extremal Betti entries, and a fixed
// plain-text Betti diagram layout.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tspread/ideal.hpp"
#include "tspread/simplicial.hpp"

namespace tspread {

/// Degree data of a graded free complex resolving an ideal: steps[i] is the
/// ascending multiset of twists at homological position i, so steps[0] lists
/// the generator degrees.
struct GradedComplex {
  std::vector<std::vector<int>> steps;

  int length() const { return static_cast<int>(steps.size()) - 1; }
};

/// Taylor complex of a proper ideal with p <= 20 minimal generators: position
/// i holds one basis element of degree deg lcm(F) per (i+1)-subset F of the
/// generators.
inline GradedComplex taylor_complex(const MonomialIdeal& I) {
  require_proper(I, "taylor_complex");
  std::size_t p = I.gens.size();
  if (p > 20) throw std::invalid_argument("taylor_complex: more than 20 generators");
  GradedComplex out;
  out.steps.resize(p);
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << p); ++sub) {
    Monomial l;
    for (std::size_t k = 0; k < p; ++k)
      if ((sub >> k) & 1) l = lcm(l, I.gens[k]);
    out.steps[static_cast<std::size_t>(std::popcount(sub) - 1)].push_back(l.degree());
  }
  for (auto& step : out.steps) std::sort(step.begin(), step.end());
  return out;
}

/// Koszul complex on a monomial regular sequence; minimal, hence its degree
/// data are the graded Betti numbers of the ideal.  Position i holds one
/// basis element of degree sum_{l in F} deg(u_l) per (i+1)-subset F.
inline GradedComplex koszul_complex(const MonomialIdeal& I) {
  if (!is_regular_sequence(I))
    throw std::invalid_argument("koszul_complex: generators are not a regular sequence");
  // supports are pairwise disjoint, so lcm degrees are degree sums
  return taylor_complex(I);
}

/// Graded Betti numbers, either of the ideal I or of the quotient S/I.
struct BettiTable {
  enum class Subject { ideal, quotient };

  Subject subject = Subject::quotient;
  std::map<std::pair<int, int>, long long> entries;  // (i, j) -> beta_{i,j}

  long long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }

  /// Largest homological index carrying a nonzero entry.
  int pd() const {
    int out = 0;
    for (const auto& [key, value] : entries)
      if (value != 0) out = std::max(out, key.first);
    return out;
  }

  /// Largest j - i over nonzero entries.
  int reg() const {
    int out = 0;
    for (const auto& [key, value] : entries)
      if (value != 0) out = std::max(out, key.second - key.first);
    return out;
  }

  /// Total Betti numbers beta_i indexed by homological position.
  std::vector<long long> totals() const {
    std::vector<long long> out(static_cast<std::size_t>(pd()) + 1, 0);
    for (const auto& [key, value] : entries) out[static_cast<std::size_t>(key.first)] += value;
    return out;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// The one conversion between the two resolution subjects:
/// beta_{i,j}(S/I) = beta_{i-1,j}(I) for i >= 1 and beta_{0,0}(S/I) = 1.
inline BettiTable to_subject(const BettiTable& table, BettiTable::Subject subject) {
  if (table.subject == subject) return table;
  BettiTable out;
  out.subject = subject;
  if (subject == BettiTable::Subject::ideal) {
    for (const auto& [key, value] : table.entries) {
      if (key == std::pair<int, int>{0, 0}) {
        if (value != 1)
          throw std::invalid_argument("to_subject: quotient table must have beta_{0,0} = 1");
        continue;
      }
      if (key.first == 0)
        throw std::invalid_argument("to_subject: quotient table has stray entries at i = 0");
      out.entries[{key.first - 1, key.second}] = value;
    }
  } else {
    out.entries[{0, 0}] = 1;
    for (const auto& [key, value] : table.entries)
      out.entries[{key.first + 1, key.second}] = value;
  }
  return out;
}

namespace detail {

/// All unions of subsets of the generator supports (the empty union
/// included).  Restricting the Stanley-Reisner complex to any other vertex
/// set gives a cone: some vertex lies in no generator support inside the set,
/// and with minimal generators every such restriction collapses to that
/// vertex.  Cones carry no reduced homology, so these masks are the only
/// vertex sets that can contribute Betti numbers.
inline std::vector<std::uint64_t> support_union_lattice(const MonomialIdeal& I) {
  std::set<std::uint64_t> lattice = {0};
  for (const Monomial& g : I.gens) {
    std::vector<std::uint64_t> grown;
    grown.reserve(lattice.size());
    for (std::uint64_t m : lattice) grown.push_back(m | g.bits());
    lattice.insert(grown.begin(), grown.end());
  }
  return {lattice.begin(), lattice.end()};
}

/// Betti contributions of one vertex set W: the reduced homology of the
/// induced subcomplex in dimension |W| - i - 1 lands in beta_{i,|W|}(S/I).
inline std::vector<std::pair<std::pair<int, int>, long long>> betti_contributions(
    const std::vector<char>& is_face, std::uint64_t w) {
  int size = std::popcount(w);
  std::vector<std::vector<std::uint64_t>> faces_by_card(static_cast<std::size_t>(size) + 1);
  for (std::uint64_t sub = w;; sub = (sub - 1) & w) {
    if (is_face[sub]) faces_by_card[static_cast<std::size_t>(std::popcount(sub))].push_back(sub);
    if (sub == 0) break;
  }
  std::vector<long long> h = reduced_homology_ranks(std::move(faces_by_card));
  std::vector<std::pair<std::pair<int, int>, long long>> out;
  for (std::size_t c = 0; c < h.size(); ++c)
    if (h[c] != 0) out.push_back({{size - static_cast<int>(c), size}, h[c]});
  return out;
}

inline int betti_vertex_limit() {
  if (const char* env = std::getenv("TSPREAD_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 24) return static_cast<int>(v);
  }
  return 14;
}

}  // namespace detail

/// Exact graded Betti numbers of S/I over a characteristic-zero field, by
/// summing reduced rational homology of induced subcomplexes of the
/// Stanley-Reisner complex over the support-union lattice.  The computation
/// is exponential in n and guarded at n <= 14 by default; the environment
/// variable TSPREAD_MAX_N or force = true lifts the guard (hard cap n <= 24).
inline BettiTable betti_table(const MonomialIdeal& I, bool force = false) {
  require_proper(I, "betti_table");
  int limit = detail::betti_vertex_limit();
  if (!force && I.n > limit)
    throw std::invalid_argument("betti_table: n = " + std::to_string(I.n) +
                                " exceeds the guard (" + std::to_string(limit) +
                                "); raise TSPREAD_MAX_N or force to override");
  std::vector<char> is_face = face_table(I);
  BettiTable out;
  out.subject = BettiTable::Subject::quotient;
  for (std::uint64_t w : detail::support_union_lattice(I))
    for (const auto& [key, value] : detail::betti_contributions(is_face, w))
      out.entries[key] += value;
  for (auto it = out.entries.begin(); it != out.entries.end();)
    it = (it->second == 0) ? out.entries.erase(it) : std::next(it);
  return out;
}

/// Projective dimension of the ideal I (one less than that of S/I).
inline int pd(const MonomialIdeal& I, bool force = false) {
  return betti_table(I, force).pd() - 1;
}

/// Castelnuovo-Mumford regularity of the ideal I (one more than reg(S/I)).
inline int reg(const MonomialIdeal& I, bool force = false) {
  return betti_table(I, force).reg() + 1;
}

/// depth of I as a module: n - pd(I) by the Auslander-Buchsbaum formula.
inline int depth_of(const MonomialIdeal& I, bool force = false) {
  return I.n - pd(I, force);
}

/// Extremal entries of a Betti table: nonzero beta_{i,j} with no nonzero
/// beta_{p,q} satisfying p >= i, q >= j + 1 and q - p >= j - i.  Returned
/// sorted by (i, j) with multiplicities.
inline std::vector<std::pair<std::pair<int, int>, long long>> extremal_betti(
    const BettiTable& table) {
  std::vector<std::pair<std::pair<int, int>, long long>> out;
  for (const auto& [key, value] : table.entries) {
    if (value == 0) continue;
    auto [i, j] = key;
    bool extremal = true;
    for (const auto& [other, other_value] : table.entries) {
      if (other_value == 0) continue;
      auto [p, q] = other;
      if (p >= i && q >= j + 1 && q - p >= j - i) {
        extremal = false;
        break;
      }
    }
    if (extremal) out.push_back({key, value});
  }
  return out;
}

/// Fixed-width text layout of a Betti table: header row of homological
/// indices, a Tot row, then one row per diagram slope j - i with '-' marking
/// zero entries.  The layout is stable byte-for-byte for golden tests.
inline std::string render_betti_diagram(const BettiTable& table) {
  int cols = table.pd();
  int rows = table.reg();
  int width = 1;
  auto widen = [&width](long long v) {
    int w = static_cast<int>(std::to_string(v).size());
    width = std::max(width, w);
  };
  for (int i = 0; i <= cols; ++i) widen(i);
  for (const auto& [key, value] : table.entries) widen(value);
  std::vector<long long> tot = table.totals();
  for (long long v : tot) widen(v);
  int label = std::max<int>(4, static_cast<int>(std::to_string(rows).size()) + 1);
  std::ostringstream out;
  auto pad = [](std::ostringstream& os, const std::string& s, int w) {
    for (int k = static_cast<int>(s.size()); k < w; ++k) os << ' ';
    os << s;
  };
  pad(out, "", label);
  for (int i = 0; i <= cols; ++i) {
    out << ' ';
    pad(out, std::to_string(i), width);
  }
  out << '\n';
  pad(out, "Tot:", label);
  for (int i = 0; i <= cols; ++i) {
    out << ' ';
    pad(out, std::to_string(tot[static_cast<std::size_t>(i)]), width);
  }
  out << '\n';
  for (int r = 0; r <= rows; ++r) {
    pad(out, std::to_string(r) + ":", label);
    for (int i = 0; i <= cols; ++i) {
      long long v = table.at(i, i + r);
      out << ' ';
      pad(out, v == 0 ? "-" : std::to_string(v), width);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace tspread
