#pragma once

// Squarefree monomial ideals: minimal generators, the combinatorial support
// invariants that bound projective dimension and regularity, t-spread
// membership slices, stability predicates, and Alexander duality.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tspread/monomial.hpp"

namespace tspread {

/// A squarefree monomial ideal of K[x_1..x_n] held by its unique minimal
/// generating set, sorted ascending by degree and descending squarefree-lex
/// within a degree.  The unit ideal is represented by the single generator 1;
/// the zero ideal is not representable and rejected at construction.
struct MonomialIdeal {
  int n = 0;
  std::vector<Monomial> gens;

  bool is_unit() const { return gens.size() == 1 && gens.front().degree() == 0; }
};

/// Build an ideal from an arbitrary generator list: deduplicates, drops
/// non-minimal generators, sorts.  An empty list (the zero ideal) is an error.
inline MonomialIdeal minimalize(int n, std::vector<Monomial> raw) {
  check_ambient(n);
  if (raw.empty()) throw std::invalid_argument("minimalize: no generators (zero ideal)");
  for (const Monomial& m : raw) check_member(n, m);
  std::sort(raw.begin(), raw.end(),
            [](const Monomial& a, const Monomial& b) { return a.bits() < b.bits(); });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<Monomial> keep;
  for (const Monomial& m : raw) {
    bool minimal = true;
    for (const Monomial& other : raw)
      if (other != m && other.divides(m)) {
        minimal = false;
        break;
      }
    if (minimal) keep.push_back(m);
  }
  std::sort(keep.begin(), keep.end(), generator_order);
  return MonomialIdeal{n, std::move(keep)};
}

inline void require_proper(const MonomialIdeal& I, const char* who) {
  if (I.gens.empty()) throw std::invalid_argument(std::string(who) + ": zero ideal");
  if (I.is_unit()) throw std::invalid_argument(std::string(who) + ": unit ideal");
}

/// Membership by divisibility: m lies in I iff some generator divides it.
inline bool contains(const MonomialIdeal& I, const Monomial& m) {
  for (const Monomial& g : I.gens)
    if (g.divides(m)) return true;
  return false;
}

/// The family of generator supports together with their union.
struct SupportFamily {
  std::vector<Monomial> omegas;
  Monomial omega;
};

inline SupportFamily support_family(const MonomialIdeal& I) {
  require_proper(I, "support_family");
  SupportFamily f;
  f.omegas = I.gens;
  for (const Monomial& g : I.gens) f.omega = lcm(f.omega, g);
  return f;
}

namespace detail {

// A union of k generator supports misses part of the total support exactly
// when all k generators avoid one common variable, so the largest size of a
// non-covering family equals the largest count, over variables in the total
// support, of generators avoiding that variable.
inline int max_avoidance_count(const MonomialIdeal& I) {
  Monomial omega;
  for (const Monomial& g : I.gens) omega = lcm(omega, g);
  int best = 0;
  for (int v : omega.indices()) {
    int avoid = 0;
    for (const Monomial& g : I.gens)
      if (!g.contains(v)) ++avoid;
    best = std::max(best, avoid);
  }
  return best;
}

}  // namespace detail

/// Support index s(I): the least i such that every union of i+1 distinct
/// generator supports equals the full support of the ideal.
inline int support_index(const MonomialIdeal& I) {
  require_proper(I, "support_index");
  return detail::max_avoidance_count(I);
}

/// bcos(I): the least cardinality ell such that every choice of ell generator
/// supports covers the full support; always support_index + 1.
inline int bcos(const MonomialIdeal& I) {
  require_proper(I, "bcos");
  return detail::max_avoidance_count(I) + 1;
}

namespace detail {

// Smallest number of generator supports whose union is the full support.
// Depth-first over generator indices with a suffix-union bound for pruning.
inline bool cover_search(const std::vector<std::uint64_t>& supports,
                         const std::vector<std::uint64_t>& suffix_union,
                         std::uint64_t target, std::uint64_t acc, std::size_t idx,
                         int remaining) {
  if (acc == target) return true;
  if (remaining == 0 || idx == supports.size()) return false;
  if ((acc | suffix_union[idx]) != target) return false;
  // choose supports[idx] or skip it
  if (cover_search(supports, suffix_union, target, acc | supports[idx], idx + 1,
                   remaining - 1))
    return true;
  return cover_search(supports, suffix_union, target, acc, idx + 1, remaining);
}

inline int min_covering_count(const MonomialIdeal& I) {
  std::vector<std::uint64_t> supports;
  supports.reserve(I.gens.size());
  std::uint64_t target = 0;
  for (const Monomial& g : I.gens) {
    supports.push_back(g.bits());
    target |= g.bits();
  }
  std::vector<std::uint64_t> suffix_union(supports.size() + 1, 0);
  for (std::size_t i = supports.size(); i-- > 0;)
    suffix_union[i] = suffix_union[i + 1] | supports[i];
  for (int ell = 1; ell <= static_cast<int>(supports.size()); ++ell)
    if (cover_search(supports, suffix_union, target, 0, 0, ell)) return ell;
  throw std::logic_error("min_covering_count: full generator set fails to cover");
}

}  // namespace detail

/// cosize(I) = deg lcm(G(I)) minus the least number of generators whose
/// supports already cover the full support.
inline int cosize(const MonomialIdeal& I) {
  require_proper(I, "cosize");
  Monomial omega;
  for (const Monomial& g : I.gens) omega = lcm(omega, g);
  return omega.degree() - detail::min_covering_count(I);
}

/// Upper bound for the projective dimension: min(support_index, n).
inline int pd_bound(const MonomialIdeal& I) {
  return std::min(support_index(I), I.n);
}

/// Upper bound for the Castelnuovo-Mumford regularity: cosize + 1.
inline int reg_bound(const MonomialIdeal& I) { return cosize(I) + 1; }

/// Squarefree monomials form a regular sequence exactly when their supports
/// are pairwise disjoint.
inline bool is_regular_sequence(const MonomialIdeal& I) {
  require_proper(I, "is_regular_sequence");
  for (std::size_t a = 0; a < I.gens.size(); ++a)
    for (std::size_t b = a + 1; b < I.gens.size(); ++b)
      if (!I.gens[a].coprime(I.gens[b])) return false;
  return true;
}

/// (pd, reg) of an ideal generated by a monomial regular sequence of length p
/// with total support Omega: the Koszul complex on the generators is the
/// minimal free resolution, so pd = p - 1 and reg = |Omega| - (p - 1).
inline std::pair<int, int> ci_invariants(const MonomialIdeal& I) {
  if (!is_regular_sequence(I))
    throw std::invalid_argument("ci_invariants: generators are not a regular sequence");
  int p = static_cast<int>(I.gens.size());
  int omega_deg = 0;
  for (const Monomial& g : I.gens) omega_deg += g.degree();
  return {p - 1, omega_deg - (p - 1)};
}

/// Regularity bound n - (t - 1) valid for every t-spread ideal of K[x_1..x_n].
inline int reg_bound_tspread(int n, int t) {
  check_ambient(n);
  if (t < 1 || t > n) throw std::invalid_argument("reg_bound_tspread: need 1 <= t <= n");
  return n - (t - 1);
}

/// Regularity bound n + 1 - max(ceil(n/d), t) for t-spread ideals generated
/// in degrees <= d; requires n >= 1 + (d-1)t so that degree-d t-spread
/// monomials exist.
inline int reg_bound_degree_at_most_d(int n, int d, int t) {
  check_ambient(n);
  if (t < 1 || t > n)
    throw std::invalid_argument("reg_bound_degree_at_most_d: need 1 <= t <= n");
  if (d < 1) throw std::invalid_argument("reg_bound_degree_at_most_d: d must be >= 1");
  if (n < 1 + (d - 1) * t)
    throw std::invalid_argument("reg_bound_degree_at_most_d: need n >= 1 + (d-1)t");
  int ceil_nd = (n + d - 1) / d;
  return n + 1 - std::max(ceil_nd, t);
}

/// All t-spread monomials of degree j lying in I, descending squarefree-lex.
inline std::vector<Monomial> t_spread_part(const MonomialIdeal& I, int j, int t) {
  require_proper(I, "t_spread_part");
  std::vector<Monomial> out;
  if (j < 0 || j > max_t_spread_degree(I.n, t)) return out;
  for (const Monomial& m : enumerate_t_spread_monomials(I.n, j, t).members)
    if (contains(I, m)) out.push_back(m);
  return out;
}

/// The t-spread face-count vector of a proper ideal: entry j counts the
/// t-spread monomials of degree j that avoid I, for j = 0 .. largest t-spread
/// degree.  (With the classical labels the entries read f_{t,-1}, f_{t,0},
/// ...: entry 0 is always 1 for a proper ideal.)
struct FtVector {
  int t = 1;
  std::vector<long long> entries;

  friend bool operator==(const FtVector&, const FtVector&) = default;
};

inline FtVector ft_vector(const MonomialIdeal& I, int t) {
  require_proper(I, "ft_vector");
  if (t < 1) throw std::invalid_argument("ft_vector: t must be >= 1");
  FtVector f;
  f.t = t;
  int top = max_t_spread_degree(I.n, t);
  for (int j = 0; j <= top; ++j) {
    long long total = count_t_spread_monomials(I.n, j, t);
    long long inside = static_cast<long long>(t_spread_part(I, j, t).size());
    f.entries.push_back(total - inside);
  }
  return f;
}

inline bool is_t_spread_ideal(const MonomialIdeal& I, int t) {
  require_proper(I, "is_t_spread_ideal");
  if (t < 1) throw std::invalid_argument("is_t_spread_ideal: t must be >= 1");
  for (const Monomial& g : I.gens)
    if (!g.is_t_spread(t)) return false;
  return true;
}

/// A t-spread ideal is t-spread strongly stable when every degree slice
/// [I_j]_t is closed under the exchange moves x_i * (u / x_jj) for i < jj
/// that keep the monomial t-spread.
inline bool is_t_spread_strongly_stable(const MonomialIdeal& I, int t) {
  if (!is_t_spread_ideal(I, t))
    throw std::invalid_argument("is_t_spread_strongly_stable: generators must be t-spread");
  int top = max_t_spread_degree(I.n, t);
  for (int j = 1; j <= top; ++j) {
    std::vector<Monomial> slice = t_spread_part(I, j, t);
    std::set<std::uint64_t> in_slice;
    for (const Monomial& m : slice) in_slice.insert(m.bits());
    for (const Monomial& u : slice)
      for (int jj : u.indices())
        for (int i = 1; i < jj; ++i) {
          if (u.contains(i)) continue;
          Monomial v = u.without(jj).with(i);
          if (!v.is_t_spread(t)) continue;
          if (!in_slice.count(v.bits())) return false;
        }
  }
  return true;
}

/// A t-spread ideal is a t-spread lexsegment ideal when every degree slice
/// [I_j]_t is an initial segment of the degree-j t-spread monomials in the
/// descending squarefree-lex order.
inline bool is_t_spread_lexsegment(const MonomialIdeal& I, int t) {
  if (!is_t_spread_ideal(I, t))
    throw std::invalid_argument("is_t_spread_lexsegment: generators must be t-spread");
  int top = max_t_spread_degree(I.n, t);
  for (int j = 1; j <= top; ++j) {
    std::vector<Monomial> slice = t_spread_part(I, j, t);
    if (slice.empty()) continue;
    std::vector<Monomial> all = enumerate_t_spread_monomials(I.n, j, t).members;
    for (std::size_t k = 0; k < slice.size(); ++k)
      if (slice[k] != all[k]) return false;  // both lists are slex-descending
  }
  return true;
}

/// (pd, reg) of a t-spread strongly stable ideal by the generator formulas
/// pd = max over generators of (max_index(u) - t*(deg u - 1) - 1) and
/// reg = max generator degree.
inline std::pair<int, int> strongly_stable_invariants(const MonomialIdeal& I, int t) {
  if (!is_t_spread_strongly_stable(I, t))
    throw std::invalid_argument(
        "strongly_stable_invariants: ideal is not t-spread strongly stable");
  int pd = 0;
  int reg = 0;
  for (const Monomial& g : I.gens) {
    pd = std::max(pd, g.max_index() - t * (g.degree() - 1) - 1);
    reg = std::max(reg, g.degree());
  }
  return {pd, reg};
}

/// Alexander dual: generators are the minimal transversals (hitting sets) of
/// the family of generator supports.  Applying it twice returns the ideal.
inline MonomialIdeal alexander_dual(const MonomialIdeal& I) {
  require_proper(I, "alexander_dual");
  std::vector<std::uint64_t> trans = {0};  // minimal transversals so far
  for (const Monomial& g : I.gens) {
    std::uint64_t s = g.bits();
    std::vector<std::uint64_t> next;
    for (std::uint64_t tmask : trans) {
      if (tmask & s) {
        next.push_back(tmask);
        continue;
      }
      for (std::uint64_t rest = s; rest; rest &= rest - 1)
        next.push_back(tmask | (rest & (~rest + 1)));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    // keep only minimal masks under inclusion
    std::vector<std::uint64_t> minimal;
    for (std::uint64_t a : next) {
      bool keep = true;
      for (std::uint64_t b : next)
        if (b != a && (b & ~a) == 0) {
          keep = false;
          break;
        }
      if (keep) minimal.push_back(a);
    }
    trans = std::move(minimal);
  }
  std::vector<Monomial> gens;
  gens.reserve(trans.size());
  for (std::uint64_t m : trans) gens.push_back(Monomial::from_bits(m));
  return minimalize(I.n, std::move(gens));
}

/// Values of the Hilbert function of S/I in degrees 0..up_to, by
/// inclusion-exclusion over subsets of the generators (counts all monomials,
/// not only squarefree ones).  Exponential in |G(I)|; capped at 20 generators.
inline std::vector<long long> hilbert_function(const MonomialIdeal& I, int up_to) {
  require_proper(I, "hilbert_function");
  if (up_to < 0) throw std::invalid_argument("hilbert_function: negative degree");
  std::size_t p = I.gens.size();
  if (p > 20) throw std::invalid_argument("hilbert_function: more than 20 generators");
  std::vector<long long> h(static_cast<std::size_t>(up_to) + 1, 0);
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << p); ++sub) {
    Monomial l;
    for (std::size_t k = 0; k < p; ++k)
      if ((sub >> k) & 1) l = lcm(l, I.gens[k]);
    int sign = (std::popcount(sub) % 2 == 0) ? 1 : -1;
    for (int q = l.degree(); q <= up_to; ++q)
      h[static_cast<std::size_t>(q)] += sign * binomial(q - l.degree() + I.n - 1, I.n - 1);
  }
  return h;
}

}  // namespace tspread
