#pragma once

// Pascal ideals: for n >= t >= 1 the t-spread ideal of K[x_1..x_n] generated
// by the t products of the variables in each residue class mod t.  The
// supports partition {1..n}, so the generators are a regular sequence with a
// Koszul minimal resolution, and all invariants have closed forms.  Writing
// n = i + kt with i in {1..t}: i generators have degree k+1 and t-i have
// degree k.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tspread/ideal.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

/// A Pascal ideal of type (n, t), with its residue decomposition n = i + kt
/// (residue i in 1..t) and the generators listed by residue class 1..t.
struct PascalIdeal {
  int n = 0;
  int t = 1;
  int residue = 1;  // i in 1..t with n = i + kt
  int layer = 0;    // k = floor((n-1)/t)
  std::vector<Monomial> gens_by_residue;

  MonomialIdeal ideal() const { return minimalize(n, gens_by_residue); }
};

inline void check_pascal_args(int n, int t, const char* who) {
  check_ambient(n);
  if (t < 1 || t > n)
    throw std::invalid_argument(std::string(who) + ": need 1 <= t <= n");
}

inline PascalIdeal pascal_ideal(int n, int t) {
  check_pascal_args(n, t, "pascal_ideal");
  PascalIdeal out;
  out.n = n;
  out.t = t;
  out.layer = (n - 1) / t;
  out.residue = n - out.layer * t;  // lands in 1..t
  for (int r = 1; r <= t; ++r) {
    Monomial g;
    for (int j = r; j <= n; j += t) g = g.with(j);
    out.gens_by_residue.push_back(g);
  }
  return out;
}

/// Total Betti numbers of S/I for the Pascal ideal of type (n, t): the Koszul
/// resolution on t generators gives binomial(t, i) at position i.
inline std::vector<long long> pascal_total_betti(int n, int t) {
  check_pascal_args(n, t, "pascal_total_betti");
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(t) + 1);
  for (int i = 0; i <= t; ++i) out.push_back(binomial(t, i));
  return out;
}

/// Closed form of the t-spread face-count vector of the Pascal ideal of type
/// (n, t) = (i + kt, t): in degree j it counts all t-spread monomials, minus
/// t-i in degree k (the degree-k generators) and minus i in degree k+1.
inline FtVector pascal_ft_vector(int n, int t) {
  check_pascal_args(n, t, "pascal_ft_vector");
  int k = (n - 1) / t;
  int i = n - k * t;
  FtVector f;
  f.t = t;
  int top = max_t_spread_degree(n, t);  // equals k + 1
  for (int j = 0; j <= top; ++j) {
    long long value = count_t_spread_monomials(n, j, t);
    if (j == k) value -= t - i;
    if (j == k + 1) value -= i;
    f.entries.push_back(value);
  }
  return f;
}

/// A rational Hilbert series numerator(z) / (1-z)^denominator_exponent with
/// integer numerator coefficients (index = power of z).  Stored exactly as
/// produced, without cancelling common (1-z) factors.
struct HilbertSeries {
  std::vector<long long> numerator;
  int denominator_exponent = 0;

  long long numerator_at_one() const {
    long long s = 0;
    for (long long c : numerator) s += c;
    return s;
  }

  /// Cancel (1-z) factors shared by numerator and denominator.
  HilbertSeries normalized() const {
    HilbertSeries out = *this;
    while (out.denominator_exponent > 0 && out.numerator_at_one() == 0) {
      // divide the numerator by (1-z): q_m = p_m + q_{m-1}, dropping the top
      std::vector<long long> q(out.numerator.size() - 1, 0);
      long long carry = 0;
      for (std::size_t m = 0; m + 1 < out.numerator.size(); ++m) {
        carry += out.numerator[m];
        q[m] = carry;
      }
      out.numerator = std::move(q);
      --out.denominator_exponent;
    }
    while (out.numerator.size() > 1 && out.numerator.back() == 0) out.numerator.pop_back();
    return out;
  }

  /// Power-series coefficients in degrees 0..up_to.
  std::vector<long long> expand(int up_to) const {
    if (up_to < 0) throw std::invalid_argument("HilbertSeries::expand: negative degree");
    std::vector<long long> out(static_cast<std::size_t>(up_to) + 1, 0);
    int e = denominator_exponent;
    for (std::size_t m = 0; m < numerator.size(); ++m) {
      if (static_cast<int>(m) > up_to) break;
      if (numerator[m] == 0) continue;
      if (e == 0) {
        out[m] += numerator[m];
        continue;
      }
      for (int q = static_cast<int>(m); q <= up_to; ++q)
        out[static_cast<std::size_t>(q)] +=
            numerator[m] * binomial(q - static_cast<int>(m) + e - 1, e - 1);
    }
    return out;
  }

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

namespace detail {

inline std::vector<long long> polynomial_product(const std::vector<std::vector<long long>>& fs) {
  std::vector<long long> acc = {1};
  for (const auto& f : fs) {
    std::vector<long long> next(acc.size() + f.size() - 1, 0);
    for (std::size_t a = 0; a < acc.size(); ++a)
      for (std::size_t b = 0; b < f.size(); ++b) next[a + b] += acc[a] * f[b];
    acc = std::move(next);
  }
  return acc;
}

}  // namespace detail

/// Hilbert series of S/I for an ideal generated by a monomial regular
/// sequence u_1..u_p:  prod (1 + z + ... + z^{deg u_l - 1}) / (1-z)^{n-p}.
inline HilbertSeries hilbert_series_ci(const MonomialIdeal& I) {
  if (!is_regular_sequence(I))
    throw std::invalid_argument("hilbert_series_ci: generators are not a regular sequence");
  std::vector<std::vector<long long>> factors;
  for (const Monomial& g : I.gens)
    factors.push_back(std::vector<long long>(static_cast<std::size_t>(g.degree()), 1));
  HilbertSeries out;
  out.numerator = detail::polynomial_product(factors);
  out.denominator_exponent = I.n - static_cast<int>(I.gens.size());
  return out;
}

/// Hilbert series of S/I for the Pascal ideal of type (n, t) = (i + kt, t):
/// (1 + ... + z^k)^i (1 + ... + z^{k-1})^{t-i} / (1-z)^{n-t}.
inline HilbertSeries pascal_hilbert_series(int n, int t) {
  check_pascal_args(n, t, "pascal_hilbert_series");
  int k = (n - 1) / t;
  int i = n - k * t;
  std::vector<std::vector<long long>> factors;
  for (int a = 0; a < i; ++a)
    factors.push_back(std::vector<long long>(static_cast<std::size_t>(k) + 1, 1));
  for (int a = 0; a < t - i; ++a)
    factors.push_back(std::vector<long long>(static_cast<std::size_t>(k), 1));
  HilbertSeries out;
  out.numerator = detail::polynomial_product(factors);
  out.denominator_exponent = n - t;
  return out;
}

/// Number of degree-(k+1) t-spread monomials in the shadow of the candidate
/// t-lex companion generators of degree k, for a Pascal ideal of type
/// (n, t) = (i + kt, t) with residue 1 <= i <= t-1:
///   sum_{j=0}^{t-i-1} (i-j) when t-i <= i, else sum_{j=0}^{i-1} (i-j).
/// The companion exists exactly when this count equals i.
inline long long shadow_discrepancy(int n, int t) {
  check_pascal_args(n, t, "shadow_discrepancy");
  int k = (n - 1) / t;
  int i = n - k * t;
  if (i == t)
    throw std::invalid_argument("shadow_discrepancy: residue t has no degree-k generators");
  long long total = 0;
  int upper = (t - i <= i) ? (t - i - 1) : (i - 1);
  for (int j = 0; j <= upper; ++j) total += i - j;
  return total;
}

/// The t-spread lexsegment ideal with the same t-spread face-count vector as
/// the Pascal ideal of type (n, t), when it exists: for residue i = t it is
/// generated by the top t monomials of degree k+1; for residue i in {1, t-1}
/// by the top t-i monomials of degree k; for other residues no such ideal
/// exists and nothing is returned.
inline std::optional<MonomialIdeal> pascal_tlex(int n, int t) {
  check_pascal_args(n, t, "pascal_tlex");
  int k = (n - 1) / t;
  int i = n - k * t;
  if (i != t && i != 1 && i != t - 1) return std::nullopt;
  int degree = (i == t) ? k + 1 : k;
  int count = (i == t) ? t : t - i;
  std::vector<Monomial> all = enumerate_t_spread_monomials(n, degree, t).members;
  if (static_cast<int>(all.size()) < count)
    throw std::logic_error("pascal_tlex: fewer t-spread monomials than generators");
  std::vector<Monomial> gens(all.begin(), all.begin() + count);
  return minimalize(n, std::move(gens));
}

/// A t-spread ideal generated in degrees <= d whose regularity attains the
/// bound n + 1 - max(ceil(n/d), t): the Pascal ideal of type
/// (n, max(ceil(n/d), t)).  Requires n >= 1 + (d-1)t.
inline MonomialIdeal max_reg_witness(int n, int d, int t) {
  check_ambient(n);
  if (t < 1 || t > n || d < 1)
    throw std::invalid_argument("max_reg_witness: need 1 <= t <= n and d >= 1");
  if (n < 1 + (d - 1) * t)
    throw std::invalid_argument("max_reg_witness: need n >= 1 + (d-1)t");
  int m = std::max((n + d - 1) / d, t);
  return pascal_ideal(n, m).ideal();
}

}  // namespace tspread
