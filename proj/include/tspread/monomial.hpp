#pragma once

// Squarefree monomials over a polynomial ring K[x_1..x_n], represented as
// 64-bit index masks (bit i-1 <=> x_i divides the monomial), together with
// the elementary combinatorics of t-spread monomials: a squarefree monomial
// x_{i_1} x_{i_2} ... x_{i_d} with i_1 < i_2 < ... < i_d is t-spread when
// consecutive support indices differ by at least t.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace tspread {

/// Raised by text/JSON readers on malformed input; everything else that
/// violates a mathematical precondition throws std::invalid_argument.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact binomial coefficient, zero when b < 0 or a < b (negative a included).
/// Intermediate products run in 128 bits; overflow of the final 64-bit value
/// throws instead of wrapping.
inline long long binomial(long long a, long long b) {
  if (b < 0 || a < 0 || a < b) return 0;
  b = std::min(b, a - b);
  unsigned __int128 acc = 1;
  for (long long i = 1; i <= b; ++i) {
    acc = acc * static_cast<unsigned __int128>(a - b + i);
    acc /= static_cast<unsigned __int128>(i);  // exact: C(a-b+i, i) is integral
    if (acc > static_cast<unsigned __int128>(std::numeric_limits<long long>::max()))
      throw std::overflow_error("binomial: value exceeds 64 bits");
  }
  return static_cast<long long>(acc);
}

/// A squarefree monomial with variable indices in 1..64.  The empty support
/// is the monomial 1.  Values are immutable; all mutators return copies.
class Monomial {
 public:
  static constexpr int max_variables = 64;  // widen the mask type to extend

  constexpr Monomial() = default;

  static Monomial one() { return Monomial(); }

  static Monomial variable(int i) {
    check_index(i);
    return Monomial(std::uint64_t{1} << (i - 1));
  }

  static Monomial from_indices(const std::vector<int>& indices) {
    Monomial m;
    for (int i : indices) {
      check_index(i);
      std::uint64_t bit = std::uint64_t{1} << (i - 1);
      if (m.bits_ & bit)
        throw std::invalid_argument("duplicate variable index: " + std::to_string(i));
      m.bits_ |= bit;
    }
    return m;
  }

  static Monomial from_bits(std::uint64_t bits) { return Monomial(bits); }

  std::uint64_t bits() const { return bits_; }

  int degree() const { return std::popcount(bits_); }

  bool contains(int i) const {
    check_index(i);
    return (bits_ >> (i - 1)) & 1;
  }

  /// Largest support index; 0 for the monomial 1.
  int max_index() const {
    return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_);
  }

  /// Smallest support index; 0 for the monomial 1.
  int min_index() const {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
  }

  /// Support as an ascending index list.
  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree()));
    for (std::uint64_t m = bits_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  Monomial with(int i) const {
    check_index(i);
    return Monomial(bits_ | (std::uint64_t{1} << (i - 1)));
  }

  Monomial without(int i) const {
    check_index(i);
    return Monomial(bits_ & ~(std::uint64_t{1} << (i - 1)));
  }

  bool divides(const Monomial& other) const { return (bits_ & ~other.bits_) == 0; }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    return Monomial(a.bits_ | b.bits_);
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    return Monomial(a.bits_ & b.bits_);
  }

  friend Monomial lcm(const std::vector<Monomial>& ms) {
    if (ms.empty()) throw std::invalid_argument("empty lcm");
    Monomial out;
    for (const Monomial& m : ms) out.bits_ |= m.bits_;
    return out;
  }

  bool coprime(const Monomial& other) const { return (bits_ & other.bits_) == 0; }

  /// True when consecutive support indices differ by at least t.  Every
  /// squarefree monomial is 0-spread and 1-spread; monomials of degree <= 1
  /// are t-spread for every t.
  bool is_t_spread(int t) const {
    if (t < 0) throw std::invalid_argument("is_t_spread: t must be >= 0");
    int prev = 0;
    for (std::uint64_t m = bits_; m; m &= m - 1) {
      int i = std::countr_zero(m) + 1;
      if (prev != 0 && i - prev < t) return false;
      prev = i;
    }
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}

  static void check_index(int i) {
    if (i < 1 || i > max_variables)
      throw std::invalid_argument("variable index out of range 1..64: " + std::to_string(i));
  }

  std::uint64_t bits_ = 0;
};

/// Squarefree lexicographic comparison of two monomials of equal degree:
/// u > v exactly when the smallest index where the supports differ lies in u.
/// Comparing monomials of different degrees is an error.
inline std::strong_ordering slex_compare(const Monomial& u, const Monomial& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("slex_compare: monomials must have equal degree");
  std::uint64_t diff = u.bits() ^ v.bits();
  if (diff == 0) return std::strong_ordering::equal;
  std::uint64_t low = diff & (~diff + 1);  // lowest differing index
  return (u.bits() & low) ? std::strong_ordering::greater : std::strong_ordering::less;
}

inline bool slex_greater(const Monomial& u, const Monomial& v) {
  return slex_compare(u, v) == std::strong_ordering::greater;
}

/// Canonical generator order used throughout: ascending degree, then
/// descending squarefree lex within each degree.
inline bool generator_order(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return slex_greater(a, b);
}

/// A duplicate-free list of monomials living in K[x_1..x_n].
struct MonomialSet {
  int n = 0;
  std::vector<Monomial> members;
};

inline void check_ambient(int n) {
  if (n < 1 || n > Monomial::max_variables)
    throw std::invalid_argument("ambient variable count must lie in 1..64, got " +
                                std::to_string(n));
}

inline void check_member(int n, const Monomial& m) {
  if (m.max_index() > n)
    throw std::invalid_argument("monomial uses variable x" + std::to_string(m.max_index()) +
                                " beyond ambient n=" + std::to_string(n));
}

/// Number of t-spread monomials of degree d in n variables:
/// binomial(n - (d-1)(t-1), d).
inline long long count_t_spread_monomials(int n, int d, int t) {
  check_ambient(n);
  if (d < 0) throw std::invalid_argument("count_t_spread_monomials: d must be >= 0");
  if (t < 1) throw std::invalid_argument("count_t_spread_monomials: t must be >= 1");
  return binomial(static_cast<long long>(n) -
                      static_cast<long long>(d - 1) * static_cast<long long>(t - 1),
                  d);
}

/// Largest degree of a t-spread monomial in n variables: floor((n-1)/t) + 1.
inline int max_t_spread_degree(int n, int t) {
  check_ambient(n);
  if (t < 1) throw std::invalid_argument("max_t_spread_degree: t must be >= 1");
  return (n - 1) / t + 1;
}

namespace detail {

inline void enumerate_t_spread_rec(int n, int d, int t, int next_min, Monomial acc,
                                   std::vector<Monomial>& out) {
  if (d == 0) {
    out.push_back(acc);
    return;
  }
  // Leave room for the remaining d-1 indices, each t further to the right.
  for (int i = next_min; i + (d - 1) * t <= n; ++i)
    enumerate_t_spread_rec(n, d - 1, t, i + t, acc.with(i), out);
}

}  // namespace detail

/// All t-spread monomials of degree d in n variables, in descending
/// squarefree-lex order.  Refuses to materialize more than the given cap.
inline MonomialSet enumerate_t_spread_monomials(int n, int d, int t,
                                                long long cap = 2'000'000) {
  long long total = count_t_spread_monomials(n, d, t);
  if (total > cap)
    throw std::invalid_argument("enumerate_t_spread_monomials: " + std::to_string(total) +
                                " monomials exceed enumeration cap");
  MonomialSet out{n, {}};
  out.members.reserve(static_cast<std::size_t>(total));
  // Ascending index tuples come out in descending squarefree-lex order.
  detail::enumerate_t_spread_rec(n, d, t, 1, Monomial::one(), out.members);
  return out;
}

/// The t-spread shadow: all t-spread monomials x_i * w, w in the input set,
/// i outside supp(w), that stay inside K[x_1..x_n].  Members must be t-spread
/// of one common degree.
inline MonomialSet t_shadow(const MonomialSet& set, int t) {
  check_ambient(set.n);
  if (t < 1) throw std::invalid_argument("t_shadow: t must be >= 1");
  if (!set.members.empty()) {
    int d = set.members.front().degree();
    for (const Monomial& m : set.members) {
      check_member(set.n, m);
      if (m.degree() != d)
        throw std::invalid_argument("t_shadow: members must share a common degree");
      if (!m.is_t_spread(t))
        throw std::invalid_argument("t_shadow: members must be t-spread");
    }
  }
  std::vector<std::uint64_t> seen;
  MonomialSet out{set.n, {}};
  for (const Monomial& m : set.members) {
    for (int i = 1; i <= set.n; ++i) {
      if (m.contains(i)) continue;
      Monomial ext = m.with(i);
      if (ext.is_t_spread(t)) seen.push_back(ext.bits());
    }
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  for (std::uint64_t b : seen) out.members.push_back(Monomial::from_bits(b));
  std::sort(out.members.begin(), out.members.end(), generator_order);
  return out;
}

}  // namespace tspread
