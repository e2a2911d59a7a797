#pragma once

// Stanley-Reisner combinatorics: the simplicial complex whose faces are the
// squarefree monomials outside a given ideal, the inverse construction via
// minimal non-faces, and exact reduced homology of induced subcomplexes.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tspread/ideal.hpp"
#include "tspread/linalg.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

/// A simplicial complex on vertex set 1..n, held by its facets (maximal
/// faces).  Vertices may be absent from every facet.
struct SimplicialComplex {
  int n = 0;
  std::vector<Monomial> facets;
};

namespace detail {

inline void check_table_size(int n, const char* who) {
  if (n > 24)
    throw std::invalid_argument(std::string(who) +
                                ": face tables need n <= 24 (2^n bitmap)");
}

}  // namespace detail

/// Characteristic table of the Stanley-Reisner complex of I over all 2^n
/// vertex masks: table[m] is 1 when the squarefree monomial with support m
/// avoids I (is a face), else 0.  Built by marking every superset of each
/// generator support, one bit dimension at a time.
inline std::vector<char> face_table(const MonomialIdeal& I) {
  require_proper(I, "face_table");
  detail::check_table_size(I.n, "face_table");
  std::size_t size = std::size_t{1} << I.n;
  std::vector<char> nonface(size, 0);
  for (const Monomial& g : I.gens) nonface[g.bits()] = 1;
  for (int b = 0; b < I.n; ++b) {
    std::uint64_t bit = std::uint64_t{1} << b;
    for (std::uint64_t m = 0; m < size; ++m)
      if (nonface[m]) nonface[m | bit] = 1;
  }
  for (auto& c : nonface) c = !c;
  return nonface;  // now a face table
}

/// The Stanley-Reisner complex of a proper squarefree ideal, as facets.
inline SimplicialComplex stanley_reisner_complex(const MonomialIdeal& I) {
  require_proper(I, "stanley_reisner_complex");
  std::vector<char> is_face = face_table(I);
  std::uint64_t full = (I.n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << I.n) - 1;
  SimplicialComplex out{I.n, {}};
  for (std::uint64_t m = 0; m < is_face.size(); ++m) {
    if (!is_face[m]) continue;
    bool maximal = true;
    for (std::uint64_t rest = full & ~m; rest; rest &= rest - 1) {
      std::uint64_t ext = m | (rest & (~rest + 1));
      if (is_face[ext]) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.facets.push_back(Monomial::from_bits(m));
  }
  std::sort(out.facets.begin(), out.facets.end(), generator_order);
  return out;
}

/// The squarefree ideal generated by the minimal non-faces of the complex.
/// The full simplex has no non-face and yields the zero ideal, an error.
inline MonomialIdeal complex_to_ideal(const SimplicialComplex& complex) {
  check_ambient(complex.n);
  detail::check_table_size(complex.n, "complex_to_ideal");
  for (const Monomial& f : complex.facets) check_member(complex.n, f);
  std::size_t size = std::size_t{1} << complex.n;
  std::vector<char> is_face(size, 0);
  for (const Monomial& f : complex.facets)
    // every subset of a facet is a face
    for (std::uint64_t sub = f.bits();; sub = (sub - 1) & f.bits()) {
      is_face[sub] = 1;
      if (sub == 0) break;
    }
  std::vector<Monomial> gens;
  for (std::uint64_t m = 0; m < size; ++m) {
    if (is_face[m]) continue;
    bool minimal = true;
    for (std::uint64_t rest = m; rest; rest &= rest - 1) {
      std::uint64_t sub = m & ~(rest & (~rest + 1));
      if (!is_face[sub]) {
        minimal = false;
        break;
      }
    }
    if (minimal) gens.push_back(Monomial::from_bits(m));
  }
  if (gens.empty())
    throw std::invalid_argument("complex_to_ideal: full simplex has no non-faces (zero ideal)");
  return minimalize(complex.n, std::move(gens));
}

/// Ranks of the reduced rational homology groups of a complex given by its
/// faces grouped by cardinality (faces_by_card[c] lists the masks of the
/// c-element faces; faces_by_card[0] must be {0} for the nonempty complex).
/// Entry k of the result is dim H~_{k-1}, i.e. index 0 reports H~ in
/// dimension -1 and index k reports dimension k-1.
inline std::vector<long long> reduced_homology_ranks(
    std::vector<std::vector<std::uint64_t>> faces_by_card) {
  for (auto& level : faces_by_card) std::sort(level.begin(), level.end());
  std::size_t levels = faces_by_card.size();
  std::vector<int> boundary_rank(levels + 1, 0);
  for (std::size_t c = 1; c < levels; ++c) {
    const auto& domain = faces_by_card[c];
    const auto& codomain = faces_by_card[c - 1];
    if (domain.empty() || codomain.empty()) continue;
    SparseIntMatrix mat(static_cast<int>(domain.size()), static_cast<int>(codomain.size()));
    for (std::size_t col = 0; col < domain.size(); ++col) {
      std::uint64_t face = domain[col];
      int position = 0;
      for (std::uint64_t rest = face; rest; rest &= rest - 1, ++position) {
        std::uint64_t facet = face & ~(rest & (~rest + 1));
        auto it = std::lower_bound(codomain.begin(), codomain.end(), facet);
        int row = static_cast<int>(it - codomain.begin());
        // rank(d) = rank(d transposed): store boundary columns as matrix rows
        mat.add_entry(static_cast<int>(col), row, (position % 2 == 0) ? 1 : -1);
      }
    }
    boundary_rank[c] = mat.rank();
  }
  std::vector<long long> h(levels, 0);
  for (std::size_t c = 0; c < levels; ++c) {
    long long faces = static_cast<long long>(faces_by_card[c].size());
    long long incoming = (c + 1 < boundary_rank.size()) ? boundary_rank[c + 1] : 0;
    h[c] = faces - boundary_rank[c] - incoming;
  }
  return h;
}

}  // namespace tspread
