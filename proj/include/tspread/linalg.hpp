#pragma once

// Exact rank of sparse integer matrices over the rationals.  Rows are kept as
// sorted (column, value) lists with arbitrary-precision entries; elimination
// is fraction-free (integer cross-multiplication followed by a content gcd),
// so no rounding occurs anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tspread {

using BigInt = boost::multiprecision::cpp_int;

/// One sparse row: entries sorted by column, no explicit zeros.
using SparseRow = std::vector<std::pair<int, BigInt>>;

namespace detail {

// dst = a*dst - b*src, dropping zeros; both inputs sorted by column.
inline SparseRow combine_rows(const SparseRow& dst, const SparseRow& src, const BigInt& a,
                              const BigInt& b) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.emplace_back(dst[i].first, a * dst[i].second);
      ++i;
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, -b * src[j].second);
      ++j;
    } else {
      BigInt v = a * dst[i].second - b * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Divide the row by the gcd of its entries to keep growth in check; row
// scalings do not change the rank.
inline void normalize_content(SparseRow& row) {
  BigInt g = 0;
  for (const auto& [c, v] : row) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& [c, v] : row) v /= g;
}

}  // namespace detail

/// Sparse integer matrix assembled entry by entry.
class SparseIntMatrix {
 public:
  SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions negative");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  /// The nonzero entries of one row, sorted by column.
  SparseRow row(int r) const {
    if (r < 0 || r >= rows_) throw std::invalid_argument("matrix row out of range");
    SparseRow out;
    for (const auto& [c, v] : data_[static_cast<std::size_t>(r)])
      if (v != 0) out.emplace_back(c, v);
    return out;
  }

  void add_entry(int r, int c, long long v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::invalid_argument("matrix entry out of range");
    data_[static_cast<std::size_t>(r)][c] += v;
  }

  /// Exact rank over the rationals.  Rows are reduced in index order; each
  /// row's pivot is its first surviving nonzero column, so pivot selection is
  /// deterministic row-major first-nonzero.
  int rank() const {
    std::map<int, SparseRow> pivots;  // leading column -> reduced pivot row
    for (const auto& row_map : data_) {
      SparseRow row;
      row.reserve(row_map.size());
      for (const auto& [c, v] : row_map)
        if (v != 0) row.emplace_back(c, v);
      while (!row.empty()) {
        int lead = row.front().first;
        auto it = pivots.find(lead);
        if (it == pivots.end()) {
          detail::normalize_content(row);
          pivots.emplace(lead, std::move(row));
          break;
        }
        const SparseRow& p = it->second;
        row = detail::combine_rows(row, p, p.front().second, row.front().second);
        detail::normalize_content(row);
      }
    }
    return static_cast<int>(pivots.size());
  }

 private:
  int rows_;
  int cols_;
  std::vector<std::map<int, BigInt>> data_;
};

}  // namespace tspread
