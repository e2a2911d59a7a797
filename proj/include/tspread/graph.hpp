#pragma once

// Finite simple graphs on vertices 1..n, their edge ideals, induced matching
// numbers, and the circulant-style family whose edge ideals attain the
// regularity bound floor(n/2) + 1 for ideals generated in degree two.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tspread/ideal.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

/// A simple graph: edges are stored as ordered pairs a < b, sorted, without
/// loops or repeats.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  check_ambient(n);
  for (auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("make_graph: loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n)
      throw std::invalid_argument("make_graph: edge endpoint outside 1.." + std::to_string(n));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("make_graph: repeated edge");
  return Graph{n, std::move(edges)};
}

/// The edge ideal: one squarefree degree-two generator x_a x_b per edge.
inline MonomialIdeal edge_ideal(const Graph& g) {
  if (g.edges.empty()) throw std::invalid_argument("edge_ideal: graph has no edges");
  std::vector<Monomial> gens;
  gens.reserve(g.edges.size());
  for (const auto& [a, b] : g.edges) gens.push_back(Monomial::variable(a).with(b));
  return minimalize(g.n, std::move(gens));
}

/// Size of a largest induced matching: a set of pairwise disjoint edges such
/// that no further edge of the graph joins their vertices.  Exhaustive
/// branch-and-bound over edge subsets; intended for graphs with few edges.
inline int induced_matching_number(const Graph& g) {
  if (g.edges.size() > 30)
    throw std::invalid_argument("induced_matching_number: more than 30 edges");
  int best = 0;
  std::vector<std::size_t> chosen;
  auto vertex_mask = [](const std::pair<int, int>& e) {
    return (std::uint64_t{1} << (e.first - 1)) | (std::uint64_t{1} << (e.second - 1));
  };
  auto is_induced = [&](std::uint64_t used, std::size_t count) {
    // induced: every edge inside the union of chosen vertices is chosen
    std::size_t inside = 0;
    for (const auto& e : g.edges)
      if ((vertex_mask(e) & ~used) == 0) ++inside;
    return inside == count;
  };
  auto rec = [&](auto&& self, std::size_t from, std::uint64_t used) -> void {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (std::size_t e = from; e < g.edges.size(); ++e) {
      std::uint64_t m = vertex_mask(g.edges[e]);
      if (m & used) continue;
      chosen.push_back(e);
      if (is_induced(used | m, chosen.size())) self(self, e + 1, used | m);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
  return best;
}

/// Acyclicity test by union-find.
inline bool is_forest(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const auto& [a, b] : g.edges) {
    int ra = find(a);
    int rb = find(b);
    if (ra == rb) return false;
    parent[static_cast<std::size_t>(ra)] = rb;
  }
  return true;
}

/// Regularity of the edge ideal of a forest: induced matching number + 1.
inline int forest_regularity(const Graph& g) {
  if (!is_forest(g)) throw std::invalid_argument("forest_regularity: graph has a cycle");
  if (g.edges.empty()) throw std::invalid_argument("forest_regularity: graph has no edges");
  return induced_matching_number(g) + 1;
}

/// The graph on n >= 2 vertices whose edge ideal reaches regularity
/// floor(n/2) + 1: for even n the perfect matching {i, i + n/2}; for odd n
/// the matching {i, i + floor(n/2)} for i = 1..floor(n/2) plus the edge
/// {1, n}.  Always a forest with induced matching number floor(n/2).
inline Graph corollary_graph(int n) {
  if (n < 2) throw std::invalid_argument("corollary_graph: need n >= 2");
  check_ambient(n);
  std::vector<std::pair<int, int>> edges;
  int half = n / 2;
  for (int i = 1; i <= half; ++i) edges.push_back({i, i + half});
  if (n % 2 == 1) edges.push_back({1, n});
  return make_graph(n, std::move(edges));
}

}  // namespace tspread
