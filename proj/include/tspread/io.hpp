#pragma once

// Text and JSON readers/writers for monomials, ideals, and graphs.
//
// Monomial text:  x3*x7*x9   (ascending indices; the literal 1 is the empty
//                             monomial)
// Ideal text:     comma-separated monomials, e.g.  x2*x4, x1*x5*x7
// Ideal JSON:     {"n": 11, "generators": [[2,4],[1,5,7],[3,7,9,11]]}
// Graph text:     1-4,2-5,3-6
// Graph JSON:     {"n": 6, "edges": [[1,4],[2,5],[3,6]]}
//
// Malformed input raises parse_error naming the offending token.

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "tspread/graph.hpp"
#include "tspread/ideal.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

using json = nlohmann::json;

inline std::string print_monomial(const Monomial& m) {
  if (m.degree() == 0) return "1";
  std::string out;
  for (int i : m.indices()) {
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
  }
  return out;
}

namespace detail {

inline std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline int parse_index(const std::string& token, const std::string& factor) {
  if (factor.size() < 2 || factor[0] != 'x')
    throw parse_error("bad factor '" + factor + "' in monomial '" + token + "'");
  for (std::size_t k = 1; k < factor.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(factor[k])))
      throw parse_error("bad factor '" + factor + "' in monomial '" + token + "'");
  long v = std::strtol(factor.c_str() + 1, nullptr, 10);
  if (v < 1 || v > Monomial::max_variables)
    throw parse_error("variable index out of range in '" + factor + "'");
  return static_cast<int>(v);
}

}  // namespace detail

inline Monomial parse_monomial(const std::string& text) {
  std::string token = detail::strip(text);
  if (token.empty()) throw parse_error("empty monomial token");
  if (token == "1") return Monomial::one();
  Monomial m;
  std::size_t pos = 0;
  int prev = 0;
  while (pos <= token.size()) {
    std::size_t star = token.find('*', pos);
    std::string factor =
        detail::strip(token.substr(pos, (star == std::string::npos ? token.size() : star) - pos));
    int i = detail::parse_index(token, factor);
    if (i <= prev)
      throw parse_error("indices must be strictly ascending in monomial '" + token + "'");
    prev = i;
    m = m.with(i);
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return m;
}

inline std::vector<Monomial> parse_monomial_list(const std::string& text) {
  std::vector<Monomial> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string token = text.substr(pos, (comma == std::string::npos ? text.size() : comma) - pos);
    out.push_back(parse_monomial(token));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

/// Ideal from text (comma-separated monomials).  The ambient n is the given
/// override, or else the largest index used.
inline MonomialIdeal parse_ideal_text(const std::string& text, int n_override = 0) {
  std::vector<Monomial> gens = parse_monomial_list(text);
  int n = n_override;
  if (n == 0)
    for (const Monomial& m : gens) n = std::max(n, m.max_index());
  if (n == 0) throw parse_error("cannot infer variable count from '" + text + "'");
  return minimalize(n, std::move(gens));
}

inline MonomialIdeal ideal_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
    throw parse_error("ideal JSON must be an object with keys 'n' and 'generators'");
  if (!j["n"].is_number_integer()) throw parse_error("ideal JSON: 'n' must be an integer");
  int n = j["n"].get<int>();
  if (!j["generators"].is_array())
    throw parse_error("ideal JSON: 'generators' must be an array");
  std::vector<Monomial> gens;
  for (const json& row : j["generators"]) {
    if (!row.is_array()) throw parse_error("ideal JSON: each generator must be an index array");
    std::vector<int> indices;
    for (const json& v : row) {
      if (!v.is_number_integer())
        throw parse_error("ideal JSON: generator index '" + v.dump() + "' is not an integer");
      indices.push_back(v.get<int>());
    }
    try {
      gens.push_back(Monomial::from_indices(indices));
    } catch (const std::invalid_argument& e) {
      throw parse_error(std::string("ideal JSON: ") + e.what());
    }
  }
  try {
    return minimalize(n, std::move(gens));
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("ideal JSON: ") + e.what());
  }
}

inline MonomialIdeal parse_ideal(const std::string& text, int n_override = 0) {
  std::string stripped = detail::strip(text);
  if (!stripped.empty() && stripped.front() == '{') {
    json j = json::parse(stripped, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON: " + stripped);
    return ideal_from_json(j);
  }
  return parse_ideal_text(stripped, n_override);
}

inline json ideal_to_json(const MonomialIdeal& I) {
  json gens = json::array();
  for (const Monomial& g : I.gens) gens.push_back(g.indices());
  return json{{"n", I.n}, {"generators", gens}};
}

inline Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw parse_error("graph JSON must be an object with keys 'n' and 'edges'");
  if (!j["n"].is_number_integer()) throw parse_error("graph JSON: 'n' must be an integer");
  if (!j["edges"].is_array()) throw parse_error("graph JSON: 'edges' must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw parse_error("graph JSON: edge '" + e.dump() + "' is not a pair of integers");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  try {
    return make_graph(j["n"].get<int>(), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("graph JSON: ") + e.what());
  }
}

inline Graph parse_graph_text(const std::string& text, int n_override = 0) {
  std::vector<std::pair<int, int>> edges;
  std::size_t pos = 0;
  std::string stripped = detail::strip(text);
  while (pos <= stripped.size()) {
    std::size_t comma = stripped.find(',', pos);
    std::string token = detail::strip(
        stripped.substr(pos, (comma == std::string::npos ? stripped.size() : comma) - pos));
    std::size_t dash = token.find('-');
    if (token.empty() || dash == std::string::npos)
      throw parse_error("bad edge token '" + token + "' (expected a-b)");
    std::string left = detail::strip(token.substr(0, dash));
    std::string right = detail::strip(token.substr(dash + 1));
    auto to_int = [&token](const std::string& s) {
      if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) {
            return std::isdigit(c);
          }))
        throw parse_error("bad vertex '" + s + "' in edge token '" + token + "'");
      return static_cast<int>(std::strtol(s.c_str(), nullptr, 10));
    };
    edges.push_back({to_int(left), to_int(right)});
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  int n = n_override;
  if (n == 0)
    for (const auto& [a, b] : edges) n = std::max({n, a, b});
  try {
    return make_graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("graph text: ") + e.what());
  }
}

inline Graph parse_graph(const std::string& text, int n_override = 0) {
  std::string stripped = detail::strip(text);
  if (!stripped.empty() && stripped.front() == '{') {
    json j = json::parse(stripped, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON: " + stripped);
    return graph_from_json(j);
  }
  return parse_graph_text(stripped, n_override);
}

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back(json::array({a, b}));
  return json{{"n", g.n}, {"edges", edges}};
}

}  // namespace tspread
