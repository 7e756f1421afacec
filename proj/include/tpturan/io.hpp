#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "tpturan/hypergraph.hpp"

namespace tpturan {

// "rg" text format: header "n r", then one edge per line; '#' starts a comment line.
inline RGraph parse_rg(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  unsigned r = 0;
  std::vector<Vertex> flat;
  std::vector<std::size_t> edge_lines;
  auto trim = [](const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    std::istringstream fields(body);
    std::vector<long long> values;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        throw ParseError(line_no, "expected an integer, got '" + token + "'");
      }
      if (used != token.size()) throw ParseError(line_no, "expected an integer, got '" + token + "'");
      values.push_back(value);
    }
    if (!have_header) {
      if (values.size() != 2) throw ParseError(line_no, "header must be 'n r'");
      if (values[0] < 0 || values[0] > static_cast<long long>(kMaxVertices))
        throw ParseError(line_no, "vertex count out of range");
      if (values[1] < 2 || values[1] > 64) throw ParseError(line_no, "uniformity must be at least 2");
      n = static_cast<std::size_t>(values[0]);
      r = static_cast<unsigned>(values[1]);
      have_header = true;
      continue;
    }
    if (values.size() != r)
      throw ParseError(line_no, "edge has " + std::to_string(values.size()) + " vertices, expected " + std::to_string(r));
    std::vector<Vertex> e;
    for (auto v : values) {
      if (v < 0 || v >= static_cast<long long>(n)) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
      e.push_back(static_cast<Vertex>(v));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw ParseError(line_no, "edge repeats a vertex");
    flat.insert(flat.end(), e.begin(), e.end());
    edge_lines.push_back(line_no);
  }
  if (!have_header) throw ParseError(line_no + 1, "missing 'n r' header");
  // Report duplicates with the line of the second occurrence.
  std::vector<std::size_t> order(edge_lines.size());
  std::iota(order.begin(), order.end(), 0);
  auto edge_at = [&](std::size_t i) { return flat.begin() + i * r; };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(edge_at(a), edge_at(a) + r, edge_at(b), edge_at(b) + r);
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (std::equal(edge_at(order[i - 1]), edge_at(order[i - 1]) + r, edge_at(order[i])))
      throw ParseError(edge_lines[std::max(order[i - 1], order[i])], "duplicate edge");
  }
  return RGraph::from_flat(r, n, std::move(flat));
}

inline RGraph parse_rg_string(const std::string& text) {
  std::istringstream in(text);
  return parse_rg(in);
}

inline RGraph read_rg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open graph file '" + path + "'");
  return parse_rg(in);
}

inline std::string to_rg(const RGraph& h) {
  std::ostringstream out;
  out << h.vertex_count() << ' ' << h.uniformity() << '\n';
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    for (unsigned j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
    out << '\n';
  }
  return out.str();
}

inline nlohmann::json to_json(const RGraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    edges.push_back(std::vector<Vertex>(e.begin(), e.end()));
  }
  return {{"n", h.vertex_count()}, {"r", h.uniformity()}, {"edges", edges}};
}

inline RGraph rgraph_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const auto r = j.at("r").get<unsigned>();
    std::vector<Subset> edges = j.at("edges").get<std::vector<Subset>>();
    return RGraph(r, n, edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace tpturan
