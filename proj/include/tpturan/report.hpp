#pragma once

#include <sstream>
#include <string>

#include "json.hpp"
#include "tpturan/acceptance.hpp"
#include "tpturan/inequalities.hpp"
#include "tpturan/io.hpp"
#include "tpturan/lagrangian.hpp"
#include "tpturan/search.hpp"

namespace tpturan {

using Json = nlohmann::ordered_json;

// Every document carries a versioned schema tag.
inline Json document(const std::string& kind) { return Json{{"schema", "tpturan/" + kind + "/v1"}}; }

inline Json graph_json(const RGraph& h) {
  Json edges = Json::array();
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    edges.push_back(std::vector<Vertex>(e.begin(), e.end()));
  }
  return Json{{"n", h.vertex_count()}, {"r", h.uniformity()}, {"edges", edges}};
}

inline Json check_json(const InequalityCheck& c, bool with_points) {
  Json j = document("inequality");
  j["id"] = c.id;
  j["statement"] = c.statement;
  j["parameters"] = c.parameter_names;
  j["point_count"] = c.points.size();
  j["worst_margin"] = c.worst_margin;
  j["worst_point"] = c.worst_point;
  j["status"] = c.passed ? "pass" : "fail";
  j["note"] = c.note;
  if (with_points) {
    Json pts = Json::array();
    for (std::size_t i = 0; i < c.points.size(); ++i) pts.push_back(Json{{"at", c.points[i]}, {"margin", c.margins[i]}});
    j["points"] = pts;
  }
  return j;
}

inline std::string check_csv(const InequalityCheck& c) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& name : c.parameter_names) out << name << ',';
  out << "margin\n";
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    for (double v : c.points[i]) out << v << ',';
    out << c.margins[i] << '\n';
  }
  return out.str();
}

inline Json lagrangian_json(const LagrangianResult& r) {
  Json j = document("lagrangian");
  j["lambda"] = r.value;
  j["x"] = r.maximizer;
  j["support"] = r.support;
  j["kkt_residual"] = r.kkt_residual;
  j["two_covered"] = r.two_covered;
  j["converged"] = r.converged;
  j["best_effort"] = r.best_effort;
  j["warning"] = r.warning;
  return j;
}

inline Json search_json(const SearchResult& r) {
  Json j = document("search");
  j["value"] = r.value;
  j["method"] = to_string(r.method);
  j["explored"] = r.explored;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(to_rg(w));
  j["witnesses"] = ws;
  j["note"] = r.note;
  return j;
}

inline Json density_json(const std::vector<DensityPoint>& pts) {
  Json j = document("density");
  Json rows = Json::array();
  for (const auto& p : pts)
    rows.push_back(Json{{"n", p.n}, {"value", p.value}, {"normalized", p.normalized}, {"method", to_string(p.method)},
                        {"exact", p.exact}});
  j["points"] = rows;
  return j;
}

inline Json criterion_json(const CriterionResult& c) {
  return Json{{"criterion", c.number},
              {"title", c.title},
              {"status", c.passed() ? "pass" : "fail"},
              {"limit_seconds", c.limit_seconds},
              {"failures", c.failures},
              {"details", c.details}};
}

}  // namespace tpturan
