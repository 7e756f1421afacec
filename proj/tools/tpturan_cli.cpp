#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tpturan/tpturan.hpp"

namespace {

using namespace tpturan;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kUndecided = 3 };

struct Common {
  std::string graph_path;
  unsigned t = 1;
  double p = 1.0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  double timeout = kDefaultTimeoutSecs;
  bool csv = false;
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

RGraph load_graph(const std::string& path) {
  if (path.empty()) throw ParameterError("--graph is required");
  return read_rg_file(path);
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw ParameterError("bad integer list '" + text + "'");
    }
  }
  if (out.empty()) throw ParameterError("empty integer list");
  return out;
}

void write_graph_if_asked(const std::string& out_path, const RGraph& g) {
  if (out_path.empty()) return;
  std::ofstream f(out_path);
  if (!f) throw ParameterError("cannot write " + out_path);
  f << to_rg(g);
}

int run(int argc, char** argv) {
  CLI::App app{"(t,p)-norm Turan toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  Common c;
  int code = kOk;

  auto graph_opts = [&](CLI::App* sub, bool needs_graph = true) {
    if (needs_graph) sub->add_option("--graph", c.graph_path, "path to an .rg file")->required();
    sub->add_option("--t", c.t, "shadow level t")->capture_default_str();
    sub->add_option("--p", c.p, "exponent p")->capture_default_str();
  };
  auto run_opts = [&](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "64-bit seed")->capture_default_str();
    sub->add_option("--threads", c.threads, "worker cap")->capture_default_str();
    sub->add_option("--timeout-secs", c.timeout, "budget for backtracking searches")->capture_default_str();
  };
  auto format_opts = [&](CLI::App* sub) {
    auto json = sub->add_flag("--json", "JSON output (default)");
    sub->add_flag("--csv", c.csv, "CSV output")->excludes(json);
  };

  // norm
  auto* norm = app.add_subcommand("norm", "(t,p)-norm of a graph");
  graph_opts(norm);
  norm->callback([&] {
    RGraph h = load_graph(c.graph_path);
    Json j = document("norm");
    j["n"] = h.vertex_count();
    j["r"] = h.uniformity();
    j["edges"] = h.edge_count();
    j["t"] = c.t;
    j["p"] = c.p;
    j["norm"] = tp_norm(h, {c.t, c.p});
    emit(j);
  });

  // degree
  auto* degree = app.add_subcommand("degree", "(t,p)-degrees of the vertices");
  graph_opts(degree);
  std::optional<Vertex> degree_vertex;
  std::string degree_method = "closed_form";
  degree->add_option("--vertex", degree_vertex, "single vertex");
  degree->add_option("--method", degree_method, "closed_form or definitional")
      ->check(CLI::IsMember({"closed_form", "definitional"}));
  degree->callback([&] {
    RGraph h = load_graph(c.graph_path);
    const TpParams params{c.t, c.p};
    const auto method = degree_method == "definitional" ? DegreeMethod::definitional : DegreeMethod::closed_form;
    Json j = document("degree");
    j["t"] = c.t;
    j["p"] = c.p;
    j["method"] = degree_method;
    if (degree_vertex) {
      j["vertex"] = *degree_vertex;
      j["degree"] = tp_degree(h, *degree_vertex, params, method);
    } else {
      std::vector<double> ds;
      for (Vertex v = 0; v < h.vertex_count(); ++v) ds.push_back(tp_degree(h, v, params, method));
      j["degrees"] = ds;
      auto stats = tp_degree_stats(h, params);
      j["min"] = stats.min;
      j["max"] = stats.max;
      j["average"] = stats.average;
    }
    emit(j);
  });

  // symmetrize
  auto* sym = app.add_subcommand("symmetrize", "replace u's link by v's link");
  graph_opts(sym);
  Vertex sym_u = 0, sym_v = 0;
  std::string sym_out;
  sym->add_option("--u", sym_u)->required();
  sym->add_option("--v", sym_v)->required();
  sym->add_option("--out", sym_out, "write the result as .rg");
  sym->callback([&] {
    RGraph h = load_graph(c.graph_path);
    RGraph s = symmetrize(h, sym_u, sym_v);
    write_graph_if_asked(sym_out, s);
    Json j = document("symmetrize");
    j["u"] = sym_u;
    j["v"] = sym_v;
    j["norm_before"] = tp_norm(h, {c.t, c.p});
    j["norm_after"] = tp_norm(s, {c.t, c.p});
    j["graph"] = to_rg(s);
    emit(j);
  });

  // check
  auto* check = app.add_subcommand("check", "test a graph for forbidden patterns (exit 1 if one is found)");
  std::string pattern_spec, family_spec;
  check->add_option("--graph", c.graph_path)->required();
  auto* pat_opt = check->add_option("--pattern", pattern_spec, "builtin name (F5, K43minus, K4_3, ...) or an .rg file");
  check->add_option("--family", family_spec, "comma-separated builtin names, e.g. F5,K43minus")->excludes(pat_opt);
  run_opts(check);
  check->callback([&] {
    RGraph h = load_graph(c.graph_path);
    std::vector<std::string> names;
    std::vector<RGraph> patterns;
    if (!pattern_spec.empty() && std::filesystem::exists(pattern_spec)) {
      names.push_back(pattern_spec);
      patterns.push_back(read_rg_file(pattern_spec));
    } else {
      const std::string spec = !pattern_spec.empty() ? pattern_spec : family_spec.empty() ? "F5" : family_spec;
      auto family = ForbiddenFamily::parse(spec);
      std::stringstream ss(spec);
      for (std::string item; std::getline(ss, item, ',');) names.push_back(item);
      patterns = family.patterns;
      if (names.size() != patterns.size()) names.assign(patterns.size(), spec);
    }
    Json j = document("check");
    Json hits = Json::array();
    Json witness = nullptr;
    std::string found_name;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      auto emb = find_embedding(h, patterns[i], c.timeout);
      Json row{{"pattern", names[i]}, {"found", emb.has_value()}};
      if (emb) {
        row["witness"] = *emb;
        if (witness.is_null()) {
          witness = *emb;
          found_name = names[i];
        }
      }
      hits.push_back(row);
    }
    j["contains"] = !witness.is_null();
    j["witness"] = witness;
    if (!found_name.empty()) j["found_pattern"] = found_name;
    j["patterns"] = hits;
    emit(j);
    if (!witness.is_null()) code = kCheckFailed;
  });

  // color
  auto* color = app.add_subcommand("color", "strong l-partition (exit 1 if none exists)");
  unsigned color_parts = 3;
  color->add_option("--graph", c.graph_path)->required();
  color->add_option("--parts", color_parts)->capture_default_str();
  run_opts(color);
  color->callback([&] {
    RGraph h = load_graph(c.graph_path);
    auto cert = strong_partition(h, color_parts, c.timeout);
    Json j = document("color");
    j["parts"] = color_parts;
    j["colorable"] = cert.has_value();
    j["partition"] = cert ? Json(cert->part) : Json(nullptr);
    emit(j);
    if (!cert) code = kCheckFailed;
  });

  // construct
  auto* construct = app.add_subcommand("construct", "build a named construction");
  construct->require_subcommand(1);
  std::string construct_out;
  construct->add_option("--out", construct_out, "write the graph as .rg");
  double ct_p = 1.0;
  unsigned ct_t = 1;
  construct->add_option("--t", ct_t, "shadow level for the reported norm")->capture_default_str();
  construct->add_option("--p", ct_p, "exponent for the reported norm")->capture_default_str();
  auto report_graph = [&](const std::string& kind, const RGraph& g, Json extra) {
    write_graph_if_asked(construct_out, g);
    Json j = document("construct");
    j["kind"] = kind;
    j["n"] = g.vertex_count();
    j["r"] = g.uniformity();
    j["edge_count"] = g.edge_count();
    for (auto& [k, v] : extra.items()) j[k] = v;
    if (!j.contains("norm")) {
      const unsigned t = std::min(ct_t, g.uniformity());
      j["t"] = t;
      j["p"] = ct_p;
      j["norm"] = tp_norm(g, {t, ct_p});
    }
    j["graph"] = to_rg(g);
    emit(j);
  };
  auto* c_sts = construct->add_subcommand("sts", "Steiner triple system");
  std::size_t sts_k = 7;
  c_sts->add_option("--k", sts_k)->required();
  c_sts->callback([&] { report_graph("sts", sts(sts_k), Json::object()); });
  auto* c_turan = construct->add_subcommand("turan", "balanced complete partite graph");
  std::size_t tn = 6, tparts = 3;
  unsigned tr = 3;
  c_turan->add_option("--n", tn)->required();
  c_turan->add_option("--parts", tparts)->capture_default_str();
  c_turan->add_option("--r", tr)->capture_default_str();
  c_turan->callback([&] {
    report_graph("turan", turan_graph(tn, tparts, tr), Json{{"sizes", balanced_sizes(tn, tparts)}});
  });
  auto* c_app = construct->add_subcommand("appendixA", "F5-free graph outside the 3-partite class");
  std::size_t an = 30;
  double eps1 = 0.1;
  c_app->add_option("--n", an)->required();
  c_app->add_option("--eps1", eps1)->capture_default_str();
  c_app->callback([&] {
    auto ce = appendix_counterexample(an, eps1);
    report_graph("appendixA", ce.graph,
                 Json{{"extra_vertex", ce.extra_vertex}, {"marked_size", ce.marked_size}, {"hub1", ce.hub1},
                      {"hub2", ce.hub2}});
  });
  auto* c_opt = construct->add_subcommand("optimal-partite", "best complete partite graph for the norm");
  std::size_t on = 9, oparts = 3;
  unsigned orr = 3;
  c_opt->add_option("--n", on)->required();
  c_opt->add_option("--parts", oparts)->capture_default_str();
  c_opt->add_option("--r", orr)->capture_default_str();
  graph_opts(c_opt, false);
  run_opts(c_opt);
  c_opt->callback([&] {
    auto best = optimize_partite_sizes(on, oparts, orr, {c.t, c.p}, c.seed);
    report_graph("optimal-partite", complete_partite(best.sizes, orr),
                 Json{{"sizes", best.sizes}, {"t", c.t}, {"p", c.p}, {"norm", best.norm}, {"exhaustive", best.exhaustive}});
  });

  // lagrangian
  auto* lag = app.add_subcommand("lagrangian", "maximize the Lagrange polynomial");
  graph_opts(lag);
  run_opts(lag);
  int restarts = 16;
  lag->add_option("--restarts", restarts)->capture_default_str();
  lag->callback([&] {
    RGraph g = load_graph(c.graph_path);
    MaximizeOptions opts;
    opts.seed = c.seed;
    opts.threads = c.threads;
    opts.restarts = restarts;
    Json j = lagrangian_json(maximize_lagrangian(g, {c.t, c.p}, opts));
    j["t"] = c.t;
    j["p"] = c.p;
    emit(j);
  });

  // verify
  auto* ver = app.add_subcommand("verify", "numeric inequality check (exit 1 on failure)");
  std::string ver_id, ver_grid;
  unsigned ver_k = 0;
  bool ver_list = false, ver_points = false;
  ver->add_option("--id", ver_id, "check id, or appendix_c / alpha_k with --k");
  ver->add_option("--grid", ver_grid, "lo:hi:step, '(' prefix for an open lower end");
  ver->add_option("--k", ver_k, "index for appendix_c and alpha_k");
  ver->add_flag("--list", ver_list, "list check ids");
  ver->add_flag("--points", ver_points, "include every grid point in JSON");
  format_opts(ver);
  run_opts(ver);
  ver->callback([&] {
    if (ver_list) {
      Json j = document("verify-list");
      Json ids = inequality_ids();
      ids.push_back("appendix_c");
      ids.push_back("alpha_k");
      j["ids"] = ids;
      emit(j);
      return;
    }
    if (ver_id.empty()) throw ParameterError("--id is required");
    InequalityCheck check;
    if (ver_id == "appendix_c") {
      check = verify_appendix_c(ver_k);
    } else if (ver_id == "alpha_k") {
      check = alpha_k_window_check(ver_k);
    } else {
      VerifyOptions opts;
      opts.seed = c.seed;
      check = verify(ver_id, ver_grid.empty() ? default_grid(ver_id) : ParamGrid::parse(ver_grid), opts);
    }
    if (c.csv)
      std::cout << check_csv(check);
    else
      emit(check_json(check, ver_points));
    if (!check.passed) code = kCheckFailed;
  });

  // pi
  auto* pi = app.add_subcommand("pi", "closed-form and optimized density values");
  std::string pi_family = "f5";
  unsigned pl = 3, pr = 3, pt = 2;
  pi->add_option("--family", pi_family, "f5, expansion or appendix_c")
      ->check(CLI::IsMember({"f5", "expansion", "appendix_c"}));
  pi->add_option("--p", c.p)->required();
  pi->add_option("--l", pl)->capture_default_str();
  pi->add_option("--r", pr)->capture_default_str();
  pi->add_option("--t", pt)->capture_default_str();
  pi->callback([&] {
    Json j = document("pi");
    j["family"] = pi_family;
    j["p"] = c.p;
    if (pi_family == "f5") {
      auto d = f5_pi_upper_detail(c.p);
      j["value"] = d.value;
      j["argmax"] = d.argmax;
      j["binding"] = d.second_branch_binds ? "x(1-x)^p" : "x^(1+p/2)/6^(p/2)";
    } else if (pi_family == "expansion") {
      auto d = expansion_pi_small_p_detail(pl, pr, pt, c.p);
      j["l"] = pl;
      j["r"] = pr;
      j["t"] = pt;
      j["value"] = d.closed_form;
      j["optimized"] = d.optimized;
    } else {
      j["value"] = appendix_c_g(c.p);
    }
    emit(j);
  });

  // search
  auto* search = app.add_subcommand("search", "extremal-norm search");
  search->require_subcommand(1);
  std::size_t sn = 5;
  unsigned sr = 3;
  std::string s_family = "F5", s_ns = "4,5,6", s_strategy = "auto";
  double budget = 100000;
  auto search_common = [&](CLI::App* sub) {
    sub->add_option("--r", sr)->capture_default_str();
    sub->add_option("--family", s_family, "e.g. F5 or F5,K43minus; 'none' for no restriction")->capture_default_str();
    graph_opts(sub, false);
    run_opts(sub);
  };
  auto* s_exact = search->add_subcommand("exact", "exact ex_{t,p}(n, F)");
  s_exact->add_option("--n", sn)->required();
  s_exact->add_option("--strategy", s_strategy)->check(CLI::IsMember({"auto", "raw", "orderly"}))->capture_default_str();
  search_common(s_exact);
  s_exact->callback([&] {
    const auto strategy = s_strategy == "raw"       ? ExactStrategy::exhaustive
                          : s_strategy == "orderly" ? ExactStrategy::canonical_generation
                                                    : ExactStrategy::automatic;
    Json j = search_json(exact_turan(sn, sr, ForbiddenFamily::parse(s_family), {c.t, c.p}, strategy, c.timeout));
    j["n"] = sn;
    emit(j);
  });
  auto* s_hill = search->add_subcommand("hill", "local search lower bound");
  s_hill->add_option("--n", sn)->required();
  s_hill->add_option("--budget", budget, "freeness checks")->capture_default_str();
  search_common(s_hill);
  s_hill->callback([&] {
    HillclimbOptions opts;
    opts.seed = c.seed;
    opts.budget = static_cast<std::uint64_t>(budget);
    opts.timeout_secs = c.timeout;
    Json j = search_json(hillclimb_turan(sn, sr, ForbiddenFamily::parse(s_family), {c.t, c.p}, opts));
    j["n"] = sn;
    emit(j);
  });
  auto* s_density = search->add_subcommand("density", "normalized values over several n");
  s_density->add_option("--n", s_ns, "comma-separated list")->required();
  s_density->add_option("--budget", budget, "hillclimb budget per n")->capture_default_str();
  search_common(s_density);
  s_density->callback([&] {
    DensityOptions opts;
    opts.seed = c.seed;
    opts.budget = static_cast<std::uint64_t>(budget);
    opts.timeout_secs = c.timeout;
    emit(density_json(density_sequence(ForbiddenFamily::parse(s_family), sr, {c.t, c.p}, parse_sizes(s_ns), opts)));
  });

  // accept
  auto* acc = app.add_subcommand("accept", "run the acceptance suite (exit 1 if any criterion fails)");
  std::string suite = "primary";
  std::vector<int> only;
  acc->add_option("--suite", suite)->check(CLI::IsMember({"primary"}))->capture_default_str();
  acc->add_option("--criterion", only, "run only these criteria");
  run_opts(acc);
  acc->callback([&] {
    Json j = document("manifest");
    std::string cmdline;
    for (int i = 0; i < argc; ++i) cmdline += (i ? " " : "") + std::string(argv[i]);
    j["command"] = cmdline;
    j["suite"] = suite;
    j["seed"] = c.seed;
    j["version"] = kVersion;
    Json checks = Json::array();
    Json timing = Json::object();
    bool all = true;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& crit : acceptance_criteria()) {
      if (!only.empty() && std::find(only.begin(), only.end(), crit.number) == only.end()) continue;
      auto res = run_criterion(crit, c.seed);
      all = all && res.passed();
      checks.push_back(criterion_json(res));
      timing[std::to_string(crit.number)] = res.seconds;
    }
    timing["total"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    j["checks"] = checks;
    j["status"] = all ? "pass" : "fail";
    j["timing"] = timing;
    emit(j);
    if (!all) code = kCheckFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  return code;
}

int report_error(const std::string& kind, const std::string& message, int rc) {
  Json j = document("error");
  j["error"] = kind;
  j["message"] = message;
  std::cout << j.dump(2) << '\n';
  std::cerr << kind << ": " << message << '\n';
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const tpturan::UndecidedError& e) {
    return report_error("undecided", e.what(), kUndecided);
  } catch (const tpturan::ParseError& e) {
    return report_error("parse", e.what(), kUsage);
  } catch (const tpturan::Error& e) {
    return report_error("usage", e.what(), kUsage);
  } catch (const std::exception& e) {
    return report_error("internal", e.what(), kCheckFailed);
  }
}
