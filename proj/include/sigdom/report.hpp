#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sigdom/bounds.hpp"
#include "sigdom/enumerate.hpp"
#include "sigdom/graph6.hpp"
#include "sigdom/solvers.hpp"

namespace sigdom {

using ordered_json = nlohmann::ordered_json;

enum class SweepClass { Trees, Cubic, Connected, Corpus };

inline const char* to_string(SweepClass c) {
  switch (c) {
    case SweepClass::Trees: return "trees";
    case SweepClass::Cubic: return "cubic";
    case SweepClass::Connected: return "connected";
    case SweepClass::Corpus: return "corpus";
  }
  return "?";
}

inline std::optional<SweepClass> sweep_class_from_string(std::string_view s) {
  if (s == "trees") return SweepClass::Trees;
  if (s == "cubic") return SweepClass::Cubic;
  if (s == "connected") return SweepClass::Connected;
  if (s == "corpus") return SweepClass::Corpus;
  return std::nullopt;
}

struct SweepConfig {
  SweepClass cls = SweepClass::Connected;
  int n_lo = 1;
  int n_hi = 7;
  std::vector<BoundId> checks;  // empty means every bound
  std::string format = "json";  // "json" or "csv"
  int jobs = 1;
  std::uint64_t seed = 0;
  std::string corpus_path;
};

struct SweepRow {
  std::string g6;
  int n = 0, m = 0, min_degree = 0, max_degree = 0;
  InvariantResult gst, gt, g2t, rho;
  std::vector<BoundReport> reports;
  bool violated = false;
};

struct CheckSummary {
  long long applicable = 0, held = 0, sharp = 0, violated = 0;
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepRow> rows;
  std::vector<std::pair<BoundId, CheckSummary>> summary;
  std::vector<std::string> failures;
};

namespace detail {

inline std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

inline std::string bound_value_string(const BoundReport& r) {
  return r.real_valued ? format_real(r.bound_real) : r.bound.to_string();
}

inline const char* report_status(const BoundReport& r) {
  if (is_violation(r)) return "violated";
  if (!r.applicable) return "na";
  return r.sharp ? "sharp" : "holds";
}

}  // namespace detail

/// Enumerates the configured graph class in deterministic order.
inline std::vector<Graph> sweep_graphs(const SweepConfig& cfg) {
  std::vector<Graph> out;
  switch (cfg.cls) {
    case SweepClass::Trees:
      if (cfg.n_lo < 1 || cfg.n_hi > 16 || cfg.n_lo > cfg.n_hi)
        throw unsupported_size("sweep: trees support n in 1..16");
      for (int n = cfg.n_lo; n <= cfg.n_hi; ++n)
        for (Graph& t : enumerate_trees(n)) out.push_back(std::move(t));
      break;
    case SweepClass::Connected:
      if (cfg.n_lo < 1 || cfg.n_hi > 7 || cfg.n_lo > cfg.n_hi)
        throw unsupported_size("sweep: built-in connected enumeration supports n in 1..7");
      for (int n = cfg.n_lo; n <= cfg.n_hi; ++n)
        for (Graph& g : enumerate_connected_graphs(n)) out.push_back(std::move(g));
      break;
    case SweepClass::Cubic:
      if (cfg.n_lo < 1 || cfg.n_hi > 12 || cfg.n_lo > cfg.n_hi)
        throw unsupported_size("sweep: cubic enumeration supports n in 1..12");
      for (int n = cfg.n_lo; n <= cfg.n_hi; ++n)
        for (Graph& g : enumerate_connected_cubic(n)) out.push_back(std::move(g));
      break;
    case SweepClass::Corpus: {
      std::ifstream in(cfg.corpus_path);
      if (!in) throw malformed_input("sweep: cannot open corpus file " + cfg.corpus_path);
      for (auto& [line, g] : read_graph6_lines(in)) {
        (void)line;
        if (g.order() >= cfg.n_lo && g.order() <= cfg.n_hi) out.push_back(std::move(g));
      }
      break;
    }
  }
  return out;
}

inline SweepRow certify_row(const Graph& g, const SweepConfig& cfg) {
  SweepRow row;
  row.g6 = to_graph6(g);
  row.n = g.order();
  row.m = g.size();
  const DegreeProfile p = degree_profile(g);
  row.min_degree = p.min_degree;
  row.max_degree = p.max_degree;
  row.gst = gamma_st(g);
  row.gt = gamma_t(g);
  row.g2t = gamma_tuple_t(g, 2);
  row.rho = rho_open(g);
  CertifyOptions opts;
  opts.seed = cfg.seed;
  std::vector<BoundReport> all = certify_all(g, opts);
  if (cfg.checks.empty()) {
    row.reports = std::move(all);
  } else {
    for (BoundReport& r : all)
      if (std::find(cfg.checks.begin(), cfg.checks.end(), r.id) != cfg.checks.end())
        row.reports.push_back(std::move(r));
  }
  row.violated = any_violation(row.reports);
  return row;
}

/// Certifies the whole class; workers split rows round-robin and the merge
/// is by index, so output is identical for any worker count.
inline SweepReport run_sweep(const SweepConfig& cfg) {
  SweepReport rep;
  rep.config = cfg;
  const std::vector<Graph> graphs = sweep_graphs(cfg);
  rep.rows.resize(graphs.size());
  const int jobs = std::max(1, std::min(cfg.jobs, 64));
  if (jobs == 1 || graphs.size() <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) rep.rows[i] = certify_row(graphs[i], cfg);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        for (std::size_t i = static_cast<std::size_t>(w); i < graphs.size();
             i += static_cast<std::size_t>(jobs))
          rep.rows[i] = certify_row(graphs[i], cfg);
      });
    for (auto& t : workers) t.join();
  }

  const std::vector<BoundId> ids =
      cfg.checks.empty() ? std::vector<BoundId>(kAllBoundIds.begin(), kAllBoundIds.end())
                         : cfg.checks;
  for (BoundId id : ids) rep.summary.emplace_back(id, CheckSummary{});
  for (const SweepRow& row : rep.rows) {
    for (const BoundReport& r : row.reports) {
      for (auto& [id, s] : rep.summary) {
        if (id != r.id) continue;
        if (r.applicable) {
          ++s.applicable;
          if (r.holds) ++s.held;
          if (r.sharp) ++s.sharp;
        }
        if (is_violation(r)) ++s.violated;
      }
    }
    if (row.violated) rep.failures.push_back(row.g6);
  }
  return rep;
}

// ---- JSON / CSV serialization ----------------------------------------------

inline ordered_json to_json(const InvariantResult& r, bool with_witness = true) {
  ordered_json j;
  j["feasible"] = r.feasible;
  if (!r.feasible) return j;
  j["value"] = r.value;
  if (with_witness) {
    if (const VertexSet* s = r.set_witness()) j["witness"] = {{"vertices", s->to_vector()}};
    if (const SignedFunction* f = r.function_witness()) j["witness"] = {{"signs", f->to_signs()}};
  }
  return j;
}

inline ordered_json to_json(const BoundReport& r) {
  ordered_json j;
  j["id"] = to_string(r.id);
  j["applicable"] = r.applicable;
  j["reason"] = r.applicable ? ordered_json() : ordered_json(r.reason);
  j["direction"] = to_string(r.direction);
  if (r.has_bound) {
    j["bound"] = detail::bound_value_string(r);
    j["bound_real"] = r.real_valued ? r.bound_real : r.bound.to_double();
  } else {
    j["bound"] = nullptr;
    j["bound_real"] = nullptr;
  }
  j["exact"] = r.has_exact ? ordered_json(r.exact) : ordered_json();
  j["holds"] = r.holds;
  j["sharp"] = r.sharp;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  ordered_json checks = ordered_json::array();
  for (const SubCheck& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"relation", c.relation},
                      {"ok", c.ok}});
  j["checks"] = checks;
  return j;
}

inline ordered_json graph_header_json(const Graph& g) {
  ordered_json j;
  j["graph6"] = to_graph6(g);
  j["n"] = g.order();
  j["m"] = g.size();
  return j;
}

inline ordered_json to_json(const SweepReport& rep) {
  ordered_json j;
  ordered_json cfg;
  cfg["class"] = to_string(rep.config.cls);
  cfg["n"] = {rep.config.n_lo, rep.config.n_hi};
  if (rep.config.checks.empty()) {
    cfg["checks"] = "all";
  } else {
    ordered_json arr = ordered_json::array();
    for (BoundId id : rep.config.checks) arr.push_back(to_string(id));
    cfg["checks"] = arr;
  }
  cfg["jobs"] = rep.config.jobs;
  cfg["seed"] = rep.config.seed;
  if (rep.config.cls == SweepClass::Corpus) cfg["corpus"] = rep.config.corpus_path;
  j["config"] = cfg;

  ordered_json rows = ordered_json::array();
  for (const SweepRow& row : rep.rows) {
    ordered_json r;
    r["graph6"] = row.g6;
    r["n"] = row.n;
    r["m"] = row.m;
    r["delta"] = row.min_degree;
    r["Delta"] = row.max_degree;
    r["gamma_st"] = row.gst.feasible ? ordered_json(row.gst.value) : ordered_json();
    r["gamma_t"] = row.gt.feasible ? ordered_json(row.gt.value) : ordered_json();
    r["gamma_2t"] = row.g2t.feasible ? ordered_json(row.g2t.value) : ordered_json();
    r["rho_o"] = row.rho.feasible ? ordered_json(row.rho.value) : ordered_json();
    ordered_json checks = ordered_json::object();
    for (const BoundReport& b : row.reports) {
      ordered_json entry;
      entry["status"] = detail::report_status(b);
      entry["bound"] =
          b.has_bound ? ordered_json(detail::bound_value_string(b)) : ordered_json();
      checks[to_string(b.id)] = entry;
    }
    r["checks"] = checks;
    rows.push_back(r);
  }
  j["rows"] = rows;

  ordered_json per_check = ordered_json::object();
  for (const auto& [id, s] : rep.summary)
    per_check[to_string(id)] = {{"applicable", s.applicable},
                                {"held", s.held},
                                {"sharp", s.sharp},
                                {"violated", s.violated}};
  j["summary"] = {{"graphs", rep.rows.size()}, {"per_check", per_check}};
  j["failures"] = rep.failures;
  return j;
}

/// Fixed CSV schema: graph-and-invariant columns, then <ID>_status and
/// <ID>_bound per selected check. Infeasible and inapplicable cells are empty.
inline std::string to_csv(const SweepReport& rep) {
  const std::vector<BoundId> ids =
      rep.config.checks.empty() ? std::vector<BoundId>(kAllBoundIds.begin(), kAllBoundIds.end())
                                : rep.config.checks;
  std::string out = "graph6,n,m,delta,Delta,gamma_st,gamma_t,gamma_2t,rho_o";
  for (BoundId id : ids) {
    out += ",";
    out += to_string(id);
    out += "_status,";
    out += to_string(id);
    out += "_bound";
  }
  out += "\n";
  for (const SweepRow& row : rep.rows) {
    out += row.g6;
    out += "," + std::to_string(row.n) + "," + std::to_string(row.m) + "," +
           std::to_string(row.min_degree) + "," + std::to_string(row.max_degree);
    const auto inv = [&](const InvariantResult& r) {
      out += ",";
      if (r.feasible) out += std::to_string(r.value);
    };
    inv(row.gst);
    inv(row.gt);
    inv(row.g2t);
    inv(row.rho);
    for (BoundId id : ids) {
      const BoundReport* found = nullptr;
      for (const BoundReport& b : row.reports)
        if (b.id == id) found = &b;
      out += ",";
      if (found) out += detail::report_status(*found);
      out += ",";
      if (found && found->has_bound) out += detail::bound_value_string(*found);
    }
    out += "\n";
  }
  return out;
}

}  // namespace sigdom
