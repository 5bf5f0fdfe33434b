// Command-line front end: single-graph invariant computation, bound
// certification, class sweeps and tree bound reports, with JSON/CSV output.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sigdom/bounds.hpp"
#include "sigdom/constructions.hpp"
#include "sigdom/generators.hpp"
#include "sigdom/graph6.hpp"
#include "sigdom/report.hpp"

namespace {

using sigdom::Graph;
using sigdom::ordered_json;

std::vector<int> parse_int_list(const std::string& body) {
  std::vector<int> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw sigdom::malformed_input("empty size in family name");
    out.push_back(std::stoi(item));
  }
  return out;
}

/// Named families: heawood, K<n>, C<n>, P<n>, and K_<a,b,...> multipartite.
Graph graph_from_name(std::string name) {
  std::string lower = name;
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "heawood") return sigdom::heawood_graph();
  if (name.empty()) throw sigdom::malformed_input("empty graph name");
  const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  std::string body = name.substr(1);
  if (!body.empty() && body.front() == '_') body = body.substr(1);
  if (!body.empty() && body.front() == '{' && body.back() == '}')
    body = body.substr(1, body.size() - 2);
  if (body.empty()) throw sigdom::malformed_input("graph name needs a size: " + name);
  const std::vector<int> sizes = parse_int_list(body);
  switch (kind) {
    case 'K':
      if (sizes.size() == 1) return sigdom::complete_graph(sizes[0]);
      return sigdom::complete_multipartite(sizes);
    case 'C':
      if (sizes.size() != 1) throw sigdom::malformed_input("cycle takes one size");
      return sigdom::cycle_graph(sizes[0]);
    case 'P':
      if (sizes.size() != 1) throw sigdom::malformed_input("path takes one size");
      return sigdom::path_graph(sizes[0]);
    default:
      throw sigdom::malformed_input("unknown graph name: " + name);
  }
}

struct GraphSource {
  std::string name;
  std::string g6;
  std::string edges_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("graph", name, "named family: heawood, K<n>, C<n>, P<n>, K_<a,b,...>");
    cmd->add_option("--g6", g6, "graph6 string");
    cmd->add_option("--edges", edges_path, "edge-list file: first line 'n m', then 'u v' lines");
  }

  Graph load() const {
    const int given = (!name.empty()) + (!g6.empty()) + (!edges_path.empty());
    if (given != 1)
      throw sigdom::malformed_input("exactly one of <graph>, --g6, --edges is required");
    if (!name.empty()) return graph_from_name(name);
    if (!g6.empty()) return sigdom::from_graph6(g6);
    std::ifstream in(edges_path);
    if (!in) throw sigdom::malformed_input("cannot open " + edges_path);
    return sigdom::read_edge_list_text(in);
  }
};

/// Invariant tokens: gamma_st, gamma_t, gamma_<k>t, rho_o, L_<k>t, L_<k>.
sigdom::InvariantResult compute_invariant(const Graph& g, const std::string& token) {
  if (token == "gamma_st") return sigdom::gamma_st(g);
  if (token == "gamma_t") return sigdom::gamma_t(g);
  if (token == "rho_o") return sigdom::rho_open(g);
  if (token.rfind("gamma_", 0) == 0 && token.back() == 't') {
    const std::string num = token.substr(6, token.size() - 7);
    if (!num.empty()) return sigdom::gamma_tuple_t(g, std::stoi(num));
  }
  if (token.rfind("L_", 0) == 0) {
    std::string num = token.substr(2);
    const bool total = !num.empty() && num.back() == 't';
    if (total) num.pop_back();
    if (!num.empty())
      return total ? sigdom::total_limited_packing(g, std::stoi(num))
                   : sigdom::limited_packing(g, std::stoi(num));
  }
  throw sigdom::malformed_input("unknown invariant: " + token);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int v = std::stoi(s);
    return {v, v};
  }
  return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run_compute(const GraphSource& src, const std::string& inv_list) {
  const Graph g = src.load();
  ordered_json out;
  out["graph"] = sigdom::graph_header_json(g);
  ordered_json invs = ordered_json::object();
  for (const std::string& token : split_commas(inv_list))
    invs[token] = sigdom::to_json(compute_invariant(g, token));
  out["invariants"] = invs;
  print_json(out);
  return 0;
}

int run_certify(const GraphSource& src, std::optional<int> r, std::uint64_t seed) {
  const Graph g = src.load();
  sigdom::CertifyOptions opts;
  opts.turan_r = r;
  opts.seed = seed;
  const auto reports = sigdom::certify_all(g, opts);
  ordered_json out;
  out["graph"] = sigdom::graph_header_json(g);
  out["gamma_st"] = sigdom::to_json(sigdom::gamma_st(g), /*with_witness=*/false);
  ordered_json arr = ordered_json::array();
  long long violations = 0;
  for (const auto& rep : reports) {
    arr.push_back(sigdom::to_json(rep));
    if (sigdom::is_violation(rep)) ++violations;
  }
  out["reports"] = arr;
  out["violations"] = violations;
  print_json(out);
  return violations == 0 ? 0 : 2;
}

int run_sweep(sigdom::SweepConfig cfg, const std::string& checks, const std::string& range) {
  const auto [lo, hi] = parse_range(range);
  cfg.n_lo = lo;
  cfg.n_hi = hi;
  if (checks != "all") {
    for (const std::string& token : split_commas(checks)) {
      const auto id = sigdom::bound_id_from_string(token);
      if (!id) throw sigdom::malformed_input("unknown check id: " + token);
      cfg.checks.push_back(*id);
    }
  }
  const sigdom::SweepReport rep = sigdom::run_sweep(cfg);
  if (cfg.format == "csv") {
    std::cout << sigdom::to_csv(rep);
    ordered_json summary = sigdom::to_json(rep)["summary"];
    std::cerr << summary.dump() << "\n";
  } else {
    print_json(sigdom::to_json(rep));
  }
  return rep.failures.empty() ? 0 : 2;
}

int run_tree_omega(const GraphSource& src) {
  const Graph g = src.load();
  if (!sigdom::is_tree(g) || g.order() < 2)
    throw sigdom::malformed_input("tree-omega: input must be a tree on >= 2 vertices");
  const sigdom::TreeProfile p = sigdom::tree_profile(g);
  const int bound = g.order() - 2 * (p.support_count - p.degree_two_supports);
  const auto gst = sigdom::gamma_st(g);
  ordered_json out;
  out["graph"] = sigdom::graph_header_json(g);
  out["s"] = p.support_count;
  out["s_prime"] = p.degree_two_supports;
  out["bound"] = bound;
  out["gamma_st"] = gst.value;
  out["degenerate_k2"] = g.order() == 2;
  if (g.order() == 2) {
    out["sharp"] = nullptr;
    out["omega_member"] = nullptr;
    out["violations"] = ordered_json::array();
  } else {
    const sigdom::OmegaVerdict verdict = sigdom::omega_membership(g);
    out["sharp"] = gst.value == bound;
    out["omega_member"] = verdict.member;
    ordered_json arr = ordered_json::array();
    for (const auto& v : verdict.violations)
      arr.push_back({{"condition", std::string(1, v.condition)}, {"vertex", v.vertex}});
    out["violations"] = arr;
  }
  print_json(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solvers and bound certification for signed total domination"};
  app.require_subcommand(1);

  GraphSource compute_src, certify_src, tree_src;
  std::string inv_list = "gamma_st,gamma_t,rho_o";
  auto* compute = app.add_subcommand("compute", "compute invariants with witnesses");
  compute_src.attach(compute);
  compute->add_option("--inv", inv_list,
                      "comma list: gamma_st, gamma_t, gamma_<k>t, rho_o, L_<k>t, L_<k>");

  auto* certify = app.add_subcommand("certify", "evaluate every bound against exact gamma_st");
  certify_src.attach(certify);
  int certify_r = -1;
  std::uint64_t certify_seed = 0;
  certify->add_option("--r", certify_r, "clique-freeness parameter (default: smallest valid)")
      ->check(CLI::Range(2, 64));
  certify->add_option("--seed", certify_seed, "seed for sampled sign functions");

  auto* sweep = app.add_subcommand("sweep", "certify a whole graph class");
  sigdom::SweepConfig cfg;
  std::string cls = "connected", range = "1..7", checks = "all";
  sweep->add_option("--class", cls, "trees | cubic | connected | corpus")->required();
  sweep->add_option("--n", range, "vertex range, e.g. 2..12 or 7");
  sweep->add_option("--checks", checks, "comma list of bound ids, or 'all'");
  sweep->add_option("--format", cfg.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--jobs", cfg.jobs, "worker threads (output is order-independent)");
  sweep->add_option("--seed", cfg.seed, "seed for sampled sign functions");
  sweep->add_option("--corpus", cfg.corpus_path, "graph6 file, one graph per line");

  auto* tree = app.add_subcommand("tree-omega", "tree support bound and family membership");
  tree_src.attach(tree);

  try {
    app.parse(argc, argv);
    if (*compute) return run_compute(compute_src, inv_list);
    if (*certify)
      return run_certify(certify_src,
                         certify_r >= 2 ? std::optional<int>(certify_r) : std::nullopt,
                         certify_seed);
    if (*sweep) {
      const auto c = sigdom::sweep_class_from_string(cls);
      if (!c) throw sigdom::malformed_input("unknown class: " + cls);
      cfg.cls = *c;
      if (cfg.cls == sigdom::SweepClass::Corpus) {
        if (cfg.corpus_path.empty())
          throw sigdom::malformed_input("--corpus is required for class corpus");
        if (range == "1..7") range = "1..62";
      }
      return run_sweep(cfg, checks, range);
    }
    if (*tree) return run_tree_omega(tree_src);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
