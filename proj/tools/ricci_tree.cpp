// Command-line front-end: every library operation reachable with file or
// generated-family input, JSON output (12 significant digits, stable bytes).
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "riccitree/analysis.hpp"
#include "riccitree/canonical.hpp"
#include "riccitree/error.hpp"
#include "riccitree/experiments.hpp"
#include "riccitree/jsonio.hpp"
#include "riccitree/ricci.hpp"
#include "riccitree/spectral.hpp"
#include "riccitree/tree.hpp"
#include "riccitree/wasserstein.hpp"

namespace {

using namespace riccitree;

// Bad input (files, parameters) is a usage error; solver-level failures on
// valid input are computation errors.
int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::NoConvergence:
    case ErrorKind::StepTooLarge:
    case ErrorKind::PreconditionNotMet:
      return 1;
    default:
      return 2;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidParams, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TreeSource {
  std::string edges_path;
  std::string family;

  Tree load() const {
    if (!family.empty()) return parse_family(family);
    return parse_tree(slurp(edges_path));
  }
};

// --edges FILE xor --family SPEC on a subcommand
void add_source(CLI::App* sub, TreeSource& src) {
  auto* g = sub->add_option_group("tree source");
  g->add_option("--edges", src.edges_path, "edge-list file, one 'u v' per line")
      ->check(CLI::ExistingFile);
  g->add_option("--family", src.family,
                "generated tree, e.g. path:5, star:4, double-star:3,3, sub-double-star:4,4,29, "
                "tmk:2,4, path-star:3,10, central:6,3, ball:3,2, s32");
  g->require_option(1);
}

std::vector<double> read_weights(const std::string& path, int expect) {
  std::istringstream in(slurp(path));
  std::vector<double> w;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double v;
    if (ls >> v) {
      w.push_back(v);
      std::string rest;
      if (ls >> rest)
        fail(ErrorKind::InvalidParams,
             "weights file line " + std::to_string(lineno) + ": expected one number");
    } else {
      std::string rest;
      if (ls.clear(), ls.str(line), ls >> rest)
        fail(ErrorKind::InvalidParams,
             "weights file line " + std::to_string(lineno) + ": not a number");
    }
  }
  if ((int)w.size() != expect)
    fail(ErrorKind::InvalidParams, "weights file has " + std::to_string(w.size()) +
                                       " entries, tree has " + std::to_string(expect) + " edges");
  return w;
}

Json vec_json(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push(Json::num(x));
  return a;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_perron(const TreeSource& src, double tol) {
  Tree t = src.load();
  PerronResult p = perron_eigenpair(t, tol);
  Json j = Json::object();
  j.add("lambda_max", Json::num(p.lambda_max));
  j.add("kappa", Json::num(-p.lambda_max));
  j.add("weights_maxnorm", vec_json(p.w_maxnorm));
  j.add("weights_l2", vec_json(p.w_l2));
  j.add("residual", Json::num(p.residual));
  j.add("gap", p.gap ? Json::num(*p.gap) : Json::null());
  emit(j);
  return 0;
}

int cmd_spectrum(const TreeSource& src) {
  Tree t = src.load();
  SpectrumFingerprint f = full_spectrum(build_ricci_matrix(t));
  Json poly = Json::array();
  for (const Rat& c : f.charpoly) poly.push(Json::str(to_string(c)));
  Json j = Json::object();
  j.add("eigenvalues", vec_json(f.eigenvalues));
  j.add("charpoly", std::move(poly));
  emit(j);
  return 0;
}

int cmd_curvature(const TreeSource& src, const std::string& weights_path, double tol) {
  Tree t = src.load();
  std::vector<double> w = read_weights(weights_path, t.m());
  CurvatureAssignment ca = lly_curvature(t, w);
  std::optional<double> einstein = is_einstein(t, w, tol);
  Json edges = Json::array();
  for (int e = 0; e < t.m(); ++e) {
    Json row = Json::object();
    row.add("u", Json::integer(t.edges[e].first));
    row.add("v", Json::integer(t.edges[e].second));
    row.add("w", Json::num(ca.weights[e]));
    row.add("kappa", Json::num(ca.kappa[e]));
    edges.push(std::move(row));
  }
  Json j = Json::object();
  j.add("edges", std::move(edges));
  j.add("S", vec_json(ca.s));
  j.add("einstein", Json::boolean(einstein.has_value()));
  j.add("kappa", einstein ? Json::num(*einstein) : Json::null());
  emit(j);
  return 0;
}

int cmd_classify(const TreeSource& src) {
  Tree t = src.load();
  PerronResult p = perron_eigenpair(t);
  StructureReport ext = locate_extremal_edges(t, p.w_maxnorm, p.lambda_max);
  const char* sign = p.lambda_max < -1e-10 ? "negative"
                     : p.lambda_max > 1e-10 ? "positive"
                                            : "zero";
  Json j = Json::object();
  j.add("caterpillar", Json::boolean(is_caterpillar(t)));
  j.add("star", Json::boolean(is_star(t)));
  j.add("lambda_max", Json::num(p.lambda_max));
  j.add("lambda_sign", Json::str(sign));
  j.add("canonical_code", Json::str(canonical_code(t)));
  Json maxe = Json::array(), mine = Json::array();
  for (int e : ext.max_edges) maxe.push(Json::integer(e));
  for (int e : ext.min_edges) mine.push(Json::integer(e));
  j.add("max_edges", std::move(maxe));
  j.add("min_edges", std::move(mine));
  j.add("max_on_internal", Json::boolean(ext.max_on_internal));
  j.add("min_on_leaf", Json::boolean(ext.min_on_leaf));
  j.add("leaf_local_ok", Json::boolean(check_leaf_local(t, p.w_maxnorm)));
  if (!is_star(t) && p.lambda_max < -1e-10) {
    StructureReport rad = check_radial_monotonicity(t, p.w_maxnorm, p.lambda_max);
    Json r = Json::object();
    r.add("radial_monotone", Json::boolean(rad.radial_monotone));
    r.add("max_edge_count", Json::integer((long)rad.max_edges.size()));
    r.add("two_max_share_vertex", Json::boolean(rad.two_max_share_vertex));
    r.add("two_max_share_deg2_vertex", rad.two_max_share_deg2_vertex
                                           ? Json::boolean(*rad.two_max_share_deg2_vertex)
                                           : Json::null());
    r.add("shared_vertex_degree", Json::integer(rad.shared_vertex_degree));
    j.add("radial", std::move(r));
  } else {
    j.add("radial", Json::null());
  }
  emit(j);
  return 0;
}

int cmd_bounds(const TreeSource& src) {
  Tree t = src.load();
  BoundsReport b = eigenvalue_bounds(t);
  Json j = Json::object();
  j.add("lambda_max", Json::num(b.lambda_max));
  j.add("lower", b.lower_applicable ? Json::num(b.lower) : Json::null());
  j.add("upper", Json::num(b.upper));
  j.add("lower_applicable", Json::boolean(b.lower_applicable));
  j.add("lower_ok", Json::boolean(b.lower_ok));
  j.add("upper_ok", Json::boolean(b.upper_ok));
  emit(j);
  return 0;
}

int cmd_flow(const TreeSource& src, const std::string& weights_path, double step, double tol) {
  Tree t = src.load();
  std::vector<double> w0 =
      weights_path.empty() ? std::vector<double>(t.m(), 1.0) : read_weights(weights_path, t.m());
  FlowResult f = normalized_flow(t, w0, step, tol);
  Json j = Json::object();
  j.add("w_limit", vec_json(f.w_limit));
  j.add("lambda_est", Json::num(f.lambda_est));
  j.add("steps", Json::integer(f.steps));
  emit(j);
  return 0;
}

int emit_delta(const AttachmentDelta& d) {
  Json j = Json::object();
  j.add("lambda_before", Json::num(d.lambda_before));
  j.add("lambda_after", Json::num(d.lambda_after));
  j.add("delta", Json::num(d.delta));
  emit(j);
  return 0;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidParams, "bad integer list entry '" + tok + "'");
    }
  }
  if (out.empty()) fail(ErrorKind::InvalidParams, "empty integer list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Einstein metrics on trees: Perron eigenpairs of the edge Ricci matrix"};
  app.require_subcommand(1);

  if (const char* env = std::getenv("RICCI_TREE_THREADS")) {
#ifdef _OPENMP
    int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
#else
    (void)env;
#endif
  }

  TreeSource src;
  double perron_tol = 1e-12;
  auto* perron = app.add_subcommand("perron", "Perron eigenpair and Einstein curvature");
  add_source(perron, src);
  perron->add_option("--tol", perron_tol, "eigenpair residual tolerance");

  auto* spectrum = app.add_subcommand("spectrum", "all eigenvalues + exact charpoly");
  add_source(spectrum, src);

  std::string weights_path;
  double einstein_tol = 1e-9;
  auto* curvature = app.add_subcommand("curvature", "per-edge curvature of given weights");
  add_source(curvature, src);
  curvature->add_option("--weights", weights_path, "one weight per line, edge order")
      ->required()
      ->check(CLI::ExistingFile);
  curvature->add_option("--tol", einstein_tol, "constant-curvature tolerance");

  auto* classify = app.add_subcommand("classify", "caterpillar/sign/extremal structure");
  add_source(classify, src);

  auto* bounds = app.add_subcommand("bounds", "spectral bounds from the potential");
  add_source(bounds, src);

  double flow_step = 0.05, flow_tol = 1e-12;
  std::string flow_weights;
  auto* flow = app.add_subcommand("flow", "normalized Euler flow to the Perron direction");
  add_source(flow, src);
  flow->add_option("--weights", flow_weights, "starting weights (default: all ones)")
      ->check(CLI::ExistingFile);
  flow->add_option("--step", flow_step, "Euler step (must be < 1/(2+alpha))");
  flow->add_option("--tol", flow_tol, "stop when the direction moves less than this");

  auto* edit = app.add_subcommand("edit", "apply an edit, report lambda before/after");
  edit->require_subcommand(1);
  int sub_u = 0, sub_v = 0, leaf_v = 0, at_v = 0;
  auto* ed_sub = edit->add_subcommand("subdivide", "split edge {U,V} with a new vertex");
  add_source(ed_sub, src);
  ed_sub->add_option("U", sub_u, "edge endpoint")->required();
  ed_sub->add_option("V", sub_v, "edge endpoint")->required();
  auto* ed_leaf = edit->add_subcommand("attach-leaf", "new leaf at vertex V");
  add_source(ed_leaf, src);
  ed_leaf->add_option("V", leaf_v, "vertex")->required();
  TreeSource other_src;
  std::string anchors_csv = "0";
  auto* ed_tree = edit->add_subcommand("attach-tree", "join another tree at vertex V");
  add_source(ed_tree, src);
  ed_tree->add_option("--at", at_v, "vertex of the base tree")->required();
  auto* og = ed_tree->add_option_group("attached tree");
  og->add_option("--other-edges", other_src.edges_path, "edge-list file")
      ->check(CLI::ExistingFile);
  og->add_option("--other-family", other_src.family, "family spec");
  og->require_option(1);
  ed_tree->add_option("--anchors", anchors_csv, "comma-separated vertices of the attached tree");

  int max_n = 16;
  bool serial = false;
  auto* sc = app.add_subcommand("search-cospectral", "exact-cospectral classes up to n");
  sc->add_option("--max-n", max_n, "largest vertex count (<= 17)")->required();
  sc->add_flag("--serial", serial, "disable the parallel scan");

  std::string experiment_id, format = "json";
  bool run_all = false;
  auto* rep = app.add_subcommand("reproduce", "run recorded numerical experiments");
  auto* rg = rep->add_option_group("what");
  rg->add_option("--experiment", experiment_id, "one experiment id");
  rg->add_flag("--all", run_all, "every experiment");
  rg->require_option(1);
  rep->add_option("--format", format, "json | table | csv")
      ->check(CLI::IsMember({"json", "table", "csv"}));

  try {
    app.parse(argc, argv);

    if (*perron) return cmd_perron(src, perron_tol);
    if (*spectrum) return cmd_spectrum(src);
    if (*curvature) return cmd_curvature(src, weights_path, einstein_tol);
    if (*classify) return cmd_classify(src);
    if (*bounds) return cmd_bounds(src);
    if (*flow) return cmd_flow(src, flow_weights, flow_step, flow_tol);
    if (*ed_sub) return emit_delta(attachment_delta_subdivide(src.load(), sub_u, sub_v));
    if (*ed_leaf) return emit_delta(attachment_delta_leaf(src.load(), leaf_v));
    if (*ed_tree)
      return emit_delta(
          attachment_delta_tree(src.load(), at_v, other_src.load(), parse_int_list(anchors_csv)));
    if (*sc) {
      emit(to_json(cospectral_search(max_n, !serial)));
      return 0;
    }
    if (*rep) {
      std::vector<ExperimentReport> reports;
      if (run_all) {
        for (const std::string& id : experiment_ids()) reports.push_back(reproduce(id));
      } else {
        reports.push_back(reproduce(experiment_id));
      }
      bool ok = true;
      for (const ExperimentReport& r : reports) ok = ok && r.all_pass();
      if (format == "json") {
        Json arr = Json::array();
        for (const ExperimentReport& r : reports) arr.push(to_json(r));
        Json j = Json::object();
        j.add("reports", std::move(arr));
        j.add("all_pass", Json::boolean(ok));
        emit(j);
      } else if (format == "table") {
        for (const ExperimentReport& r : reports) std::cout << to_table(r) << "\n";
      } else {
        for (const ExperimentReport& r : reports) std::cout << to_csv(r) << "\n";
      }
      return ok ? 0 : 1;
    }
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return 2;
}
