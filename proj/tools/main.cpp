#include "report.hpp"

#include <dirhyp/acceptance.hpp>
#include <dirhyp/boundary.hpp>
#include <dirhyp/divergence.hpp>
#include <dirhyp/families.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

using namespace dirhyp;
using dirhyp::cli::Json;
using dirhyp::cli::to_json;

namespace {

// Thrown for bad user input after argument parsing; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string input;
  std::string family_name;
  std::vector<std::string> params;
  std::string presentation;
  std::size_t n = 8;
  std::string format = "json";
  unsigned workers = 1;
  std::uint64_t seed = AcceptanceOptions{}.seed;
  std::size_t geodesic_cap = default_geodesic_cap;
  std::size_t walk_cap = default_geodesic_cap;
  std::size_t rewrite_budget = default_rewrite_budget;
  std::size_t pair_cap = 64;
  std::size_t r_max = 8;
  std::vector<std::uint64_t> r_grid;
  std::vector<std::string> base;
  std::string rho_base;
  std::uint64_t rho_k = 0;
  std::vector<std::size_t> window;
  std::uint64_t m_cap = 4;
  std::string from, to;
  std::string gamma = "1", c = "0";
  bool allow_repeats = false;
  bool symmetric_gap = false;
  std::string target, map;
  std::vector<std::string> criteria;
  std::string output;

  Json to_json() const {
    Json j;
    j["command"] = command;
    if (!input.empty()) j["input"] = input;
    if (!family_name.empty()) {
      j["family"] = family_name;
      j["params"] = params;
      if (!presentation.empty()) j["presentation"] = presentation;
      j["n"] = n;
    }
    j["format"] = format;
    j["seed"] = seed;
    j["caps"] = {{"geodesic", geodesic_cap}, {"walk", walk_cap}, {"rewrite_budget", rewrite_budget},
                 {"pair", pair_cap}};
    j["r_max"] = r_max;
    if (!r_grid.empty()) j["r_grid"] = r_grid;
    return j;
  }
};

std::map<std::string, std::string> parse_params(const std::vector<std::string>& kv) {
  std::map<std::string, std::string> out;
  for (const auto& s : kv) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + s + "'");
    out[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return out;
}

std::optional<FamilySpec> family_of(const RunConfig& cfg) {
  if (cfg.family_name.empty()) return std::nullopt;
  auto f = family(cfg.family_name, parse_params(cfg.params));
  if (!cfg.presentation.empty()) {
    f.presentation = std::filesystem::exists(cfg.presentation) ? load_presentation(cfg.presentation)
                                                               : builtin_presentation(cfg.presentation);
  }
  return f;
}

struct Loaded {
  Digraph graph;
  std::optional<FamilySpec> spec;
  std::optional<BallRealization> ball;
};

Loaded load(const RunConfig& cfg) {
  if (!cfg.input.empty() && !cfg.family_name.empty()) throw UsageError("give either --input or --family, not both");
  if (!cfg.input.empty()) return {load_digraph(cfg.input), std::nullopt, std::nullopt};
  auto f = family_of(cfg);
  if (!f) throw UsageError("an input is required: --input FILE or --family NAME");
  if (f->presentation) f->params["budget"] = std::to_string(cfg.rewrite_budget);
  auto b = realize(*f, cfg.n);
  return {b.digraph, f, b};
}

Vertex lookup(const Digraph& g, const std::string& label) {
  if (auto v = g.find(label)) return *v;
  throw UsageError("no vertex labelled '" + label + "'");
}

Rational rational_arg(const std::string& s, const char* name) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw UsageError(std::string(name) + ": not a number: " + s);
  }
}

Json cmd_analyze(const RunConfig& cfg) {
  auto in = load(cfg);
  const auto& g = in.graph;
  DistanceMatrix dm(g, cfg.workers);
  Json r;
  r["config"] = cfg.to_json();
  r["vertices"] = g.size();
  r["edges"] = g.edges().size();
  if (in.ball) r["stable_core"] = in.ball->stable_core;
  r["finite_diameter"] = dm.finite_diameter();
  Json deltas = Json::object();
  ExtNat thin_all = 0;
  for (auto kind : {TriangleKind::thin, TriangleKind::slim})
    for (auto mode : {TriangleMode::all, TriangleMode::transitive}) {
      auto d = delta(g, dm, {kind, mode, cfg.workers});
      std::string key = std::string(kind == TriangleKind::thin ? "thin" : "slim") + "_" +
                        (mode == TriangleMode::all ? "all" : "transitive");
      Json e;
      e["delta"] = to_json(d.delta);
      e["exhaustive"] = d.exhaustive;
      e["triangles"] = d.triangles;
      if (d.witness) e["witness"] = cli::triangle_json(g, *d.witness);
      deltas[key] = e;
      if (kind == TriangleKind::thin && mode == TriangleMode::all) thin_all = d.delta;
    }
  r["delta"] = deltas;
  auto z = is_zero_hyperbolic(g, dm);
  r["zero_hyperbolic"] = z.zero;
  if (z.witness) r["zero_hyperbolic_witness"] = {cli::walk_json(g, z.witness->first), cli::walk_json(g, z.witness->second)};
  auto out = bound_profile(dm, Sign::out, cfg.r_max);
  auto inb = bound_profile(dm, Sign::in, cfg.r_max);
  r["bound_profile"] = {{"out", cli::profile_json(out)}, {"in", cli::profile_json(inb)}};
  if (thin_all.is_finite() && thin_all.value() + 1 <= cfg.r_max) {
    ConstantInputs ci;
    ci.delta = thin_all.value();
    ci.f = as_function(out);
    ci.g = as_function(inb);
    try {
      auto t = proof_constants(ci);
      r["constants"] = {{"delta", to_json(t.delta)},
                        {"f_delta", to_json(t.f_of_delta)},
                        {"f_delta_plus_1", to_json(t.f_of_delta_plus_1)},
                        {"side_cover_radius", to_json(t.side_cover_radius)},
                        {"order_transfer_bound", to_json(t.order_transfer_bound)},
                        {"neighbourhood_radius", to_json(t.neighbourhood_radius)},
                        {"visual_exponent", to_json(t.visual_exponent)},
                        {"divergence_k", to_json(t.divergence_k)},
                        {"divergence_e0", to_json(t.divergence_e0)}};
    } catch (const std::exception& e) {
      r["constants"] = {{"unavailable", e.what()}};
    }
  } else {
    r["constants"] = {{"unavailable", "delta + 1 exceeds r_max or delta is infinite"}};
  }
  return r;
}

std::vector<std::string> names(const BoundaryReport& b, const std::vector<std::size_t>& cls) {
  std::vector<std::string> out;
  for (auto i : cls) out.push_back(b.rays[i]);
  return out;
}

Json matrix_json(const std::vector<std::vector<ExtNat>>& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (auto e : row) r.push_back(to_json(e));
    out.push_back(r);
  }
  return out;
}

Json matrix_json(const std::vector<std::vector<Rational>>& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    out.push_back(r);
  }
  return out;
}

Json cmd_boundary(const RunConfig& cfg) {
  auto f = family_of(cfg);
  if (!f || !cfg.input.empty()) throw UsageError("boundary needs --family with designated rays");
  auto rs = rays(*f);
  if (rs.empty()) throw UsageError("family '" + f->name + "' has no designated rays");
  Truncation t(*f, cfg.n, cfg.workers);
  const auto& g = t.digraph();
  auto grid = cfg.r_grid.empty() ? default_r_grid(cfg.n) : cfg.r_grid;
  auto b = boundary_partition(t, cfg.m_cap, grid);
  Json r;
  r["config"] = cfg.to_json();
  r["config"]["m_cap"] = cfg.m_cap;
  r["config"]["r_grid"] = grid;
  r["rays"] = b.rays;
  r["provisional"] = b.provisional;
  Json order = Json::array();
  for (std::size_t i = 0; i < b.rays.size(); ++i)
    for (std::size_t j = 0; j < b.rays.size(); ++j) {
      Json e;
      e["from"] = b.rays[i];
      e["to"] = b.rays[j];
      e["status"] = to_string(b.leq[i][j]);
      Json prof = Json::array();
      for (const auto& p : b.profiles[i][j])
        prof.push_back({{"r", p.r}, {"M", to_json(p.M)}, {"status", to_string(p.status)}});
      e["profile"] = prof;
      if (b.leq[i][j] == ClaimStatus::certified && !grid.empty()) {
        auto w = ray_leq(t, rs[i], rs[j], grid.back());
        if (!w.witnesses.empty()) {
          const auto& lw = w.witnesses.front();
          e["witness"] = {{"probe", g.label(lw.probe)}, {"r", lw.r}, {"path", cli::walk_json(g, lw.path)}};
        }
      }
      order.push_back(e);
    }
  r["order"] = order;
  Json classes = Json::array();
  for (const auto& c : b.classes) classes.push_back({{"rays", names(b, c)}, {"representative", b.rays[c.front()]}});
  r["classes"] = classes;
  Json cl = Json::array();
  for (const auto& row : b.class_leq) cl.push_back(row);
  r["class_order"] = cl;

  auto e = ends_partition(*f, cfg.n, cfg.workers);
  Json ends;
  ends["schedule"] = e.schedule;
  Json growth = Json::array();
  for (std::size_t i = 0; i < e.rays.size(); ++i)
    for (std::size_t j = 0; j < e.rays.size(); ++j)
      growth.push_back({{"from", e.rays[i]},
                        {"to", e.rays[j]},
                        {"counts", e.growth[i][j]},
                        {"accepted", static_cast<bool>(e.relation[i][j])},
                        {"escape", static_cast<bool>(e.escape[i][j])}});
  ends["growth"] = growth;
  ends["cross_check_agrees"] = e.cross_check_agrees;
  Json ec = Json::array();
  for (const auto& c : e.classes) {
    Json members = Json::array();
    for (auto i : c) members.push_back(e.rays[i]);
    ec.push_back(members);
  }
  ends["classes"] = ec;
  r["ends"] = ends;
  auto m = refinement_map(b, e);
  r["refinement"] = {{"end_of_class", m.end_of_class}, {"total", m.total}, {"straddles", m.straddles}};

  if (!cfg.base.empty()) {
    std::vector<Vertex> S;
    for (const auto& l : cfg.base) S.push_back(lookup(g, l));
    std::vector<RhoPoint> pts;
    for (const auto& ray : rs) pts.push_back({ray.name, std::nullopt, ray});
    std::pair<std::size_t, std::size_t> inner{cfg.n / 4, cfg.n / 2}, outer{cfg.n / 2, cfg.n};
    if (!cfg.window.empty()) {
      if (cfg.window.size() != 4) throw UsageError("--window takes four sizes: inner lo, hi, outer lo, hi");
      inner = {cfg.window[0], cfg.window[1]};
      outer = {cfg.window[2], cfg.window[3]};
    }
    Rational base = cfg.rho_base.empty() ? default_rho_base(cfg.rho_k) : rational_arg(cfg.rho_base, "--rho-base");
    auto tr = rho_trend(t, S, pts, inner, outer, base, cfg.rho_k);
    Json rho;
    rho["base_set"] = cfg.base;
    rho["exponent_base"] = to_json(base);
    rho["epsilon_prime"] = to_json(tr.outer.epsilon_prime);
    rho["points"] = tr.outer.points;
    rho["inner"] = {{"window", {inner.first, inner.second}}, {"rho", matrix_json(tr.inner.rho)}};
    rho["outer"] = {{"window", {outer.first, outer.second}}, {"rho", matrix_json(tr.outer.rho)}};
    Json stab = Json::array();
    for (const auto& row : tr.stabilized) stab.push_back(row);
    rho["stabilized"] = stab;
    rho["rho_eps"] = matrix_json(tr.outer.rho_eps);
    rho["chain_distance"] = matrix_json(chain_distance(tr.outer.rho_eps));
    auto chk = verify_chain_inequality(tr.outer.rho_eps, tr.outer.epsilon_prime);
    rho["chain_check"] = {{"hypothesis", chk.hypothesis}, {"pass", chk.pass}};
    if (!chk.hypothesis) rho["chain_check"]["hypothesis_failure"] = chk.hypothesis_failure;
    r["rho"] = rho;
  }
  return r;
}

Json cmd_diverge(const RunConfig& cfg) {
  auto in = load(cfg);
  const auto& g = in.graph;
  DistanceMatrix dm(g, cfg.workers);
  auto d = delta(g, dm, {TriangleKind::thin, TriangleMode::all, cfg.workers});
  if (d.delta.is_infinite()) throw UsageError("thin constant is infinite");
  const std::size_t need = static_cast<std::size_t>(d.delta.value()) + 1;
  auto out = bound_profile(dm, Sign::out, std::max(cfg.r_max, need));
  auto inb = bound_profile(dm, Sign::in, std::max(cfg.r_max, need));
  ConstantInputs ci;
  ci.delta = d.delta.value();
  ci.f = as_function(out);
  ci.g = as_function(inb);
  auto table = proof_constants(ci);
  std::uint64_t r_max = cfg.r_grid.empty() ? 6 : *std::max_element(cfg.r_grid.begin(), cfg.r_grid.end());
  auto audit = audit_divergence(g, dm, table, r_max, cfg.pair_cap, cfg.workers);
  Json r;
  r["config"] = cfg.to_json();
  r["delta"] = to_json(d.delta);
  r["divergence_k"] = to_json(table.divergence_k);
  r["divergence_e0"] = to_json(table.divergence_e0);
  Json bounds = Json::array();
  for (std::uint64_t k = 0; k <= r_max; ++k) bounds.push_back({{"r", k}, {"e", divergence_bound_text(k, table)}});
  r["bounds"] = bounds;
  r["configs"] = audit.configs;
  r["triggered"] = audit.triggered;
  r["escaping"] = audit.escaping;
  r["exhaustive"] = audit.exhaustive;
  Json vs = Json::array();
  for (const auto& v : audit.violations)
    vs.push_back({{"x", g.label(v.config.x)},
                  {"first", cli::walk_json(g, v.config.first)},
                  {"second", cli::walk_json(g, v.config.second)},
                  {"R", v.config.R},
                  {"r", v.config.r},
                  {"length", v.length},
                  {"path", cli::walk_json(g, v.path)}});
  r["violations"] = vs;
  return r;
}

Json stability_json(const Digraph& g, Vertex x, Vertex y, const StabilityReport& s) {
  Json e;
  e["from"] = g.label(x);
  e["to"] = g.label(y);
  e["kappa_out"] = to_json(s.kappa_out);
  e["kappa_in"] = to_json(s.kappa_in);
  e["walks"] = s.walks;
  e["exhaustive"] = s.exhaustive;
  if (s.witness_out)
    e["witness_out"] = {cli::walk_json(g, s.witness_out->first), cli::walk_json(g, s.witness_out->second)};
  if (s.witness_in) e["witness_in"] = {cli::walk_json(g, s.witness_in->first), cli::walk_json(g, s.witness_in->second)};
  return e;
}

Json cmd_stability(const RunConfig& cfg) {
  auto in = load(cfg);
  const auto& g = in.graph;
  DistanceMatrix dm(g, cfg.workers);
  Rational gamma = rational_arg(cfg.gamma, "--gamma"), c = rational_arg(cfg.c, "--c");
  StabilityOptions opt{cfg.walk_cap, !cfg.allow_repeats};
  Json r;
  r["config"] = cfg.to_json();
  r["config"]["gamma"] = to_json(gamma);
  r["config"]["c"] = to_json(c);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (!cfg.from.empty() || !cfg.to.empty()) {
    if (cfg.from.empty() || cfg.to.empty()) throw UsageError("--from and --to go together");
    pairs.emplace_back(lookup(g, cfg.from), lookup(g, cfg.to));
  } else {
    for (Vertex x = 0; x < g.size(); ++x)
      for (Vertex y = 0; y < g.size(); ++y)
        if (x != y && dm(x, y).is_finite()) pairs.emplace_back(x, y);
  }
  ExtNat worst_out = 0, worst_in = 0;
  bool exhaustive = true;
  Json per = Json::array();
  for (auto [x, y] : pairs) {
    if (dm(x, y).is_infinite()) throw UsageError(g.label(y) + " is not reachable from " + g.label(x));
    auto s = stability_defect(g, dm, x, y, gamma, c, opt);
    worst_out = std::max(worst_out, s.kappa_out);
    worst_in = std::max(worst_in, s.kappa_in);
    exhaustive = exhaustive && s.exhaustive;
    if (pairs.size() == 1 || s.kappa_out > 0 || s.kappa_in > 0) per.push_back(stability_json(g, x, y, s));
  }
  r["pairs"] = pairs.size();
  r["kappa_out"] = to_json(worst_out);
  r["kappa_in"] = to_json(worst_in);
  r["exhaustive"] = exhaustive;
  r["nonzero"] = per;
  return r;
}

Json cmd_qi(const RunConfig& cfg) {
  if (cfg.target.empty() || cfg.map.empty()) throw UsageError("qi needs --target FILE and --map FILE");
  auto src = load(cfg);
  auto dst = load_digraph(cfg.target);
  std::ifstream mf(cfg.map);
  if (!mf) throw std::runtime_error("cannot open " + cfg.map);
  std::string text((std::istreambuf_iterator<char>(mf)), std::istreambuf_iterator<char>());
  auto map = parse_vertex_map(text, src.graph, dst);
  DistanceMatrix d1(src.graph, cfg.workers), d2(dst, cfg.workers);
  Rational gamma = rational_arg(cfg.gamma, "--gamma"), c = rational_arg(cfg.c, "--c");
  auto q = qi_check(map, d1, d2, gamma, c);
  Json r;
  r["config"] = cfg.to_json();
  r["config"]["target"] = cfg.target;
  r["config"]["map"] = cfg.map;
  r["config"]["gamma"] = to_json(gamma);
  r["config"]["c"] = to_json(c);
  r["ok"] = q.ok;
  Json vs = Json::array();
  for (const auto& v : q.violations) {
    const char* kind = v.kind == QiViolation::Kind::lower      ? "lower"
                       : v.kind == QiViolation::Kind::upper    ? "upper"
                       : v.kind == QiViolation::Kind::infinite ? "infinite"
                                                               : "codensity";
    Json e{{"kind", kind}};
    if (v.kind == QiViolation::Kind::codensity) {
      e["target"] = dst.label(v.b);
    } else {
      e["a"] = src.graph.label(v.a);
      e["b"] = src.graph.label(v.b);
    }
    vs.push_back(e);
    if (vs.size() == 50) break;
  }
  r["violations"] = vs;
  r["violation_count"] = q.violations.size();
  return r;
}

Json cmd_family_list() {
  Json r = Json::array();
  for (const auto& f : list_families())
    r.push_back({{"name", f.name},
                 {"description", f.description},
                 {"params", f.params},
                 {"rays", f.has_rays},
                 {"finitely_based", f.finitely_based}});
  return r;
}

std::string cmd_family_export(const RunConfig& cfg) {
  auto in = load(cfg);
  if (cfg.format == "text") return format_digraph(in.graph);
  Json r;
  r["config"] = cfg.to_json();
  r["stable_core"] = in.ball->stable_core;
  r["labels"] = in.graph.labels();
  r["level"] = in.ball->level;
  Json es = Json::array();
  for (const auto& e : in.graph.edges()) es.push_back({in.graph.label(e.from), in.graph.label(e.to)});
  r["edges"] = es;
  if (in.spec) {
    Json rs = Json::array();
    for (const auto& ray : rays(*in.spec)) {
      Json vs = Json::array();
      for (Vertex v : ray_vertices(*in.ball, ray)) vs.push_back(in.graph.label(v));
      rs.push_back({{"name", ray.name}, {"kind", ray.kind == RayKind::ray ? "ray" : "anti-ray"}, {"vertices", vs}});
    }
    r["rays"] = rs;
  }
  return cli::render(r, cfg.format);
}

int cmd_verify(const RunConfig& cfg) {
  AcceptanceOptions opt;
  opt.seed = cfg.seed;
  opt.only = cfg.criteria;
  opt.workers = cfg.workers;
  std::vector<CriterionResult> results;
  try {
    results = run_acceptance(opt);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool all = true;
  if (cfg.format == "json") {
    Json r;
    r["config"] = cfg.to_json();
    r["config"]["criteria"] = cfg.criteria;
    Json rows = Json::array();
    for (const auto& c : results) rows.push_back({{"id", c.id}, {"passed", c.passed}, {"detail", c.detail}});
    r["criteria"] = rows;
    for (const auto& c : results) all = all && c.passed;
    r["all_passed"] = all;
    std::cout << r.dump(2) << '\n';
  } else {
    for (const auto& c : results) {
      std::cout << c.id << '\t' << (c.passed ? "PASS" : "FAIL") << '\t' << c.detail << '\n';
      all = all && c.passed;
    }
  }
  return all ? 0 : 1;
}

void emit(const RunConfig& cfg, const Json& report) {
  auto text = cli::render(report, cfg.format);
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw std::runtime_error("cannot write " + cfg.output);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed hyperbolicity toolkit for finite digraphs and truncated families"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool graph_input) {
    sub->add_option("--format", cfg.format, "json or tsv")->check(CLI::IsMember({"json", "tsv", "text"}));
    sub->add_option("--workers", cfg.workers, "worker threads")->envname("DIRHYP_WORKERS")->check(CLI::Range(1u, 1024u));
    sub->add_option("--seed", cfg.seed, "seed for randomized suites");
    sub->add_option("-o,--output", cfg.output, "write the report here instead of stdout");
    if (!graph_input) return;
    sub->add_option("-i,--input", cfg.input, "digraph file")->check(CLI::ExistingFile);
    sub->add_option("-f,--family", cfg.family_name, "family name (see 'family list')");
    sub->add_option("-p,--param", cfg.params, "family parameter key=value");
    sub->add_option("--presentation", cfg.presentation, "presentation file or builtin name");
    sub->add_option("-n,--n", cfg.n, "truncation size")->check(CLI::PositiveNumber);
    sub->add_option("--geodesic-cap", cfg.geodesic_cap, "geodesic enumeration cap");
    sub->add_option("--walk-cap", cfg.walk_cap, "quasi-geodesic walk cap");
    sub->add_option("--rewrite-budget", cfg.rewrite_budget, "rewrite steps per normal form");
    sub->add_option("--r-max", cfg.r_max, "largest radius for bound profiles");
    sub->add_option("--r-grid", cfg.r_grid, "radii to test")->delimiter(',');
  };

  auto* analyze = app.add_subcommand("analyze", "distances, thin/slim constants, bound profiles");
  common(analyze, true);

  auto* boundary = app.add_subcommand("boundary", "ray order, ends and rho for a family");
  common(boundary, true);
  boundary->add_option("--m-cap", cfg.m_cap, "largest connecting length certified");
  boundary->add_option("--base", cfg.base, "base set S for rho (vertex labels)")->delimiter(',');
  boundary->add_option("--window", cfg.window, "inner lo,hi,outer lo,hi")->delimiter(',');
  boundary->add_option("--rho-base", cfg.rho_base, "exponent base, default from --rho-k");
  boundary->add_option("--rho-k", cfg.rho_k, "eps' = base^(2k)");

  auto* diverge = app.add_subcommand("diverge", "audit escaping paths against the divergence bound");
  common(diverge, true);
  diverge->add_option("--pair-cap", cfg.pair_cap, "geodesics per endpoint pair");

  auto* stability = app.add_subcommand("stability", "quasi-geodesic fellow travelling");
  common(stability, true);
  stability->add_option("--from", cfg.from, "start vertex label");
  stability->add_option("--to", cfg.to, "end vertex label");
  stability->add_option("--gamma", cfg.gamma, "multiplicative constant");
  stability->add_option("--c", cfg.c, "additive constant");
  stability->add_flag("--allow-repeats", cfg.allow_repeats, "include non-simple walks");

  auto* qi = app.add_subcommand("qi", "check a vertex map is a quasi-isometry");
  common(qi, true);
  qi->add_option("--target", cfg.target, "target digraph file")->check(CLI::ExistingFile);
  qi->add_option("--map", cfg.map, "two-column vertex map")->check(CLI::ExistingFile);
  qi->add_option("--gamma", cfg.gamma, "multiplicative constant");
  qi->add_option("--c", cfg.c, "additive constant");

  auto* fam = app.add_subcommand("family", "list or export families");
  fam->require_subcommand(1);
  auto* fam_list = fam->add_subcommand("list", "list families");
  common(fam_list, false);
  auto* fam_export = fam->add_subcommand("export", "write a truncation (json, tsv or text)");
  common(fam_export, true);

  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  common(verify, false);
  verify->add_option("--criterion", cfg.criteria, "criterion id, repeatable")->delimiter(',');
  verify->footer("exit status 0 iff every selected criterion passes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      cfg.command = "analyze";
      emit(cfg, cmd_analyze(cfg));
    } else if (*boundary) {
      cfg.command = "boundary";
      emit(cfg, cmd_boundary(cfg));
    } else if (*diverge) {
      cfg.command = "diverge";
      emit(cfg, cmd_diverge(cfg));
    } else if (*stability) {
      cfg.command = "stability";
      emit(cfg, cmd_stability(cfg));
    } else if (*qi) {
      cfg.command = "qi";
      emit(cfg, cmd_qi(cfg));
    } else if (*fam_list) {
      cfg.command = "family list";
      emit(cfg, cmd_family_list());
    } else if (*fam_export) {
      cfg.command = "family export";
      if (cfg.family_name.empty()) throw UsageError("family export needs --family");
      auto text = cmd_family_export(cfg);
      if (cfg.output.empty()) {
        std::cout << text;
      } else {
        std::ofstream(cfg.output) << text;
      }
    } else if (*verify) {
      cfg.command = "verify";
      return cmd_verify(cfg);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
