#include <dirhyp/acceptance.hpp>
#include <dirhyp/boundary.hpp>
#include <dirhyp/parallel.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dirhyp {

Digraph random_digraph(std::mt19937_64& rng, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = size(rng);
  const double p = 0.15 + 0.5 * unit(rng);
  const double loop_p = unit(rng) < 0.2 ? 0.3 : 0.0;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (unit(rng) < (u == v ? loop_p : p)) edges.push_back({u, v});
  return Digraph(n, std::move(edges));
}

std::vector<Digraph> all_small_digraphs(std::size_t max_n) {
  if (max_n > 3) throw std::invalid_argument("exhaustive corpus limited to 3 vertices");
  std::vector<Digraph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t slots = n * n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t s = 0; s < slots; ++s)
        if (mask >> s & 1) edges.push_back({static_cast<Vertex>(s / n), static_cast<Vertex>(s % n)});
      out.emplace_back(n, std::move(edges));
    }
  }
  return out;
}

namespace {

using Check = std::function<CriterionResult(const AcceptanceOptions&)>;

std::string str(ExtNat e) { return e.str(); }

std::vector<Digraph> small_corpus(std::uint64_t seed, std::size_t random_count, std::size_t max_n) {
  auto corpus = all_small_digraphs(3);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) corpus.push_back(random_digraph(rng, max_n));
  return corpus;
}

Vertex at(const Digraph& g, const std::string& label) { return g.vertex(label); }

CriterionResult ac1(const AcceptanceOptions& opt) {
  auto corpus = small_corpus(opt.seed, 500, 6);
  std::atomic<std::size_t> zero{0}, bad{0};
  parallel_for(corpus.size(), opt.workers, [&](std::size_t i) {
    const auto& g = corpus[i];
    DistanceMatrix dm(g);
    if (!is_zero_hyperbolic(g, dm).zero) return;
    ++zero;
    if (delta(g, dm).delta != ExtNat(0)) ++bad;
  });
  Digraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
  DistanceMatrix d3(c3);
  bool c3_zero = is_zero_hyperbolic(c3, d3).zero;
  ExtNat c3_defect = delta_at(c3, d3, {0, 1, 2}).delta;
  auto sub = subdivide(c3, 2);
  DistanceMatrix ds(sub);
  ExtNat sub_delta = delta(sub, ds).delta;
  std::ostringstream os;
  os << corpus.size() << " digraphs, " << zero << " zero-hyperbolic, " << bad << " with delta > 0; 3-cycle defect "
     << c3_defect << " zero-hyperbolic " << (c3_zero ? "yes" : "no") << "; subdivided 3-cycle delta " << sub_delta;
  bool pass = bad == 0 && !c3_zero && c3_defect == ExtNat(0) && sub_delta >= ExtNat(1);
  return {"AC1", pass, os.str()};
}

CriterionResult ac2(const AcceptanceOptions& opt) {
  auto corpus = small_corpus(opt.seed, 500, 6);
  std::atomic<std::size_t> bad{0};
  parallel_for(corpus.size(), opt.workers, [&](std::size_t i) {
    const auto& g = corpus[i];
    DistanceMatrix dm(g);
    auto all = delta(g, dm, {TriangleKind::thin, TriangleMode::all, 1});
    auto tr = delta(g, dm, {TriangleKind::thin, TriangleMode::transitive, 1});
    if (!all.exhaustive || !tr.exhaustive || tr.delta > all.delta) {
      ++bad;
      return;
    }
    if (all.delta.value() > 3 * tr.delta.value()) ++bad;
  });
  std::ostringstream os;
  os << corpus.size() << " digraphs, " << bad << " violations of transitive <= all <= 3 transitive";
  return {"AC2", bad == 0, os.str()};
}

CriterionResult ac3(const AcceptanceOptions&) {
  std::ostringstream os;
  bool pass = true;
  for (std::size_t n = 2; n <= 6; ++n) {
    auto b = realize(family("ex7_4"), n + 2);
    const auto& g = b.digraph;
    DistanceMatrix dm(g);
    auto d = delta_at(g, dm,
                      {at(g, "x" + std::to_string(n)), at(g, "x" + std::to_string(n + 1)),
                       at(g, "y" + std::to_string(n + 1))})
                 .delta;
    // defect > n/2 - 1  <=>  2 defect + 2 > n
    bool ok = d.is_finite() && 2 * d.value() + 2 > n;
    pass = pass && ok;
    os << "n=" << n << ":" << d << (ok ? "" : "!") << " ";
  }
  return {"AC3", pass, "defects " + os.str()};
}

CriterionResult ac4(const AcceptanceOptions&) {
  std::ostringstream os;
  bool increasing = true;
  std::vector<ExtNat> vertex_level, subdivided;
  for (std::size_t i = 2; i <= 8; ++i) {
    auto b = realize(family("ex6_2"), i + 1);
    const auto& g = b.digraph;
    std::array<std::string, 3> names{"x0", "x" + std::to_string(i), "y" + std::to_string(i)};
    DistanceMatrix dm(g);
    vertex_level.push_back(delta_at(g, dm, {at(g, names[0]), at(g, names[1]), at(g, names[2])}).delta);
    auto s = subdivide(g, 2);
    DistanceMatrix ds(s);
    subdivided.push_back(delta_at(s, ds, {at(s, names[0]), at(s, names[1]), at(s, names[2])}).delta);
    if (subdivided.size() > 1 && !(subdivided.back() > subdivided[subdivided.size() - 2])) increasing = false;
  }
  os << "subdivided defects";
  for (auto d : subdivided) os << ' ' << d;
  os << " (vertex level";
  for (auto d : vertex_level) os << ' ' << d;
  os << ")";

  // x-side against y-side geodesic from x0: marked points stay within 2
  auto b = realize(family("ex6_2"), 9);
  const auto& g = b.digraph;
  DistanceMatrix dm(g);
  std::vector<Vertex> xs, ys{at(g, "x0")};
  for (int i = 0; i <= 8; ++i) xs.push_back(at(g, "x" + std::to_string(i)));
  for (int i = 1; i <= 8; ++i) ys.push_back(at(g, "y" + std::to_string(i)));
  Walk p1(xs), p2(ys);
  ExtNat worst = 0;
  bool close = is_geodesic(dm, p1) && is_geodesic(dm, p2);
  for (std::uint64_t R = 0; R <= 8 && close; ++R) {
    DivergenceConfig cfg{at(g, "x0"), p1, p2, R, 0};
    worst = std::max(worst, divergence_witness(g, dm, cfg).gap);
  }
  close = close && worst <= ExtNat(2);
  os << "; max marked-point gap " << worst;
  return {"AC4", increasing && close, os.str()};
}

CriterionResult ac5(const AcceptanceOptions& opt) {
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"nat_line", 12}, {"int_line", 8}, {"ex13_4_tree", 6}, {"ex16_5", 6}};
  std::ostringstream os;
  bool pass = true;
  for (const auto& [name, n] : cases) {
    auto b = realize(family(name), n);
    const auto& g = b.digraph;
    DistanceMatrix dm(g, opt.workers);
    auto d = delta(g, dm, {TriangleKind::thin, TriangleMode::all, opt.workers}).delta.value();
    auto fo = bound_profile(dm, Sign::out, d + 2);
    auto fi = bound_profile(dm, Sign::in, d + 2);
    ConstantInputs in;
    in.delta = d;
    in.f = as_function(fo);
    in.g = as_function(fi);
    auto table = proof_constants(in);
    auto audit = audit_divergence(g, dm, table, 6, 64, opt.workers);
    bool ok = audit.violations.empty();
    pass = pass && ok;
    os << name << ": delta " << d << " k " << format_rational(table.divergence_k) << " triggered " << audit.triggered
       << " escaping " << audit.escaping << " violations " << audit.violations.size() << "; ";
  }
  return {"AC5", pass, os.str()};
}

CriterionResult ac6(const AcceptanceOptions& opt) {
  std::ostringstream os;
  bool pass = true;
  std::vector<std::pair<FamilySpec, std::size_t>> cases;
  for (std::size_t n = 1; n <= 6; ++n) cases.emplace_back(family("ex16_5"), n);
  cases.emplace_back(family("free_monoid", {{"k", "2"}}), 6);
  for (const auto& [f, n] : cases) {
    auto b = realize(f, n);
    DistanceMatrix dm(b.digraph, opt.workers);
    auto d = delta(b.digraph, dm, {TriangleKind::thin, TriangleMode::all, opt.workers}).delta.value();
    auto degree = b.digraph.max_degree();
    for (Sign s : {Sign::out, Sign::in}) {
      auto prof = bound_profile(dm, s, 6);
      for (std::uint64_t r = 0; r <= 6; ++r) {
        auto v = prof.at(r);
        if (v.is_infinite() || BigInt(v.value()) > ball_size_bound(r, d, degree)) {
          pass = false;
          os << f.name << " n=" << n << " r=" << r << " value " << v << " exceeds bound; ";
        }
      }
    }
  }
  os << "profiles checked for " << cases.size() << " balls, r <= 6";
  return {"AC6", pass, os.str()};
}

CriterionResult ac7(const AcceptanceOptions& opt) {
  std::ostringstream os;
  bool pass = true;
  for (auto [name, n] : std::vector<std::pair<std::string, std::size_t>>{{"ex13_4_tree", 5}, {"ex16_5", 5}}) {
    auto b = realize(family(name), n);
    const auto& g = b.digraph;
    DistanceMatrix dm(g, opt.workers);
    auto d = delta(g, dm, {TriangleKind::thin, TriangleMode::all, opt.workers}).delta.value();
    const std::size_t r_need = d + 2;
    BoundsContext ctx(dm, d, bound_profile(dm, Sign::out, r_need), bound_profile(dm, Sign::in, r_need), 1);
    std::atomic<std::uint64_t> checked{0}, failed{0};
    std::atomic<bool> truncated{false};
    const std::size_t V = g.size();
    parallel_for(V, opt.workers, [&](std::size_t xi) {
      for (Vertex y = 0; y < V; ++y)
        for (Vertex z = 0; z < V; ++z) {
          std::array<Vertex, 3> ends{static_cast<Vertex>(xi), y, z};
          for (unsigned p = 0; p < 8; ++p) {
            auto sides = pattern_sides(ends, p);
            if (!transitive_order(sides)) continue;
            if (std::any_of(sides.begin(), sides.end(), [&](auto s) { return dm(s.first, s.second).is_infinite(); }))
              continue;
            bool tr = false;
            for (const auto& t : triangles_at(g, dm, ends, p, 4096, &tr)) {
              ++checked;
              if (!verify_bounds(g, dm, t, ctx).pass) ++failed;
            }
            if (tr) truncated = true;
          }
        }
    });
    pass = pass && failed == 0 && !truncated;
    os << name << " depth " << n << ": delta " << d << ", " << checked << " transitive triangles, " << failed
       << " failures" << (truncated ? " (truncated)" : "") << "; ";
  }
  return {"AC7", pass, os.str()};
}

// Matrices satisfying the triple inequality: random entries pushed down to a fixpoint.
std::vector<std::vector<Rational>> random_rho(std::mt19937_64& rng, std::size_t n, const Rational& eps) {
  std::uniform_int_distribution<int> num(0, 1000);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) m[a][b] = Rational(BigInt(num(rng)), BigInt(1000));
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          Rational cap = eps * std::max(m[a][c], m[c][b]);
          if (cap < m[a][b]) {
            m[a][b] = cap;
            changed = true;
          }
        }
  }
  return m;
}

// Bellman-Ford style relaxation over chains of at most n - 1 steps.
std::vector<std::vector<Rational>> chain_oracle(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> best(n, std::vector<Rational>(n));
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Rational> d = m[a];
    d[a] = 0;
    for (std::size_t round = 0; round + 1 < n; ++round)
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          if (d[u] + m[u][v] < d[v]) d[v] = d[u] + m[u][v];
    best[a] = d;
  }
  return best;
}

CriterionResult ac8(const AcceptanceOptions& opt) {
  std::mt19937_64 rng(opt.seed ^ 0x5eedULL);
  std::uniform_int_distribution<int> size(1, 8), eps_num(1011, 1409);
  std::size_t hypothesis_failures = 0, failures = 0, oracle_mismatch = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Rational eps(BigInt(eps_num(rng)), BigInt(1000));
    auto m = random_rho(rng, static_cast<std::size_t>(size(rng)), eps);
    auto rep = verify_chain_inequality(m, eps);
    if (!rep.hypothesis) ++hypothesis_failures;
    else if (!rep.pass) ++failures;
    if (chain_distance(m) != chain_oracle(m)) ++oracle_mismatch;
  }
  std::ostringstream os;
  os << "200 matrices: " << hypothesis_failures << " hypothesis failures, " << failures << " bound failures, "
     << oracle_mismatch << " chain-distance oracle mismatches";
  return {"AC8", hypothesis_failures == 0 && failures == 0 && oracle_mismatch == 0, os.str()};
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& n) {
  auto it = std::find(names.begin(), names.end(), n);
  if (it == names.end()) throw std::logic_error("missing ray " + n);
  return static_cast<std::size_t>(it - names.begin());
}

CriterionResult ac9(const AcceptanceOptions& opt) {
  const std::size_t n = 20;
  auto f = family("ex12_2");
  Truncation t(f, n, opt.workers);
  auto b = boundary_partition(t, 4, default_r_grid(n));
  auto e = ends_partition(f, n, opt.workers);
  auto m = refinement_map(b, e);
  auto v = index_of(b.rays, "v-ray"), x = index_of(b.rays, "x-anti-ray");
  bool forward = b.leq[v][x] == ClaimStatus::certified &&
                 std::all_of(b.profiles[v][x].begin(), b.profiles[v][x].end(),
                             [](const ProfileEntry& p) { return p.M == ExtNat(2); });
  bool backward = b.leq[x][v] == ClaimStatus::refuted;
  std::ostringstream os;
  os << b.classes.size() << " boundary classes, v <= x " << to_string(b.leq[v][x]) << " (M = "
     << b.profiles[v][x].front().M << "), x <= v " << to_string(b.leq[x][v]) << ", " << e.classes.size()
     << " ends, refinement " << (m.total ? "total" : "partial") << (m.straddles ? " straddling" : "");
  bool pass = b.classes.size() == 2 && forward && backward && !b.provisional && e.classes.size() == 2 && m.total &&
              !m.straddles;
  return {"AC9", pass, os.str()};
}

CriterionResult ac10(const AcceptanceOptions& opt) {
  auto f = family("ex14_2");
  Truncation t(f, 24, opt.workers);
  auto rs = rays(f);
  std::vector<RhoPoint> pts;
  for (const auto& r : rs) pts.push_back({r.name, std::nullopt, r});
  auto tr = rho_trend(t, {t.digraph().vertex("x0")}, pts, {5, 10}, {10, 20}, default_rho_base(0), 0);
  std::vector<std::string> names;
  for (const auto& r : rs) names.push_back(r.name);
  auto w = index_of(names, "x-ray"), h = index_of(names, "y-anti-ray"), m = index_of(names, "z-anti-ray");
  auto grows = [&](std::size_t a, std::size_t b) { return tr.inner.rho[a][b] < tr.outer.rho[a][b]; };
  auto bounded = [&](std::size_t a, std::size_t b) {
    return tr.inner.rho[a][b].is_finite() && tr.inner.rho[a][b] == tr.outer.rho[a][b];
  };
  auto bp = boundary_partition(t, 4, default_r_grid(24));
  bool distinct = std::none_of(bp.classes.begin(), bp.classes.end(), [&](const auto& c) {
    return std::find(c.begin(), c.end(), h) != c.end() && std::find(c.begin(), c.end(), m) != c.end();
  });
  std::ostringstream os;
  auto cell = [&](std::size_t a, std::size_t b) {
    return str(tr.inner.rho[a][b]) + "->" + str(tr.outer.rho[a][b]);
  };
  os << "rho(w,eta) " << cell(w, h) << ", rho(w,mu) " << cell(w, m) << ", rho(eta,mu) " << cell(h, m)
     << ", rho(mu,eta) " << cell(m, h) << ", eta and mu " << (distinct ? "distinct" : "merged");
  bool pass = grows(w, h) && grows(w, m) && distinct && bounded(h, m) && bounded(m, h);
  return {"AC10", pass, os.str()};
}

// Independent element model for <a,b | a^2 = b^2, ab = ba>: a^i b^j with j in {0,1}.
std::size_t ex16_5_ball_oracle(std::size_t radius) {
  std::set<std::pair<std::size_t, std::size_t>> elems;
  for (std::size_t len = 0; len <= radius; ++len)
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w) {
      std::size_t bs = static_cast<std::size_t>(std::popcount(w));
      std::size_t as = len - bs;
      elems.insert({as + 2 * (bs / 2), bs % 2});
    }
  return elems.size();
}

CriterionResult ac11(const AcceptanceOptions& opt) {
  std::ostringstream os;
  bool apart = true, sizes = true;
  std::vector<ExtNat> deltas;
  for (std::size_t n = 1; n <= 6; ++n) {
    auto b = realize(family("ex16_5"), n);
    const auto& g = b.digraph;
    if (g.size() != ex16_5_ball_oracle(n)) sizes = false;
    if (n < 2) continue;
    DistanceMatrix dm(g, opt.workers);
    auto a = g.vertex("a"), bb = g.vertex("b");
    if (dm(a, bb).is_finite() || dm(bb, a).is_finite()) apart = false;
    if (n >= 4) deltas.push_back(delta(g, dm, {TriangleKind::thin, TriangleMode::all, opt.workers}).delta);
  }
  bool stable = std::adjacent_find(deltas.begin(), deltas.end(), std::not_equal_to<>()) == deltas.end();

  // identity map from the {a,b} ball onto the same elements in the {a,b,ab} digraph
  auto small = realize(family("ex16_5"), 6);
  auto wide = realize(family("ex16_5", {{"gens", "a,b,ab"}}), 6);
  std::vector<Vertex> keep;
  for (const auto& l : small.digraph.labels()) keep.push_back(wide.digraph.vertex(l));
  auto target = induced(wide.digraph, keep);
  DistanceMatrix d1(small.digraph, opt.workers), d2(target, opt.workers);
  std::vector<Vertex> map;
  for (const auto& l : small.digraph.labels()) map.push_back(target.vertex(l));
  std::optional<std::pair<Rational, Rational>> found;
  for (int gi = 2; gi <= 4 && !found; ++gi)
    for (int c = 0; c <= 2 && !found; ++c) {
      Rational gamma(BigInt(gi), BigInt(2));
      if (qi_check(map, d1, d2, gamma, Rational(c)).ok) found.emplace(gamma, Rational(c));
    }
  os << "a, b mutually unreachable: " << (apart ? "yes" : "no") << "; ball sizes match: " << (sizes ? "yes" : "no")
     << "; delta at 4..6:";
  for (auto d : deltas) os << ' ' << d;
  if (found)
    os << "; identity is a (" << format_rational(found->first) << ", " << format_rational(found->second)
       << ")-quasi-isometry";
  else
    os << "; no (gamma <= 2, c <= 2) certificate";
  return {"AC11", apart && sizes && stable && found.has_value(), os.str()};
}

// Walks of length exactly d(x, y) counted by adjacency-matrix powers.
std::vector<std::vector<std::uint64_t>> walk_counts(const Digraph& g, std::size_t length) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::uint64_t>> A(n, std::vector<std::uint64_t>(n, 0));
  for (const auto& e : g.edges()) ++A[e.from][e.to];
  std::vector<std::vector<std::uint64_t>> P(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) P[i][i] = 1;
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<std::vector<std::uint64_t>> Q(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) Q[i][l] += P[i][j] * A[j][l];
    P = std::move(Q);
  }
  return P;
}

CriterionResult ac12(const AcceptanceOptions& opt) {
  std::mt19937_64 rng(opt.seed ^ 0xabcdefULL);
  std::vector<Digraph> corpus;
  for (int i = 0; i < 500; ++i) {
    auto g = random_digraph(rng, 7);
    // duplicate some edges so multiplicities matter
    auto edges = g.edges();
    std::uniform_int_distribution<std::size_t> pick(0, edges.empty() ? 0 : edges.size() - 1);
    if (!edges.empty() && i % 3 == 0) edges.push_back(edges[pick(rng)]);
    corpus.emplace_back(g.size(), std::move(edges));
  }
  std::atomic<std::size_t> mismatches{0}, non_geodesic{0}, pairs{0};
  parallel_for(corpus.size(), opt.workers, [&](std::size_t i) {
    const auto& g = corpus[i];
    DistanceMatrix dm(g);
    std::map<std::size_t, std::vector<std::vector<std::uint64_t>>> powers;
    for (Vertex x = 0; x < g.size(); ++x)
      for (Vertex y = 0; y < g.size(); ++y) {
        auto d = dm(x, y);
        if (d.is_infinite()) continue;
        ++pairs;
        auto it = powers.find(d.value());
        if (it == powers.end()) it = powers.emplace(d.value(), walk_counts(g, d.value())).first;
        auto count = count_geodesics(g, dm, x, y);
        auto listed = enumerate_geodesics(g, dm, x, y, 1000000);
        if (count != BigInt(it->second[x][y]) || listed.truncated || BigInt(listed.sample.size()) != count)
          ++mismatches;
        for (const auto& w : listed.sample)
          if (!is_geodesic(dm, w) || !is_walk(g, w)) ++non_geodesic;
      }
  });
  std::ostringstream os;
  os << corpus.size() << " digraphs, " << pairs << " reachable pairs, " << mismatches << " count mismatches, "
     << non_geodesic << " non-geodesic outputs";
  return {"AC12", mismatches == 0 && non_geodesic == 0, os.str()};
}

CriterionResult ac13(const AcceptanceOptions& opt) {
  std::ostringstream os;
  Digraph diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  DistanceMatrix dd(diamond);
  auto rep = stability_defect(diamond, dd, 0, 3, Rational(1), Rational(0));
  bool diamond_ok = rep.exhaustive && rep.kappa_out == ExtNat(1) && rep.kappa_in == ExtNat(1);
  os << "diamond kappa " << rep.kappa_out << "/" << rep.kappa_in;
  bool ex_ok = true;
  for (std::size_t n = 2; n <= 5; ++n) {
    auto b = realize(family("ex7_4"), n);
    const auto& g = b.digraph;
    DistanceMatrix dm(g);
    std::vector<ExtNat> worst(g.size(), 0);
    std::vector<char> partial(g.size(), 0);
    parallel_for(g.size(), opt.workers, [&](std::size_t xi) {
      for (Vertex y = 0; y < g.size(); ++y) {
        if (dm(static_cast<Vertex>(xi), y).is_infinite()) continue;
        auto r = stability_defect(g, dm, static_cast<Vertex>(xi), y, Rational(2), Rational(1));
        if (!r.exhaustive) partial[xi] = 1;
        worst[xi] = std::max({worst[xi], r.kappa_out, r.kappa_in});
      }
    });
    ExtNat w = *std::max_element(worst.begin(), worst.end());
    bool complete = std::none_of(partial.begin(), partial.end(), [](char c) { return c != 0; });
    ex_ok = ex_ok && complete && w <= ExtNat(3);
    os << "; ex7_4 n=" << n << " max kappa " << w << (complete ? "" : " (capped)");
  }
  return {"AC13", diamond_ok && ex_ok, os.str()};
}

const std::vector<std::pair<std::string, Check>>& registry() {
  static const std::vector<std::pair<std::string, Check>> r{
      {"AC1", ac1}, {"AC2", ac2},   {"AC3", ac3},   {"AC4", ac4},   {"AC5", ac5},   {"AC6", ac6},  {"AC7", ac7},
      {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}, {"AC11", ac11}, {"AC12", ac12}, {"AC13", ac13}};
  return r;
}

}  // namespace

std::vector<std::string> criterion_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  for (const auto& id : opt.only) {
    auto ids = criterion_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
      throw std::invalid_argument("unknown criterion '" + id + "'");
  }
  std::vector<CriterionResult> out;
  for (const auto& [id, fn] : registry()) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
    try {
      out.push_back(fn(opt));
    } catch (const std::exception& e) {
      out.push_back({id, false, std::string("error: ") + e.what()});
    }
  }
  return out;
}

}  // namespace dirhyp
