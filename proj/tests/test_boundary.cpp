#include <doctest.h>

#include <dirhyp/boundary.hpp>

#include "oracles.hpp"

#include <set>

using namespace dirhyp;

namespace {

std::size_t index_of(const std::vector<std::string>& names, const std::string& n) {
  return static_cast<std::size_t>(std::find(names.begin(), names.end(), n) - names.begin());
}

std::set<std::set<std::string>> class_names(const std::vector<std::string>& rays,
                                            const std::vector<std::vector<std::size_t>>& classes) {
  std::set<std::set<std::string>> out;
  for (const auto& c : classes) {
    std::set<std::string> s;
    for (auto i : c) s.insert(rays[i]);
    out.insert(s);
  }
  return out;
}

// Smallest vertex set whose removal leaves no path from `from` to `to`.
std::uint64_t min_vertex_cut(const Digraph& g, const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
  const std::size_t n = g.size();
  std::uint64_t best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto size = static_cast<std::uint64_t>(std::popcount(mask));
    if (size >= best) continue;
    std::vector<Edge> es;
    for (const auto& e : g.edges())
      if (!(mask >> e.from & 1) && !(mask >> e.to & 1)) es.push_back(e);
    auto d = oracle::floyd(Digraph(n, es));
    bool cut = true;
    for (Vertex a : from)
      for (Vertex b : to)
        if (!(mask >> a & 1) && !(mask >> b & 1) && d[a][b] != oracle::inf) cut = false;
    if (cut) best = size;
  }
  return best;
}

using Matrix = std::vector<std::vector<Rational>>;

Rational q(long long p, long long d) { return Rational(BigInt(p), BigInt(d)); }

}  // namespace

TEST_CASE("ray comparison on the v/x example") {
  Truncation t(family("ex12_2"), 12);
  auto rs = rays(t.spec);
  auto forward = ray_leq(t, rs[0], rs[1], 2);
  CHECK(forward.status == ClaimStatus::certified);
  CHECK(forward.length == ExtNat(2));
  CHECK_FALSE(forward.witnesses.empty());
  for (const auto& w : forward.witnesses) CHECK(is_walk(t.digraph(), w.path));
  auto backward = ray_leq(t, rs[1], rs[0], 2);
  CHECK(backward.status == ClaimStatus::refuted);
  CHECK(backward.failing_probe.has_value());
  CHECK(ray_leq_witness(t.spec, rs[0], rs[1], 2, 1, 12).status == ClaimStatus::certified);
  CHECK(ray_leq_witness(t.spec, rs[0], rs[1], 1, 1, 12).status == ClaimStatus::refuted);
  auto profile = estimate_M_profile(t, rs[0], rs[1], default_r_grid(12));
  CHECK(profile.size() == 5);
  for (const auto& p : profile) CHECK(p.M == ExtNat(2));
}

TEST_CASE("r grid") {
  CHECK(default_r_grid(3) == std::vector<std::uint64_t>{0});
  CHECK(default_r_grid(8) == std::vector<std::uint64_t>{0, 1, 2});
  CHECK(default_r_grid(20).size() == 9);
}

TEST_CASE("boundary classes of the examples") {
  struct Case {
    const char* family;
    std::size_t n;
    std::set<std::set<std::string>> classes;
  };
  std::vector<Case> cases{
      {"nat_line", 12, {{"x-ray"}}},
      {"int_line", 12, {{"right-ray", "zig"}, {"left-ray"}}},
      {"ex6_2", 12, {{"x-ray"}, {"y-ray"}}},
      {"ex12_2", 12, {{"v-ray"}, {"x-anti-ray"}}},
      {"ex14_2", 12, {{"x-ray"}, {"y-anti-ray"}, {"z-anti-ray"}}},
      {"ex13_4_tree", 6, {{"x-ray"}, {"x-anti-ray"}}},
  };
  for (const auto& c : cases) {
    INFO(c.family);
    auto f = family(c.family);
    auto b = boundary_partition(f, c.n, 4, default_r_grid(c.n));
    CHECK_FALSE(b.provisional);
    CHECK(class_names(b.rays, b.classes) == c.classes);
    auto e = ends_partition(f, c.n);
    CHECK(e.cross_check_agrees);
    CHECK(class_names(e.rays, e.classes) == c.classes);
    auto m = refinement_map(b, e);
    CHECK(m.total);
    CHECK_FALSE(m.straddles);
  }
}

TEST_CASE("the comparison is a quasi-order") {
  for (const char* name : {"int_line", "ex6_2", "ex12_2", "ex14_2"}) {
    auto b = boundary_partition(family(name), 12, 4, default_r_grid(12));
    const std::size_t k = b.rays.size();
    for (std::size_t i = 0; i < k; ++i) {
      CHECK(b.leq[i][i] == ClaimStatus::certified);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l)
          if (b.leq[i][j] == ClaimStatus::certified && b.leq[j][l] == ClaimStatus::certified)
            CHECK(b.leq[i][l] != ClaimStatus::refuted);
    }
  }
}

TEST_CASE("long generators leave the boundary provisional") {
  auto b = boundary_partition(family("ex16_5", {{"gens", "a,b,ab"}}), 8, 4, default_r_grid(8));
  CHECK(b.provisional);
}

TEST_CASE("disjoint paths match the minimum vertex cut") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 120; ++t) {
    auto g = oracle::random_digraph(rng, 2, 7, true);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.size() - 1));
    std::vector<Vertex> from{pick(rng), pick(rng)}, to{pick(rng), pick(rng)};
    std::sort(from.begin(), from.end());
    from.erase(std::unique(from.begin(), from.end()), from.end());
    std::sort(to.begin(), to.end());
    to.erase(std::unique(to.begin(), to.end()), to.end());
    CHECK(max_disjoint_paths(g, from, to) == min_vertex_cut(g, from, to));
  }
}

TEST_CASE("disjoint path counts grow with the truncation") {
  auto f = family("ex6_2");
  auto rs = rays(f);
  std::uint64_t last = 0;
  for (std::size_t n : {4, 8, 12}) {
    auto c = disjoint_paths(f, rs[0], rs[1], n);
    CHECK(c > last);
    last = c;
    CHECK(disjoint_paths(f, rs[1], rs[0], n) == 0);
  }
}

TEST_CASE("geodesic extraction") {
  Truncation line(family("int_line"), 12);
  for (const auto& r : rays(line.spec)) {
    auto x = extract_geodesic_ray(line, r);
    CHECK(x.geodesic);
    CHECK(x.out_bound == ExtNat(0));
    CHECK(line.digraph().label(x.vertices.at(3)) == (r.name == "left-ray" ? "x-3" : "x3"));
    CHECK(x.same_as_input == (r.name != "zig"));
  }
  Truncation t(family("ex16_5", {{"gens", "a,b,ab"}}), 8);
  for (const auto& r : rays(t.spec)) {
    auto x = extract_geodesic_ray(t, r);
    CHECK(x.geodesic);
    CHECK_FALSE(x.same_as_input);
    CHECK(x.out_bound == ExtNat(1));
    CHECK(x.in_bound == ExtNat(1));
    for (std::size_t i = 0; i + 1 < x.vertices.size(); ++i)
      CHECK(t.dm(x.vertices[0], x.vertices[i + 1]) == ExtNat(i + 1));
  }
}

TEST_CASE("rho on the fork of anti-rays") {
  Truncation t(family("ex14_2"), 24);
  std::vector<RhoPoint> pts;
  for (const auto& r : rays(t.spec)) pts.push_back({r.name, std::nullopt, r});
  Vertex x0 = t.digraph().vertex("x0");
  pts.push_back({"x0", x0, std::nullopt});
  auto tr = rho_trend(t, {x0}, pts, {5, 10}, {10, 20}, Rational(2), 0);
  CHECK(tr.inner.rho[0][1] == ExtNat(5));
  CHECK(tr.outer.rho[0][1] == ExtNat(10));
  CHECK_FALSE(tr.stabilized[0][1]);
  CHECK(tr.inner.rho[1][1] == ExtNat(6));
  CHECK(tr.inner.rho[1][2].is_infinite());
  CHECK(tr.inner.rho_eps[1][2] == Rational(0));
  CHECK(tr.inner.rho_eps[0][1] == q(1, 32));
  CHECK(tr.inner.rho[3][3] == ExtNat(0));
  CHECK(tr.inner.epsilon_prime == Rational(1));
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = 0; b < pts.size(); ++b) CHECK(tr.inner.rho[a][b] <= tr.outer.rho[a][b]);
}

TEST_CASE("rho bases") {
  CHECK(default_rho_base(0) == Rational(2));
  CHECK(default_rho_base(1) == q(7, 6));
  CHECK(default_rho_base(10) == q(59, 58));
  for (std::uint64_t k : {1, 2, 5, 10}) {
    auto b = default_rho_base(k);
    CHECK(rational_pow(b, 4 * k) < Rational(2));
    // the next coarser base fails
    auto m = denominator(b);
    CHECK(rational_pow(Rational(BigInt(m), BigInt(m - 1)), 4 * k) >= Rational(2));
  }
  CHECK(rational_pow(q(3, 2), 3) == q(27, 8));
}

TEST_CASE("chain distance") {
  Matrix m{{0, q(1, 3), 1}, {q(1, 3), 0, q(1, 3)}, {1, q(1, 3), 0}};
  auto c = chain_distance(m);
  CHECK(c[0][2] == q(2, 3));
  CHECK(c[0][1] == q(1, 3));
  std::vector<std::vector<double>> md{{0, 0.5, 0.9}, {0.5, 0, 0.5}, {0.9, 0.5, 0}};
  CHECK(chain_distance(md)[0][2] == doctest::Approx(0.9));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + rng() % 5;
    Matrix r(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b) r[a][b] = q(static_cast<long long>(rng() % 11), 10);
    auto d = chain_distance(r);
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(d[a][a] == Rational(0));
      for (std::size_t b = 0; b < n; ++b) {
        CHECK(d[a][b] <= r[a][b]);
        for (std::size_t k = 0; k < n; ++k) CHECK(d[a][b] <= d[a][k] + d[k][b]);
      }
    }
  }
}

TEST_CASE("chain inequality contract") {
  Matrix ultra{{0, q(1, 2), q(1, 2)}, {q(1, 2), 0, q(1, 2)}, {q(1, 2), q(1, 2), 0}};
  auto ok = verify_chain_inequality(ultra, Rational(1));
  CHECK(ok.hypothesis);
  CHECK(ok.pass);
  auto big = verify_chain_inequality(ultra, q(3, 2));
  CHECK_FALSE(big.hypothesis);
  CHECK_FALSE(big.hypothesis_failure.empty());
  Matrix out_of_range{{0, 2}, {2, 0}};
  CHECK_FALSE(verify_chain_inequality(out_of_range, Rational(1)).hypothesis);
  // 1 > 1.1 * max(1/3, 1/3) breaks the triple condition
  Matrix spread{{0, q(1, 3), 1}, {q(1, 3), 0, q(1, 3)}, {1, q(1, 3), 0}};
  CHECK_FALSE(verify_chain_inequality(spread, q(11, 10)).hypothesis);
  std::vector<std::vector<double>> ud{{0, 0.5}, {0.5, 0}};
  CHECK(verify_chain_inequality(ud, 1.0).pass);
}

TEST_CASE("neighbourhoods along the v ray") {
  Truncation t(family("ex12_2"), 20);
  RhoPoint eta{"v-ray", std::nullopt, rays(t.spec)[0]};
  Vertex x0 = t.digraph().vertex("x0");
  auto member = [&](const char* y, NeighborhoodSide s) {
    return neighborhood_member(t, eta, t.digraph().vertex(y), x0, 3, s, {14, 18}).member;
  };
  CHECK(member("u12", NeighborhoodSide::minus));
  CHECK(member("v12", NeighborhoodSide::minus));
  CHECK_FALSE(member("w12", NeighborhoodSide::minus));
  CHECK_FALSE(member("u12", NeighborhoodSide::plus));
  CHECK(member("x12", NeighborhoodSide::plus));
  // inside the ball never counts
  CHECK_FALSE(member("v1", NeighborhoodSide::minus));
}

TEST_CASE("bases") {
  auto g = parse_digraph("3 1\n0 1\n");
  DistanceMatrix dm(g);
  std::vector<Vertex> all{0, 1, 2};
  CHECK(base_check(dm, all).is_base);
  std::vector<Vertex> one{0};
  auto bc = base_check(dm, one);
  CHECK_FALSE(bc.is_base);
  CHECK(bc.uncovered == std::vector<Vertex>{2});
  Truncation tree(family("ex13_4_tree"), 6);
  CHECK(base_check(tree.dm, std::vector<Vertex>{0}).is_base);
  std::vector<Vertex> bad{9};
  CHECK_THROWS_AS(base_check(dm, bad), std::invalid_argument);
}

TEST_CASE("independence matches subset search") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 80; ++t) {
    auto g = oracle::random_digraph(rng, 1, 8);
    DistanceMatrix dm(g);
    auto d = oracle::floyd(g);
    Vertex x = static_cast<Vertex>(rng() % g.size());
    std::uint64_t r = rng() % 3;
    Sign s = rng() % 2 ? Sign::out : Sign::in;
    std::vector<Vertex> pts;
    for (Vertex v = 0; v < g.size(); ++v)
      if ((s == Sign::out ? d[x][v] : d[v][x]) <= r) pts.push_back(v);
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << pts.size()); ++mask) {
      bool ok = true;
      for (std::size_t a = 0; a < pts.size() && ok; ++a)
        for (std::size_t b = a + 1; b < pts.size() && ok; ++b)
          if ((mask >> a & 1) && (mask >> b & 1))
            ok = d[pts[a]][pts[b]] == oracle::inf && d[pts[b]][pts[a]] == oracle::inf;
      if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
    }
    auto ind = independence(dm, x, r, s);
    CHECK(ind.exact);
    CHECK(ind.set.size() == best);
  }
  auto cyc = parse_digraph("3 3\n0 1\n1 2\n2 0\n");
  DistanceMatrix dc(cyc);
  CHECK(independence(dc, 0, 2, Sign::out).set.size() == 1);
  Truncation tree(family("ex13_4_tree"), 6);
  CHECK(independence(tree.dm, 0, 3, Sign::out).set.size() == 3);
}
