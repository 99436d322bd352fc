#include <doctest.h>

#include <dirhyp/distance.hpp>
#include <dirhyp/divergence.hpp>

#include "oracles.hpp"

using namespace dirhyp;

namespace {

// two geodesics out of 0 joined far away: 0 1 2 3 and 0 4 5 6, with 3 7 8 6
Digraph joined_fork() { return parse_digraph("9 9\n0 1\n1 2\n2 3\n0 4\n4 5\n5 6\n3 7\n7 8\n8 6\n"); }

}  // namespace

TEST_CASE("point_at walks from either end") {
  auto g = parse_digraph("4 3\n0 1\n1 2\n2 3\n");
  DistanceMatrix dm(g);
  Walk p({0, 1, 2, 3});
  CHECK(point_at(dm, p, 0, 2) == 2);
  CHECK(point_at(dm, p, 3, 1) == 2);
  CHECK(point_at(dm, p, 3, 3) == 0);
  CHECK_THROWS(point_at(dm, p, 0, 4));
  CHECK_THROWS(point_at(dm, p, 1, 0));
}

TEST_CASE("divergence witness on a fork") {
  auto g = joined_fork();
  DistanceMatrix dm(g);
  DivergenceConfig cfg{0, Walk({0, 1, 2, 3}), Walk({0, 4, 5, 6}), 1, 0};
  auto w = divergence_witness(g, dm, cfg);
  CHECK(w.gap == ExtNat(5));
  REQUIRE(w.path.has_value());
  CHECK(walk_length(*w.path) == 3);
  CHECK(w.path->front() == 3);
  CHECK(w.path->back() == 6);
  // symmetric gap also looks back from P2: 0 -> 1
  CHECK(divergence_witness(g, dm, cfg, GapMode::symmetric_min).gap == ExtNat(1));
  cfg.r = 2;
  CHECK_FALSE(divergence_witness(g, dm, cfg).path.has_value());
  cfg.R = 4;
  CHECK_THROWS_AS(validate_config(g, dm, cfg), std::invalid_argument);
  DivergenceConfig bad{0, Walk({0, 1, 3}), Walk({0, 4}), 0, 0};
  CHECK_THROWS_AS(validate_config(g, dm, bad), std::invalid_argument);
  DivergenceConfig off{1, Walk({0, 4}), Walk({0, 1}), 0, 0};
  CHECK_THROWS_AS(validate_config(g, dm, off), std::invalid_argument);
}

TEST_CASE("escaping paths are shortest among walks that avoid the balls") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 150; ++t) {
    auto g = oracle::random_digraph(rng, 2, 8);
    DistanceMatrix dm(g);
    auto d = oracle::floyd(g);
    const std::size_t n = g.size();
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    Vertex x = pick(rng);
    std::uint64_t radius = rng() % 3;
    std::vector<Vertex> from{pick(rng), pick(rng)}, to{pick(rng)};
    // distances in the digraph with the balls removed
    std::vector<char> keep(n);
    for (Vertex v = 0; v < n; ++v) keep[v] = d[x][v] > radius && d[v][x] > radius;
    std::vector<Edge> es;
    for (const auto& e : g.edges())
      if (keep[e.from] && keep[e.to]) es.push_back(e);
    auto dk = oracle::floyd(Digraph(n, es));
    std::uint64_t best = oracle::inf;
    for (Vertex a : from)
      for (Vertex b : to)
        if (keep[a] && keep[b]) best = std::min(best, dk[a][b]);
    auto p = escaping_path(g, dm, x, radius, from, to);
    REQUIRE(p.has_value() == (best != oracle::inf));
    if (!p) continue;
    CHECK(walk_length(*p) == best);
    CHECK(is_walk(g, *p));
    for (Vertex v : p->vertices) CHECK(keep[v]);
  }
}

TEST_CASE("empirical divergence only counts configs above the threshold") {
  auto g = joined_fork();
  DistanceMatrix dm(g);
  std::vector<DivergenceConfig> cfgs{{0, Walk({0, 1, 2, 3}), Walk({0, 4, 5, 6}), 1, 0}};
  auto pts = empirical_divergence(g, dm, cfgs, {2, 0, 2}, Rational(2));
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].shortest == ExtNat(3));
  CHECK(pts[1].shortest == INF);
  auto none = empirical_divergence(g, dm, cfgs, {0}, Rational(5));
  CHECK(none[0].shortest == INF);
}

TEST_CASE("geodesic stability on the diamond") {
  auto g = parse_digraph("4 4\n0 1\n0 2\n1 3\n2 3\n");
  DistanceMatrix dm(g);
  auto s = stability_defect(g, dm, 0, 3, Rational(1), Rational(0));
  CHECK(s.walks == 2);
  CHECK(s.kappa_out == ExtNat(1));
  CHECK(s.kappa_in == ExtNat(1));
  CHECK(s.exhaustive);
  REQUIRE(s.witness_out.has_value());
  CHECK_THROWS_AS(stability_defect(g, dm, 3, 0, Rational(1), Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(stability_defect(g, dm, 0, 3, Rational(BigInt(1), BigInt(2)), Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(stability_defect(g, dm, 0, 3, Rational(1), Rational(-1)), std::invalid_argument);
}

TEST_CASE("a single geodesic is perfectly stable") {
  auto g = parse_digraph("3 2\n0 1\n1 2\n");
  DistanceMatrix dm(g);
  auto s = stability_defect(g, dm, 0, 2, Rational(2), Rational(1));
  CHECK(s.walks == 1);
  CHECK(s.kappa_out == ExtNat(0));
  CHECK(s.kappa_in == ExtNat(0));
}

TEST_CASE("quasi-isometry checks") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    auto g = oracle::random_digraph(rng, 1, 6);
    DistanceMatrix dm(g);
    std::vector<Vertex> id(g.size());
    for (Vertex v = 0; v < g.size(); ++v) id[v] = v;
    CHECK(qi_check(id, dm, dm, Rational(1), Rational(0)).ok);
  }
  auto g = parse_digraph("2 1\n0 1\n");
  DistanceMatrix dm(g);
  auto collapse = qi_check({0, 0}, dm, dm, Rational(1), Rational(0));
  CHECK_FALSE(collapse.ok);
  bool lower = false, codense = false;
  for (const auto& v : collapse.violations) {
    lower = lower || v.kind == QiViolation::Kind::lower;
    codense = codense || v.kind == QiViolation::Kind::codensity;
  }
  CHECK(lower);
  CHECK(codense);
  // doubling every distance is fine with gamma 2, once the midpoints are covered
  auto two = parse_digraph("2 2\n0 1\n1 0\n");
  DistanceMatrix d2(two), ds(subdivide(two, 2));
  CHECK(qi_check({0, 1}, d2, ds, Rational(2), Rational(3)).ok);
  CHECK_FALSE(qi_check({0, 1}, d2, ds, Rational(2), Rational(1)).ok);
  CHECK_FALSE(qi_check({0, 1}, d2, ds, Rational(1), Rational(0)).ok);
  CHECK_THROWS_AS(qi_check({0}, dm, dm, Rational(1), Rational(0)), std::invalid_argument);
}

TEST_CASE("vertex maps parse by index or label") {
  auto a = parse_digraph("2 1\n0 1\n# label 0 p\n# label 1 q\n");
  auto b = parse_digraph("3 0\n");
  CHECK(parse_vertex_map("0 2\n1 0\n", a, b) == std::vector<Vertex>{2, 0});
  CHECK(parse_vertex_map("q 1\np 1\n", a, b) == std::vector<Vertex>{1, 1});
  CHECK_THROWS_AS(parse_vertex_map("0 1\n0 2\n1 0\n", a, b), ParseError);
  CHECK_THROWS_AS(parse_vertex_map("0 1\n", a, b), ParseError);
  CHECK_THROWS_AS(parse_vertex_map("0 7\n1 0\n", a, b), ParseError);
  CHECK_THROWS_AS(parse_vertex_map("0\n1 0\n", a, b), ParseError);
}
