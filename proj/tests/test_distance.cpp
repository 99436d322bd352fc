#include <doctest.h>

#include <dirhyp/distance.hpp>

#include "oracles.hpp"

#include <set>

using namespace dirhyp;

namespace {
ExtNat ext(std::uint64_t v) { return v == oracle::inf ? INF : ExtNat(v); }
}  // namespace

TEST_CASE("distance matrix agrees with Floyd-Warshall") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto g = oracle::random_digraph(rng, 1, 9, true);
    DistanceMatrix dm(g, 1 + t % 3);
    auto d = oracle::floyd(g);
    for (Vertex u = 0; u < g.size(); ++u)
      for (Vertex v = 0; v < g.size(); ++v) {
        REQUIRE(dm(u, v) == ext(d[u][v]));
        CHECK(distance(dm, u, v, DistanceMode::symmetric_min) == std::min(ext(d[u][v]), ext(d[v][u])));
      }
  }
}

TEST_CASE("semimetric axioms hold") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    auto g = oracle::random_digraph(rng, 1, 8);
    DistanceMatrix dm(g);
    for (Vertex a = 0; a < g.size(); ++a) {
      CHECK(dm(a, a) == ExtNat(0));
      for (Vertex b = 0; b < g.size(); ++b)
        for (Vertex c = 0; c < g.size(); ++c) CHECK(dm(a, c) <= dm(a, b) + dm(b, c));
    }
  }
}

TEST_CASE("balls match their definitions") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 60; ++t) {
    auto g = oracle::random_digraph(rng, 1, 8);
    DistanceMatrix dm(g);
    auto d = oracle::floyd(g);
    for (Vertex x = 0; x < g.size(); ++x)
      for (std::uint64_t r = 0; r <= 3; ++r) {
        std::vector<Vertex> out, in, open_out;
        for (Vertex v = 0; v < g.size(); ++v) {
          if (d[x][v] <= r) out.push_back(v);
          if (d[v][x] <= r) in.push_back(v);
          if (d[x][v] < r) open_out.push_back(v);
        }
        CHECK(ball(dm, x, r, Sign::out) == out);
        CHECK(ball(dm, x, r, Sign::in) == in);
        CHECK(ball(dm, x, r, Sign::out, true) == open_out);
      }
  }
}

TEST_CASE("distance to a set is the minimum over its members") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 60; ++t) {
    auto g = oracle::random_digraph(rng, 2, 8);
    DistanceMatrix dm(g);
    auto d = oracle::floyd(g);
    std::vector<Vertex> set{0, static_cast<Vertex>(g.size() - 1)};
    auto from = distance_to_set(dm, set, Sign::out);
    auto to = distance_to_set(dm, set, Sign::in);
    for (Vertex v = 0; v < g.size(); ++v) {
      CHECK(from[v] == ext(oracle::set_to(d, set, v)));
      CHECK(to[v] == ext(oracle::to_set(d, v, set)));
    }
  }
}

TEST_CASE("blocked breadth-first search never enters blocked vertices") {
  auto g = parse_digraph("4 4\n0 1\n1 3\n0 2\n2 3\n");
  std::vector<char> blocked{0, 1, 0, 0};
  std::vector<Vertex> src{0};
  auto d = bfs(g, src, Sign::out, &blocked);
  CHECK(d[1].is_infinite());
  CHECK(d[3] == ExtNat(2));
  blocked[2] = 1;
  d = bfs(g, src, Sign::out, &blocked);
  CHECK(d[3].is_infinite());
}

TEST_CASE("strong components are the mutual-reachability classes") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 100; ++t) {
    auto g = oracle::random_digraph(rng, 1, 9);
    DistanceMatrix dm(g);
    auto d = oracle::floyd(g);
    std::set<std::vector<Vertex>> expect;
    for (Vertex u = 0; u < g.size(); ++u) {
      std::vector<Vertex> cls;
      for (Vertex v = 0; v < g.size(); ++v)
        if (d[u][v] != oracle::inf && d[v][u] != oracle::inf) cls.push_back(v);
      expect.insert(cls);
    }
    auto got = scc(dm);
    CHECK(std::set<std::vector<Vertex>>(got.begin(), got.end()) == expect);
    CHECK(std::is_sorted(got.begin(), got.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); }));
  }
}

TEST_CASE("finite diameter ignores infinite entries") {
  auto g = parse_digraph("4 2\n0 1\n1 2\n");
  DistanceMatrix dm(g);
  CHECK(dm.finite_diameter() == 2);
}
