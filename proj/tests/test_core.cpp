#include <doctest.h>

#include <dirhyp/core.hpp>
#include <dirhyp/rational.hpp>

#include "oracles.hpp"

using namespace dirhyp;

TEST_CASE("extended naturals absorb infinity") {
  ExtNat a = 3, b = 4;
  CHECK(a + b == ExtNat(7));
  CHECK((a + INF).is_infinite());
  CHECK(INF > ExtNat(1000000));
  CHECK(INF.str() == "inf");
  CHECK_THROWS_AS(INF.value(), std::domain_error);
}

TEST_CASE("parse and format round trip keeps multiedges and labels") {
  const char* text =
      "# two vertices\n"
      "3 4\n"
      "0 1\n"
      "0 1   # parallel\n"
      "1 1\n"
      "2 0\n"
      "# label 0 start\n"
      "# label 2 end\n";
  auto g = parse_digraph(text);
  CHECK(g.size() == 3);
  CHECK(g.edges().size() == 4);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.has_loops());
  CHECK(g.has_parallel_edges());
  CHECK(g.vertex("start") == 0);
  CHECK(g.vertex("end") == 2);
  auto again = parse_digraph(format_digraph(g));
  CHECK(again.size() == g.size());
  CHECK(again.labels() == g.labels());
  auto sorted = [](std::vector<Edge> e) {
    std::sort(e.begin(), e.end());
    return e;
  };
  CHECK(sorted(again.edges()) == sorted(g.edges()));
}

TEST_CASE("edge order does not matter") {
  auto a = parse_digraph("3 3\n0 1\n1 2\n2 0\n");
  auto b = parse_digraph("3 3\n2 0\n0 1\n1 2\n");
  for (Vertex v = 0; v < 3; ++v) {
    CHECK(std::vector<Vertex>(a.out(v).begin(), a.out(v).end()) == std::vector<Vertex>(b.out(v).begin(), b.out(v).end()));
    CHECK(std::vector<Vertex>(a.in(v).begin(), a.in(v).end()) == std::vector<Vertex>(b.in(v).begin(), b.in(v).end()));
  }
}

TEST_CASE("malformed digraph text reports the line") {
  CHECK_THROWS_AS(parse_digraph(""), ParseError);
  CHECK_THROWS_AS(parse_digraph("2 1\n0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph("2 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph("2 1\n0 x\n"), ParseError);
  try {
    parse_digraph("2 1\n\n0 7\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(Digraph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(load_digraph("/nonexistent/file.txt"), std::runtime_error);
}

TEST_CASE("subdivide multiplies every distance") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    auto g = oracle::random_digraph(rng, 1, 6);
    auto s = subdivide(g, 3);
    auto d = oracle::floyd(g), ds = oracle::floyd(s);
    CHECK(s.size() == g.size() + 2 * g.edges().size());
    for (Vertex u = 0; u < g.size(); ++u)
      for (Vertex v = 0; v < g.size(); ++v) {
        if (d[u][v] == oracle::inf) CHECK(ds[u][v] == oracle::inf);
        else CHECK(ds[u][v] == 3 * d[u][v]);
      }
  }
  CHECK_THROWS_AS(subdivide(Digraph(1, {}), 0), std::invalid_argument);
}

TEST_CASE("induced subdigraph keeps labels and inner edges") {
  auto g = parse_digraph("4 4\n0 1\n1 2\n2 3\n3 0\n# label 1 b\n# label 2 c\n");
  std::vector<Vertex> keep{2, 1};
  auto h = induced(g, keep);
  CHECK(h.size() == 2);
  CHECK(h.edges().size() == 1);
  CHECK(h.label(0) == "c");
  CHECK(h.out(h.vertex("b")).size() == 1);
}

TEST_CASE("rationals print as p/q and parse back") {
  CHECK(format_rational(Rational(3)) == "3/1");
  CHECK(format_rational(Rational(BigInt(6), BigInt(4))) == "3/2");
  CHECK(parse_rational("3/2") == Rational(BigInt(3), BigInt(2)));
  CHECK(parse_rational("-1.25") == Rational(BigInt(-5), BigInt(4)));
  CHECK(parse_rational("+2") == Rational(2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}
