#include <doctest.h>

#include <dirhyp/distance.hpp>
#include <dirhyp/families.hpp>
#include <dirhyp/geodesics.hpp>

#include <algorithm>
#include <map>
#include <set>

using namespace dirhyp;

namespace {

// <a,b | a^2 = b^2, ab = ba> modelled as pairs (i, j): a^i b^j with j in {0, 1}
using Elem = std::pair<std::size_t, std::size_t>;
Elem times(Elem e, char c) {
  if (c == 'a') return {e.first + 1, e.second};
  return e.second == 1 ? Elem{e.first + 2, 0} : Elem{e.first, 1};
}
Elem eval(const std::string& w) {
  Elem e{0, 0};
  for (char c : w) e = times(e, c);
  return e;
}

// Elements reachable by at most n generating words, with their least word counts.
std::map<Elem, std::size_t> model_ball(const std::vector<std::string>& gens, std::size_t n) {
  std::map<Elem, std::size_t> level{{Elem{0, 0}, 0}};
  std::vector<Elem> frontier{{0, 0}};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Elem> next;
    for (auto e : frontier)
      for (const auto& g : gens) {
        Elem f = e;
        for (char c : g) f = times(f, c);
        if (level.emplace(f, k).second) next.push_back(f);
      }
    frontier = next;
  }
  return level;
}

}  // namespace

TEST_CASE("presentation parsing") {
  auto p = parse_presentation("# comment\na b\nba -> ab\nbb -> aa\nkind semigroup\n");
  CHECK(p.generators == "ab");
  CHECK(p.rules.size() == 2);
  CHECK(p.kind == SemigroupKind::semigroup);
  auto q = parse_presentation("a\naa -> 1\n");
  CHECK(q.rules[0].second.empty());
  CHECK_THROWS_AS(parse_presentation(""), ParseError);
  CHECK_THROWS_AS(parse_presentation("ab c\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("a b\nac -> a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("a b\nab ab\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("a b\n1 -> a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("a b\nkind group\n"), ParseError);
}

TEST_CASE("normal forms and the rewrite budget") {
  auto p = builtin_presentation("ex16_5");
  CHECK(normal_form(p, "bab") == "aaa");
  CHECK(normal_form(p, "ba") == "ab");
  CHECK(normal_form(p, "") == "");
  auto loop = parse_presentation("a\na -> aa\n");
  CHECK_THROWS_AS(normal_form(loop, "a", 50), std::runtime_error);
  CHECK_THROWS_AS(builtin_presentation("nope"), std::invalid_argument);
}

TEST_CASE("normal forms agree with the element model") {
  auto p = builtin_presentation("ex16_5");
  for (std::size_t len = 0; len <= 8; ++len)
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w) {
      std::string word;
      for (std::size_t i = 0; i < len; ++i) word += (w >> i & 1) ? 'b' : 'a';
      auto nf = normal_form(p, word);
      CHECK(eval(nf) == eval(word));
    }
}

TEST_CASE("Cayley balls match word enumeration in the element model") {
  for (std::vector<std::string> gens : {std::vector<std::string>{"a", "b"}, std::vector<std::string>{"a", "b", "ab"}})
    for (std::size_t n = 1; n <= 6; ++n) {
      auto ball = cayley_ball(builtin_presentation("ex16_5"), gens, n);
      auto model = model_ball(gens, n);
      REQUIRE(ball.digraph.size() == model.size());
      const auto& g = ball.digraph;
      for (Vertex v = 0; v < g.size(); ++v) {
        std::string label = g.label(v) == "1" ? "" : g.label(v);
        Elem e = eval(label);
        REQUIRE(model.count(e) == 1);
        CHECK(ball.level[v] == model[e]);
        std::set<Elem> expect_out;
        for (const auto& s : gens) {
          Elem f = e;
          for (char c : s) f = times(f, c);
          if (model.count(f)) expect_out.insert(f);
        }
        std::set<Elem> got;
        for (Vertex w : g.out(v)) got.insert(eval(g.label(w) == "1" ? "" : g.label(w)));
        CHECK(got == expect_out);
      }
    }
}

TEST_CASE("free monoid balls are complete trees") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto b = realize(family("free_monoid", {{"k", "2"}}), n);
    CHECK(b.digraph.size() == (std::size_t{1} << (n + 1)) - 1);
    CHECK(b.stable_core == n);
  }
  auto b3 = realize(family("free_monoid", {{"k", "3"}}), 2);
  CHECK(b3.digraph.size() == 13);
}

TEST_CASE("semigroup balls start at the generators") {
  Presentation p = parse_presentation("a\nkind semigroup\n");
  auto b = cayley_ball(p, {"a"}, 4);
  CHECK(b.digraph.size() == 4);
  CHECK_FALSE(b.digraph.find("1").has_value());
}

TEST_CASE("stable core shrinks with long generators") {
  auto b = realize(family("ex16_5", {{"gens", "a,b,ab"}}), 8);
  CHECK(b.stable_core == 4);
  auto c = cayley_ball(parse_presentation("a b\nab -> a\n"), {"a", "b"}, 5);
  CHECK(c.stable_core == 0);
}

TEST_CASE("Cayley tables") {
  auto t = parse_cayley_table(
      "elements e x\n"
      "e x\n"
      "x e\n"
      "generators x\n"
      "identity e\n");
  auto b = cayley_table_ball(t, 3);
  CHECK(b.digraph.size() == 2);
  DistanceMatrix dm(b.digraph);
  CHECK(dm(0, 1) == ExtNat(1));
  CHECK(dm(1, 0) == ExtNat(1));
  CHECK_THROWS_AS(parse_cayley_table("elements e x\ne x\n"), ParseError);
  CHECK_THROWS_AS(parse_cayley_table("elements e x\ne y\nx e\ngenerators x\n"), ParseError);
  auto cyc = realize(family("cayley_table", {{"order", "5"}}), 10);
  CHECK(cyc.digraph.size() == 5);
}

TEST_CASE("family catalog") {
  std::set<std::string> names;
  for (const auto& f : list_families()) names.insert(f.name);
  for (const char* n : {"nat_line", "int_line", "ex6_2", "ex7_4", "ex12_2", "ex13_4_tree", "ex14_2", "ex16_5",
                        "free_monoid", "cayley", "cayley_table"})
    CHECK(names.count(n) == 1);
  for (const auto& f : list_families())
    if (f.name == "ex13_4_tree") CHECK_FALSE(f.finitely_based);
  CHECK_THROWS_AS(family("nope"), std::invalid_argument);
  CHECK_THROWS_AS(family("free_monoid", {{"k", "x"}}), std::invalid_argument);
  CHECK_THROWS_AS(realize(family("nat_line"), 0), std::invalid_argument);
}

TEST_CASE("designated rays follow edges and geodesic rays are geodesic") {
  for (const auto& info : list_families()) {
    if (!info.has_rays) continue;
    auto f = family(info.name);
    auto b = realize(f, 8);
    DistanceMatrix dm(b.digraph);
    for (const auto& r : rays(f)) {
      auto vs = ray_vertices(b, r);
      INFO(info.name, " ", r.name);
      REQUIRE(vs.size() >= 3);
      std::vector<Vertex> forward = vs;
      if (r.kind == RayKind::anti_ray) std::reverse(forward.begin(), forward.end());
      CHECK(is_walk(b.digraph, Walk(forward)));
      // inside the stable core
      std::vector<Vertex> core;
      for (Vertex v : forward)
        if (b.level[v] <= b.stable_core) core.push_back(v);
      if (r.geodesic && core.size() == forward.size()) CHECK(is_geodesic(dm, Walk(forward)));
    }
  }
}

TEST_CASE("example edge sets") {
  auto e6 = realize(family("ex6_2"), 4).digraph;
  CHECK(e6.multiplicity(e6.vertex("x0"), e6.vertex("y1")) == 1);
  CHECK(e6.multiplicity(e6.vertex("x3"), e6.vertex("y3")) == 1);
  CHECK_FALSE(e6.find("y0").has_value());
  auto e14 = realize(family("ex14_2"), 4).digraph;
  CHECK(e14.multiplicity(e14.vertex("x2"), e14.vertex("y-2")) == 1);
  CHECK(e14.multiplicity(e14.vertex("x2"), e14.vertex("z-2")) == 1);
  CHECK(e14.multiplicity(e14.vertex("y-3"), e14.vertex("y-2")) == 1);
  auto e12 = realize(family("ex12_2"), 4).digraph;
  for (const char* s : {"u2 v2", "v2 w2", "w2 x2", "x2 y2", "v2 v3", "x3 x2"}) {
    std::string a(s), from = a.substr(0, a.find(' ')), to = a.substr(a.find(' ') + 1);
    CHECK(e12.multiplicity(e12.vertex(from), e12.vertex(to)) == 1);
  }
  auto e74 = realize(family("ex7_4"), 4);
  DistanceMatrix dm(e74.digraph);
  const auto& g = e74.digraph;
  // x(i+1) -> xi and yi -> y(i+1) are paths of length i + 1
  CHECK(dm(g.vertex("x3"), g.vertex("x2")) == ExtNat(3));
  CHECK(dm(g.vertex("y2"), g.vertex("y3")) == ExtNat(3));
  CHECK(dm(g.vertex("x2"), g.vertex("y2")) == ExtNat(1));
}
