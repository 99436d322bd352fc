#pragma once

// Brute-force reference implementations used only by the tests.

#include <dirhyp/core.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using dirhyp::Digraph;
using dirhyp::Edge;
using dirhyp::Vertex;

inline constexpr std::uint64_t inf = ~std::uint64_t{0};

inline Digraph random_digraph(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n, bool parallel = false) {
  std::uniform_int_distribution<std::size_t> size(min_n, max_n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t n = size(rng);
  double p = 0.1 + 0.55 * unit(rng);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v && unit(rng) > 0.15) continue;
      if (unit(rng) < p) {
        edges.push_back({u, v});
        if (parallel && unit(rng) < 0.2) edges.push_back({u, v});
      }
    }
  return Digraph(n, std::move(edges));
}

// Floyd-Warshall on unit weights.
inline std::vector<std::vector<std::uint64_t>> floyd(const Digraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges()) d[e.from][e.to] = std::min<std::uint64_t>(d[e.from][e.to], e.from == e.to ? 0 : 1);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] != inf && d[k][j] != inf) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Every walk (as an edge-index sequence) from x of exactly `len` edges ending at y.
inline std::vector<std::vector<std::size_t>> walks(const Digraph& g, Vertex x, Vertex y, std::size_t len) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(Vertex)> go = [&](Vertex v) {
    if (cur.size() == len) {
      if (v == y) out.push_back(cur);
      return;
    }
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      if (g.edges()[e].from != v) continue;
      cur.push_back(e);
      go(g.edges()[e].to);
      cur.pop_back();
    }
  };
  go(x);
  return out;
}

inline std::vector<Vertex> walk_vertices(const Digraph& g, Vertex x, const std::vector<std::size_t>& es) {
  std::vector<Vertex> vs{x};
  for (auto e : es) vs.push_back(g.edges()[e].to);
  return vs;
}

// Distinct vertex sequences of shortest x -> y walks.
inline std::vector<std::vector<Vertex>> geodesic_vertex_sequences(const Digraph& g,
                                                                  const std::vector<std::vector<std::uint64_t>>& d,
                                                                  Vertex x, Vertex y) {
  std::vector<std::vector<Vertex>> out;
  if (d[x][y] == inf) return out;
  for (const auto& w : walks(g, x, y, d[x][y])) out.push_back(walk_vertices(g, x, w));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::uint64_t set_to(const std::vector<std::vector<std::uint64_t>>& d, const std::vector<Vertex>& side,
                            Vertex p) {
  std::uint64_t best = inf;
  for (Vertex q : side) best = std::min(best, d[q][p]);
  return best;
}
inline std::uint64_t to_set(const std::vector<std::vector<std::uint64_t>>& d, Vertex p,
                            const std::vector<Vertex>& side) {
  std::uint64_t best = inf;
  for (Vertex q : side) best = std::min(best, d[p][q]);
  return best;
}

struct TriangleDeltas {
  std::uint64_t thin_all = 0, thin_transitive = 0, slim_all = 0, slim_transitive = 0;
};

// Every ordered endpoint triple, every orientation of the three sides and every
// choice of geodesics, defects straight from the definitions.
inline TriangleDeltas brute_force_delta(const Digraph& g) {
  auto d = floyd(g);
  const std::size_t n = g.size();
  TriangleDeltas out;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      for (Vertex z = 0; z < n; ++z)
        for (unsigned pattern = 0; pattern < 8; ++pattern) {
          std::array<std::pair<Vertex, Vertex>, 3> s{{{x, y}, {y, z}, {x, z}}};
          for (int k = 0; k < 3; ++k)
            if (pattern >> k & 1) std::swap(s[k].first, s[k].second);
          bool finite = true;
          for (auto [a, b] : s) finite = finite && d[a][b] != inf;
          if (!finite) continue;
          // two sides chain head to tail and run parallel to the third
          bool transitive = false;
          for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
              int c = 3 - a - b;
              if (a == b || c < 0 || c > 2 || c == a || c == b) continue;
              if (s[a].second == s[b].first && s[a].first == s[c].first && s[b].second == s[c].second)
                transitive = true;
            }
          std::array<std::vector<std::vector<Vertex>>, 3> choices;
          for (int k = 0; k < 3; ++k) choices[k] = geodesic_vertex_sequences(g, d, s[k].first, s[k].second);
          for (const auto& P0 : choices[0])
            for (const auto& P1 : choices[1])
              for (const auto& P2 : choices[2]) {
                std::array<const std::vector<Vertex>*, 3> sides{&P0, &P1, &P2};
                std::uint64_t thin = 0, slim = 0;
                for (int p = 0; p < 3; ++p) {
                  int q1 = (p + 1) % 3, q2 = (p + 2) % 3;
                  for (auto [Q, R] : {std::pair{q1, q2}, std::pair{q2, q1}}) {
                    bool q_has_start = s[Q].first == s[p].first || s[Q].second == s[p].first;
                    bool r_has_end = s[R].first == s[p].second || s[R].second == s[p].second;
                    if (!q_has_start || !r_has_end) continue;
                    for (Vertex v : *sides[p])
                      thin = std::max(thin, std::min(set_to(d, *sides[Q], v), to_set(d, v, *sides[R])));
                  }
                  for (Vertex v : *sides[p]) {
                    slim = std::max(slim, std::min(set_to(d, *sides[q1], v), set_to(d, *sides[q2], v)));
                    slim = std::max(slim, std::min(to_set(d, v, *sides[q1]), to_set(d, v, *sides[q2])));
                  }
                }
                out.thin_all = std::max(out.thin_all, thin);
                out.slim_all = std::max(out.slim_all, slim);
                if (transitive) {
                  out.thin_transitive = std::max(out.thin_transitive, thin);
                  out.slim_transitive = std::max(out.slim_transitive, slim);
                }
              }
        }
  return out;
}

}  // namespace oracle
