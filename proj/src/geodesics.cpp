#include <dirhyp/geodesics.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dirhyp {

std::size_t walk_length(const Walk& w) { return w.vertices.empty() ? 0 : w.vertices.size() - 1; }

bool is_walk(const Digraph& g, const Walk& w) {
  if (w.vertices.empty()) return false;
  if (!w.edge_choices.empty() && w.edge_choices.size() != walk_length(w)) return false;
  for (Vertex v : w.vertices)
    if (v >= g.size()) return false;
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    auto m = g.multiplicity(w.vertices[i], w.vertices[i + 1]);
    if (m == 0) return false;
    if (!w.edge_choices.empty() && w.edge_choices[i] >= m) return false;
  }
  return true;
}

bool is_geodesic(const DistanceMatrix& dm, const Walk& w) {
  const auto& vs = w.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i; j < vs.size(); ++j)
      if (dm(vs[i], vs[j]) != ExtNat(j - i)) return false;
  return true;
}

bool is_quasi_geodesic(const DistanceMatrix& dm, const Walk& w, const Rational& gamma, const Rational& c) {
  const auto& vs = w.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i; j < vs.size(); ++j) {
      ExtNat d = dm(vs[i], vs[j]);
      if (!d.is_finite()) continue;
      if (Rational(j - i) > gamma * Rational(d.value()) + c) return false;
    }
  }
  return true;
}

std::string format_walk(const Digraph& g, const Walk& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) out << (i ? " " : "") << g.label(w.vertices[i]);
  return out.str();
}

std::vector<Vertex> geodesic_span(const DistanceMatrix& dm, Vertex x, Vertex y) {
  ExtNat total = dm(x, y);
  if (!total.is_finite()) return {};
  std::vector<Vertex> span;
  for (Vertex v = 0; v < dm.size(); ++v)
    if (dm(x, v) + dm(v, y) == total) span.push_back(v);
  std::stable_sort(span.begin(), span.end(), [&](Vertex a, Vertex b) { return dm(x, a) < dm(x, b); });
  return span;
}

namespace {

void require_reachable(const DistanceMatrix& dm, Vertex x, Vertex y) {
  if (x >= dm.size() || y >= dm.size()) throw std::out_of_range("vertex out of range");
  if (!dm(x, y).is_finite())
    throw std::invalid_argument("unreachable: no directed path from " + std::to_string(x) + " to " +
                                std::to_string(y));
}

// successor of u in the x->y shortest-path DAG
bool on_dag(const DistanceMatrix& dm, Vertex x, Vertex y, Vertex u, Vertex v) {
  return dm(x, u) + 1 + dm(v, y) == dm(x, y) && dm(x, v) == dm(x, u) + 1;
}

template <class Emit>
void walk_dag(const Digraph& g, const DistanceMatrix& dm, Vertex x, Vertex y, bool with_choices, Emit&& emit) {
  std::vector<Vertex> path{x};
  std::vector<std::uint32_t> choices;
  bool stop = false;
  auto rec = [&](auto&& self, Vertex u) -> void {
    if (stop) return;
    if (u == y) {
      if (!emit(path, choices)) stop = true;
      return;
    }
    for (Vertex v : g.out(u)) {
      if (!on_dag(dm, x, y, u, v)) continue;
      std::uint32_t m = with_choices ? g.multiplicity(u, v) : 1;
      for (std::uint32_t k = 0; k < m && !stop; ++k) {
        path.push_back(v);
        choices.push_back(k);
        self(self, v);
        path.pop_back();
        choices.pop_back();
      }
      if (stop) return;
    }
  };
  rec(rec, x);
}

}  // namespace

BigInt count_geodesics(const Digraph& g, const DistanceMatrix& dm, Vertex x, Vertex y) {
  require_reachable(dm, x, y);
  auto span = geodesic_span(dm, x, y);
  std::vector<BigInt> ways(g.size());
  // process from y backwards: span is sorted by distance from x
  for (auto it = span.rbegin(); it != span.rend(); ++it) {
    Vertex u = *it;
    if (u == y) {
      ways[u] = 1;
      continue;
    }
    BigInt total = 0;
    for (Vertex v : g.out(u))
      if (on_dag(dm, x, y, u, v)) total += ways[v] * g.multiplicity(u, v);
    ways[u] = total;
  }
  return ways[x];
}

GeodesicSummary enumerate_geodesics(const Digraph& g, const DistanceMatrix& dm, Vertex x, Vertex y,
                                    std::size_t cap) {
  GeodesicSummary out;
  out.count = count_geodesics(g, dm, x, y);
  walk_dag(g, dm, x, y, true, [&](const std::vector<Vertex>& p, const std::vector<std::uint32_t>& c) {
    if (out.sample.size() >= cap) {
      out.truncated = true;
      return false;
    }
    out.sample.emplace_back(p, c);
    return true;
  });
  return out;
}

std::vector<Walk> geodesic_vertex_paths(const Digraph& g, const DistanceMatrix& dm, Vertex x, Vertex y,
                                        std::size_t cap, bool* truncated) {
  require_reachable(dm, x, y);
  std::vector<Walk> out;
  bool cut = false;
  walk_dag(g, dm, x, y, false, [&](const std::vector<Vertex>& p, const std::vector<std::uint32_t>&) {
    if (out.size() >= cap) {
      cut = true;
      return false;
    }
    out.emplace_back(p);
    return true;
  });
  if (truncated) *truncated = cut;
  return out;
}

Walk first_geodesic(const Digraph& g, const DistanceMatrix& dm, Vertex x, Vertex y) {
  require_reachable(dm, x, y);
  std::vector<Vertex> path{x};
  Vertex u = x;
  while (u != y) {
    for (Vertex v : g.out(u)) {
      if (on_dag(dm, x, y, u, v)) {
        u = v;
        break;
      }
    }
    path.push_back(u);
  }
  return Walk(std::move(path));
}

Walk concatenate(const Walk& a, const Walk& b) {
  if (a.vertices.empty()) return b;
  if (b.vertices.empty()) return a;
  if (a.back() != b.front()) throw std::invalid_argument("walks are not composable");
  Walk out = a;
  out.vertices.insert(out.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
  if (!a.edge_choices.empty() || !b.edge_choices.empty()) {
    out.edge_choices = a.edge_choices;
    out.edge_choices.resize(walk_length(a), 0);
    auto bc = b.edge_choices;
    bc.resize(walk_length(b), 0);
    out.edge_choices.insert(out.edge_choices.end(), bc.begin(), bc.end());
  }
  return out;
}

}  // namespace dirhyp
