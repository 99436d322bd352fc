#include <dirhyp/distance.hpp>
#include <dirhyp/parallel.hpp>

#include <algorithm>

namespace dirhyp {

std::vector<ExtNat> bfs(const Digraph& g, std::span<const Vertex> sources, Sign dir, const std::vector<char>* blocked) {
  std::vector<ExtNat> dist(g.size(), INF);
  std::vector<Vertex> queue;
  queue.reserve(g.size());
  for (Vertex s : sources) {
    if (blocked && (*blocked)[s]) continue;
    if (dist[s].is_finite()) continue;
    dist[s] = 0;
    queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    ExtNat next = dist[u] + 1;
    for (Vertex v : dir == Sign::out ? g.out(u) : g.in(u)) {
      if (dist[v].is_finite() || (blocked && (*blocked)[v])) continue;
      dist[v] = next;
      queue.push_back(v);
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const Digraph& g, unsigned workers) : n_(g.size()), d_(n_ * n_, INF) {
  parallel_for(n_, workers, [&](std::size_t s) {
    Vertex src = static_cast<Vertex>(s);
    auto row = bfs(g, std::span<const Vertex>(&src, 1));
    std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(s * n_));
  });
}

std::uint64_t DistanceMatrix::finite_diameter() const noexcept {
  std::uint64_t best = 0;
  for (ExtNat e : d_)
    if (e.is_finite()) best = std::max(best, e.value());
  return best;
}

ExtNat distance(const DistanceMatrix& dm, Vertex u, Vertex v, DistanceMode mode) {
  return mode == DistanceMode::directed ? dm(u, v) : dm.sym(u, v);
}

std::vector<Vertex> ball(const DistanceMatrix& dm, Vertex x, std::uint64_t r, Sign sign, bool open) {
  std::vector<Vertex> out;
  for (Vertex y = 0; y < dm.size(); ++y) {
    ExtNat d = sign == Sign::out ? dm(x, y) : dm(y, x);
    if (!d.is_finite()) continue;
    if (open ? d.value() < r : d.value() <= r) out.push_back(y);
  }
  return out;
}

std::vector<ExtNat> distance_to_set(const DistanceMatrix& dm, std::span<const Vertex> set, Sign sign) {
  std::vector<ExtNat> best(dm.size(), INF);
  for (Vertex s : set)
    for (Vertex v = 0; v < dm.size(); ++v) best[v] = std::min(best[v], sign == Sign::out ? dm(s, v) : dm(v, s));
  return best;
}

std::vector<std::vector<Vertex>> scc(const DistanceMatrix& dm) {
  std::vector<std::vector<Vertex>> classes;
  std::vector<char> placed(dm.size(), 0);
  for (Vertex x = 0; x < dm.size(); ++x) {
    if (placed[x]) continue;
    auto& cls = classes.emplace_back();
    for (Vertex y = x; y < dm.size(); ++y) {
      if (!placed[y] && dm(x, y).is_finite() && dm(y, x).is_finite()) {
        placed[y] = 1;
        cls.push_back(y);
      }
    }
  }
  return classes;
}

}  // namespace dirhyp
