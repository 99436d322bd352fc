#pragma once

#include <dirhyp/core.hpp>

#include <span>
#include <vector>

namespace dirhyp {

enum class Sign { out, in };
enum class DistanceMode { directed, symmetric_min };

// Breadth-first distances from (Sign::out) or to (Sign::in) a set of sources.
// Vertices flagged in `blocked` are never entered, sources included.
std::vector<ExtNat> bfs(const Digraph& g, std::span<const Vertex> sources, Sign dir = Sign::out,
                        const std::vector<char>* blocked = nullptr);

// All-pairs directed distances, one breadth-first search per source.
// Immutable once built; concurrent reads are safe.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const Digraph& g, unsigned workers = 1);

  std::size_t size() const noexcept { return n_; }
  ExtNat operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  ExtNat sym(Vertex u, Vertex v) const { return std::min((*this)(u, v), (*this)(v, u)); }
  std::span<const ExtNat> row(Vertex u) const { return {d_.data() + static_cast<std::size_t>(u) * n_, n_}; }

  // largest finite entry
  std::uint64_t finite_diameter() const noexcept;

 private:
  std::size_t n_ = 0;
  std::vector<ExtNat> d_;
};

ExtNat distance(const DistanceMatrix& dm, Vertex u, Vertex v, DistanceMode mode = DistanceMode::directed);

// Out-ball {y : d(x,y) <= r} or in-ball {y : d(y,x) <= r}; strict when open.
std::vector<Vertex> ball(const DistanceMatrix& dm, Vertex x, std::uint64_t r, Sign sign, bool open = false);

// d(S, v) = min over s in S of d(s, v) (Sign::out) or d(v, S) (Sign::in), for every v.
std::vector<ExtNat> distance_to_set(const DistanceMatrix& dm, std::span<const Vertex> set, Sign sign);

// Classes of mutual reachability, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> scc(const DistanceMatrix& dm);

}  // namespace dirhyp
