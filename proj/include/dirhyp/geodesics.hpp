#pragma once

#include <dirhyp/distance.hpp>
#include <dirhyp/rational.hpp>

#include <string>
#include <vector>

namespace dirhyp {

// A directed walk. edge_choices[i] picks which of the parallel edges joins
// vertices[i] and vertices[i+1]; it may be left empty for simple digraphs.
struct Walk {
  std::vector<Vertex> vertices;
  std::vector<std::uint32_t> edge_choices;

  Walk() = default;
  explicit Walk(std::vector<Vertex> vs, std::vector<std::uint32_t> choices = {})
      : vertices(std::move(vs)), edge_choices(std::move(choices)) {}

  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  friend bool operator==(const Walk&, const Walk&) = default;
};

std::size_t walk_length(const Walk& w);
bool is_walk(const Digraph& g, const Walk& w);
bool is_geodesic(const DistanceMatrix& dm, const Walk& w);
bool is_quasi_geodesic(const DistanceMatrix& dm, const Walk& w, const Rational& gamma, const Rational& c);

// vertex labels separated by single spaces
std::string format_walk(const Digraph& g, const Walk& w);

struct GeodesicSummary {
  BigInt count;
  std::vector<Walk> sample;
  bool truncated = false;
};

inline constexpr std::size_t default_geodesic_cap = 10000;

// Depth-first over the shortest-path DAG in ascending vertex order; parallel
// edges give distinct geodesics. Throws std::invalid_argument if y is unreachable.
GeodesicSummary enumerate_geodesics(const Digraph& g, const DistanceMatrix& dm, Vertex x, Vertex y,
                                    std::size_t cap = default_geodesic_cap);
BigInt count_geodesics(const Digraph& g, const DistanceMatrix& dm, Vertex x, Vertex y);

// Same enumeration with parallel edges identified: distinct vertex sequences only.
std::vector<Walk> geodesic_vertex_paths(const Digraph& g, const DistanceMatrix& dm, Vertex x, Vertex y,
                                        std::size_t cap, bool* truncated = nullptr);

// Lexicographically least x->y geodesic.
Walk first_geodesic(const Digraph& g, const DistanceMatrix& dm, Vertex x, Vertex y);

// Vertices lying on at least one x->y geodesic, sorted by distance from x
// (ties by index). Empty when y is unreachable.
std::vector<Vertex> geodesic_span(const DistanceMatrix& dm, Vertex x, Vertex y);

Walk concatenate(const Walk& a, const Walk& b);

}  // namespace dirhyp
