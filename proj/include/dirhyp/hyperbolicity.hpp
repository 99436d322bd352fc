#pragma once

#include <dirhyp/geodesics.hpp>

#include <array>
#include <functional>
#include <optional>
#include <utility>

namespace dirhyp {

enum class TriangleKind { thin, slim };
enum class TriangleMode { all, transitive };

struct Side {
  Vertex from;
  Vertex to;
  Walk walk;
};

// Sides join (x,y), (y,z), (x,z) in that order. Bit k of `pattern` set means
// side k runs from its second endpoint to its first.
struct GeodesicTriangle {
  std::array<Vertex, 3> endpoints;
  std::array<Side, 3> sides;
  unsigned pattern = 0;
};

std::array<std::pair<Vertex, Vertex>, 3> pattern_sides(const std::array<Vertex, 3>& endpoints, unsigned pattern);

// Two sides compose (end of one is start of the other) into a path parallel to the third.
// Returns {first, second, third} side indices when that holds.
std::optional<std::array<int, 3>> transitive_order(const std::array<std::pair<Vertex, Vertex>, 3>& sides);
bool is_transitive(const GeodesicTriangle& t);
// With distinct endpoints, two of the eight patterns run round the triangle.
bool is_cyclic_pattern(unsigned pattern);

// (Q, R) pairs allowed for side p: start(P) lies on Q's ends, end(P) on R's ends.
std::vector<std::pair<int, int>> thin_assignments(const std::array<std::pair<Vertex, Vertex>, 3>& sides, int p);

// Throws std::invalid_argument unless every side is a geodesic matching its endpoints.
void validate_triangle(const Digraph& g, const DistanceMatrix& dm, const GeodesicTriangle& t);

// Least delta for which the triangle is delta-thin (delta-slim).
ExtNat triangle_defect(const DistanceMatrix& dm, const GeodesicTriangle& t, TriangleKind kind);

struct DeltaOptions {
  TriangleKind kind = TriangleKind::thin;
  TriangleMode mode = TriangleMode::all;
  unsigned workers = 1;
};

struct DeltaResult {
  ExtNat delta = 0;
  std::optional<GeodesicTriangle> witness;
  // Maximization over geodesic choices is done by dynamic programming on the
  // shortest-path DAGs, so it never samples.
  bool exhaustive = true;
  std::uint64_t triangles = 0;  // (endpoint triple, pattern) combinations examined
};

// Maximum defect over every endpoint triple, realizable pattern and geodesic choice.
DeltaResult delta(const Digraph& g, const DistanceMatrix& dm, const DeltaOptions& opt = {});

// Same maximum restricted to triangles with the given endpoints.
DeltaResult delta_at(const Digraph& g, const DistanceMatrix& dm, std::array<Vertex, 3> endpoints,
                     const DeltaOptions& opt = {});

struct ZeroHyperbolicity {
  bool zero = false;
  std::optional<std::pair<Walk, Walk>> witness;  // two distinct walks with common ends
};

ZeroHyperbolicity is_zero_hyperbolic(const Digraph& g, const DistanceMatrix& dm);

// values[r]: the largest finite d(y,z) with y, z in one radius-r out-ball (in-ball).
struct BoundProfile {
  Sign direction = Sign::out;
  std::vector<ExtNat> values;

  std::size_t r_max() const { return values.empty() ? 0 : values.size() - 1; }
  ExtNat at(std::size_t r) const;  // throws std::out_of_range past r_max
};

BoundProfile bound_profile(const DistanceMatrix& dm, Sign direction, std::size_t r_max);

// Balls have at most 2*r*sum_{i<=delta}(degree-1)^i vertices in a locally finite
// delta-hyperbolic digraph, which bounds every finite distance inside them.
BigInt ball_size_bound(std::uint64_t r, std::uint64_t delta, std::uint64_t degree);

using BoundFunction = std::function<ExtNat(std::uint64_t)>;
BoundFunction as_function(const BoundProfile& p);

struct ConstantInputs {
  std::uint64_t delta = 0;
  BoundFunction f;              // out-ball bound
  BoundFunction g;              // in-ball bound; f is used when empty
  Rational M = 0;               // connecting-path length for the boundary order
  Rational epsilon = 1;
};

// Explicit constants used by the proofs; f stands for the pointwise max of f and g.
struct ConstantTable {
  Rational delta;
  Rational f_of_delta;
  Rational f_of_delta_plus_1;
  Rational side_cover_radius;      // 6d + 2d f(d+1)
  Rational order_transfer_bound;   // (2M + 5d) + (2M + 2d + 1) f(d+1)
  Rational neighbourhood_radius;   // 6d + 2d f(d+1)
  Rational visual_exponent;        // 2 eps (6d + 2d f(d+1)); visual multiplier is e^this
  double visual_multiplier = 1.0;
  Rational divergence_k;           // 6d + 2d f(d+1)
  Rational divergence_e0;          // (2d + eps + 1) f(d+1) + f(d) + d
  Rational epsilon;
};

ConstantTable proof_constants(const ConstantInputs& in);

// Fellow-travelling bound for (gamma, c)-quasi-geodesics given the geodesic constant kappa.
Rational stability_lambda(const Rational& kappa, std::uint64_t delta, std::uint64_t f_delta,
                          std::uint64_t f_delta_plus_1, const Rational& gamma, const Rational& c);

// e(r) for the exponential divergence function: 2^{(r-2d-1)/k} - 1, and e(0)
// as in the table. True when a connecting path of this length is long enough.
bool exceeds_divergence_bound(std::uint64_t length, std::uint64_t r, const ConstantTable& t);
std::string divergence_bound_text(std::uint64_t r, const ConstantTable& t);

struct BoundsCheck {
  bool pass = true;
  std::string failure;             // empty on pass
  std::optional<Vertex> violating;
};

// Validated inputs for verify_bounds: f and g must dominate the measured
// profiles up to delta + eps and delta + 1.
class BoundsContext {
 public:
  BoundsContext(const DistanceMatrix& dm, std::uint64_t delta, BoundProfile f, BoundProfile g,
                Rational epsilon = 1);

  std::uint64_t delta() const noexcept { return delta_; }
  const Rational& epsilon() const noexcept { return epsilon_; }
  std::uint64_t f_shifted() const noexcept { return f_shifted_; }  // f(delta + eps)
  std::uint64_t g_shifted() const noexcept { return g_shifted_; }  // g(delta + eps)
  std::uint64_t cover_radius() const noexcept { return cover_radius_; }

 private:
  std::uint64_t delta_;
  Rational epsilon_;
  std::uint64_t f_shifted_ = 0, g_shifted_ = 0, cover_radius_ = 0;
};

// (a) l(P) <= (l(Q)/eps) f(d+eps) + (l(R)/eps) g(d+eps) for every thin-oriented assignment;
// (b) for transitive triangles every vertex of the composed-parallel side lies within
// 6d + 2d max(f,g)(d+1) of the other two sides, in both directions.
// Throws std::invalid_argument when the triangle is not delta-thin or f, g are too small.
BoundsCheck verify_bounds(const Digraph& g, const DistanceMatrix& dm, const GeodesicTriangle& t,
                          const BoundsContext& ctx);
BoundsCheck verify_bounds(const Digraph& g, const DistanceMatrix& dm, const GeodesicTriangle& t,
                          std::uint64_t delta, const BoundProfile& f, const BoundProfile& gin,
                          const Rational& epsilon = 1);

// Every triangle (one per combination of geodesic choices) with the given
// endpoints and pattern; stops after `cap` triangles.
std::vector<GeodesicTriangle> triangles_at(const Digraph& g, const DistanceMatrix& dm,
                                           std::array<Vertex, 3> endpoints, unsigned pattern,
                                           std::size_t cap, bool* truncated = nullptr);

}  // namespace dirhyp
