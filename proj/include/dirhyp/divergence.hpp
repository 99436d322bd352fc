#pragma once

#include <dirhyp/hyperbolicity.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace dirhyp {

// On a geodesic that starts at x: the vertex u with d(x,u) = R. On one that ends
// at x: the vertex u with d(u,x) = R. Throws when R exceeds the length or x is
// not an end of P.
Vertex point_at(const DistanceMatrix& dm, const Walk& P, Vertex x, std::uint64_t R);

struct DivergenceConfig {
  Vertex x = 0;
  Walk first;   // P1, starts or ends at x
  Walk second;  // P2, starts or ends at x
  std::uint64_t R = 0;
  std::uint64_t r = 0;
};

// directed: d(P1^x(R), P2); symmetric_min: the smaller of both directions
enum class GapMode { directed, symmetric_min };

struct DivergenceWitness {
  ExtNat gap;
  std::optional<Walk> path;  // shortest P1 -> P2 walk avoiding both (R+r)-balls around x
};

void validate_config(const Digraph& g, const DistanceMatrix& dm, const DivergenceConfig& cfg);

DivergenceWitness divergence_witness(const Digraph& g, const DistanceMatrix& dm, const DivergenceConfig& cfg,
                                     GapMode mode = GapMode::directed);

// Shortest walk from any vertex of `from` to any vertex of `to` that never enters
// B_radius^+(x) or B_radius^-(x).
std::optional<Walk> escaping_path(const Digraph& g, const DistanceMatrix& dm, Vertex x, std::uint64_t radius,
                                  std::span<const Vertex> from, std::span<const Vertex> to);

struct DivergencePoint {
  std::uint64_t r = 0;
  ExtNat shortest = INF;  // over configs whose gap exceeds the threshold
};

// For each r in the grid (configs' own r ignored): the least escaping-path length
// among configs with gap > threshold.
std::vector<DivergencePoint> empirical_divergence(const Digraph& g, const DistanceMatrix& dm,
                                                  const std::vector<DivergenceConfig>& configs,
                                                  const std::vector<std::uint64_t>& r_grid, const Rational& threshold,
                                                  GapMode mode = GapMode::directed, unsigned workers = 1);

// Every config at every vertex x: P1, P2 range over geodesics starting or ending
// at x (at most pair_cap per endpoint pair), R over 0..l(P1), r over 0..r_max.
// A violation is an escaping path not longer than e(r) for a config with gap > e(0).
struct DivergenceViolation {
  DivergenceConfig config;
  std::uint64_t length = 0;
  Walk path;
};

struct DivergenceAudit {
  std::uint64_t configs = 0;
  std::uint64_t triggered = 0;  // gap above e(0)
  std::uint64_t escaping = 0;   // triggered configs with some escaping path
  std::vector<DivergenceViolation> violations;
  bool exhaustive = true;
};

DivergenceAudit audit_divergence(const Digraph& g, const DistanceMatrix& dm, const ConstantTable& table,
                                 std::uint64_t r_max, std::size_t pair_cap = 64, unsigned workers = 1);

struct StabilityOptions {
  std::size_t walk_cap = default_geodesic_cap;
  bool simple_only = true;
};

struct StabilityReport {
  ExtNat kappa_out = 0;  // max over walks A, B and p on A of d(B, p)
  ExtNat kappa_in = 0;   // same with d(p, B)
  std::uint64_t walks = 0;
  std::uint64_t pairs_examined = 0;
  bool exhaustive = true;
  std::optional<std::pair<Walk, Walk>> witness_out;
  std::optional<std::pair<Walk, Walk>> witness_in;
};

// All (gamma, c)-quasi-geodesic x -> y walks (geodesics included), compared pairwise.
StabilityReport stability_defect(const Digraph& g, const DistanceMatrix& dm, Vertex x, Vertex y,
                                 const Rational& gamma, const Rational& c, const StabilityOptions& opt = {});

struct QiViolation {
  enum class Kind { lower, upper, infinite, codensity } kind;
  Vertex a = 0;
  Vertex b = 0;  // second source vertex, or the uncovered target vertex for codensity
};

struct QiReport {
  bool ok = true;
  std::vector<QiViolation> violations;
};

// gamma^-1 d1 - c <= d2(f a, f b) <= gamma d1 + c for all pairs (d1 infinite forces
// d2 infinite) and every target vertex within c of some image in both directions.
QiReport qi_check(const std::vector<Vertex>& map, const DistanceMatrix& d1, const DistanceMatrix& d2,
                  const Rational& gamma, const Rational& c);

// Two-column "u v" text, by index or by label.
std::vector<Vertex> parse_vertex_map(std::string_view text, const Digraph& from, const Digraph& to);

}  // namespace dirhyp
