#pragma once

#include <dirhyp/divergence.hpp>
#include <dirhyp/families.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dirhyp {

enum class ClaimStatus { certified, inconclusive, refuted };
std::string to_string(ClaimStatus s);

// A realized truncation with its distance matrix.
struct Truncation {
  FamilySpec spec;
  BallRealization ball;
  DistanceMatrix dm;

  Truncation(FamilySpec f, std::size_t n, unsigned workers = 1);
  const Digraph& digraph() const { return ball.digraph; }
  std::vector<Vertex> ray(const RaySpec& r) const { return ray_vertices(ball, r); }
};

struct LeqWitness {
  Vertex probe = 0;
  std::uint64_t r = 0;
  Walk path;  // starts on R1, ends on R2, avoids B_r^+(probe) and B_r^-(probe)
};

struct LeqResult {
  ClaimStatus status = ClaimStatus::refuted;
  ExtNat length = INF;  // max over probes of the shortest avoiding connection
  std::vector<LeqWitness> witnesses;  // one per probe when every probe has one
  std::optional<Vertex> failing_probe;
};

// Probes are the vertices of level <= r + 2. Inconclusive when a search or a
// witness touches vertices beyond the stable core.
LeqResult ray_leq(const Truncation& t, const RaySpec& from, const RaySpec& to, std::uint64_t r);
LeqResult ray_leq_witness(const FamilySpec& f, const RaySpec& from, const RaySpec& to, std::uint64_t M,
                          std::uint64_t r, std::size_t n);

struct ProfileEntry {
  std::uint64_t r = 0;
  ExtNat M = INF;
  ClaimStatus status = ClaimStatus::refuted;
};

std::vector<ProfileEntry> estimate_M_profile(const Truncation& t, const RaySpec& from, const RaySpec& to,
                                             const std::vector<std::uint64_t>& r_grid);
std::vector<ProfileEntry> estimate_M_profile(const FamilySpec& f, const RaySpec& from, const RaySpec& to,
                                             const std::vector<std::uint64_t>& r_grid, std::size_t n);

// 0, 1, ..., (n - 3) / 2: probes of level <= r + 2 then leave a ray tail outside their balls
std::vector<std::uint64_t> default_r_grid(std::size_t n);

struct BoundaryReport {
  std::vector<std::string> rays;
  std::vector<std::vector<std::vector<ProfileEntry>>> profiles;  // [i][j]
  std::vector<std::vector<ClaimStatus>> leq;                     // rays[i] <= rays[j]
  std::vector<std::vector<std::size_t>> classes;                 // indices into rays
  std::vector<std::vector<bool>> class_leq;                      // between classes
  bool provisional = false;
};

BoundaryReport boundary_partition(const Truncation& t, std::uint64_t M_cap, const std::vector<std::uint64_t>& r_grid);
BoundaryReport boundary_partition(const FamilySpec& f, std::size_t n, std::uint64_t M_cap,
                                  const std::vector<std::uint64_t>& r_grid);

// Maximum number of vertex-disjoint directed paths from `from` to `to`; a shared vertex is a trivial path.
std::uint64_t max_disjoint_paths(const Digraph& g, std::span<const Vertex> from, std::span<const Vertex> to);
std::uint64_t disjoint_paths(const FamilySpec& f, const RaySpec& from, const RaySpec& to, std::size_t n);

struct EndsReport {
  std::vector<std::string> rays;
  std::vector<std::size_t> schedule;                                 // truncation sizes
  std::vector<std::vector<std::vector<std::uint64_t>>> growth;       // [i][j][k]
  std::vector<std::vector<bool>> relation;                           // accepted rays[i] precedes rays[j]
  std::vector<std::vector<bool>> escape;                             // ball-escape cross-check
  bool cross_check_agrees = true;
  std::vector<std::vector<std::size_t>> classes;
};

// Accepts i -> j when the disjoint-path count strictly increases over the
// schedule {n/4, n/2, n} and ends at least 3.
EndsReport ends_partition(const FamilySpec& f, std::size_t n, unsigned workers = 1);

struct RefinementMap {
  std::vector<std::size_t> end_of_class;  // boundary class -> end class
  bool total = true;
  bool straddles = false;
};

RefinementMap refinement_map(const BoundaryReport& b, const EndsReport& e);

struct ExtractedRay {
  std::vector<Vertex> vertices;  // R(0), R(1), ... (for anti-rays R(0), R(-1), ...)
  bool geodesic = false;
  bool same_as_input = false;
  ExtNat out_bound = 0;  // max over the result of d(Q, p)
  ExtNat in_bound = 0;   // max over the result of d(p, Q)
};

// Limit of geodesics Q(0) -> Q(i) (reversed for anti-rays): each step keeps the
// farthest index compatible, preferring the branch shared by most indices, then
// the smallest vertex.
ExtractedRay extract_geodesic_ray(const Truncation& t, const RaySpec& q);

struct RhoPoint {
  std::string name;
  std::optional<Vertex> vertex;
  std::optional<RaySpec> ray;
};

struct RhoMatrix {
  std::vector<std::string> points;
  std::vector<std::vector<ExtNat>> rho;        // rho_S
  std::vector<std::vector<Rational>> rho_eps;  // base^-rho, infinity -> 0
  Rational base;
  Rational epsilon_prime;  // base^(2k)
  std::pair<std::size_t, std::size_t> window;
};

// Least base 1 + 1/m with base^(4k) < 2 (2 when k = 0).
Rational default_rho_base(std::uint64_t k);
Rational rational_pow(const Rational& b, std::uint64_t e);

RhoMatrix rho_matrix(const Truncation& t, const std::vector<Vertex>& base_set, const std::vector<RhoPoint>& points,
                     std::pair<std::size_t, std::size_t> window, const Rational& base, std::uint64_t k);

// The same matrix over two windows; an entry that still moves between them is
// not stabilized (a growing rho suggests infinity).
struct RhoTrend {
  RhoMatrix inner;
  RhoMatrix outer;
  std::vector<std::vector<bool>> stabilized;
};

RhoTrend rho_trend(const Truncation& t, const std::vector<Vertex>& base_set, const std::vector<RhoPoint>& points,
                   std::pair<std::size_t, std::size_t> inner, std::pair<std::size_t, std::size_t> outer,
                   const Rational& base, std::uint64_t k);

// Shortest chains over the complete digraph weighted by m (zero diagonal).
std::vector<std::vector<Rational>> chain_distance(const std::vector<std::vector<Rational>>& m);
std::vector<std::vector<double>> chain_distance(const std::vector<std::vector<double>>& m);

struct ChainReport {
  bool hypothesis = true;
  std::string hypothesis_failure;
  bool pass = true;
  std::vector<std::pair<std::size_t, std::size_t>> failures;
};

// Hypothesis: entries in [0, 1], eps'^2 < 2 and m(a,b) <= eps' max(m(a,c), m(c,b)).
// Then (3 - 2 eps') m <= chain_distance(m) <= m entrywise.
ChainReport verify_chain_inequality(const std::vector<std::vector<Rational>>& m, const Rational& epsilon_prime);
ChainReport verify_chain_inequality(const std::vector<std::vector<double>>& m, double epsilon_prime,
                                    double tolerance = 1e-9);

enum class NeighborhoodSide { minus, plus };

struct NeighborhoodResult {
  bool member = false;
  ClaimStatus status = ClaimStatus::refuted;
};

// minus: every probed z = R(i), i in the window, has a y -> z geodesic outside
// B_r^+(x) and B_r^-(x); plus: z -> y geodesics.
NeighborhoodResult neighborhood_member(const Truncation& t, const RhoPoint& target, Vertex y, Vertex x,
                                       std::uint64_t r, NeighborhoodSide side,
                                       std::pair<std::size_t, std::size_t> window);

struct BaseCheck {
  bool is_base = true;
  std::vector<Vertex> uncovered;
};
BaseCheck base_check(const DistanceMatrix& dm, std::span<const Vertex> base_set);

struct Independence {
  std::vector<Vertex> set;
  bool exact = true;
};
// Largest subset of the ball with infinite distance both ways between all pairs.
Independence independence(const DistanceMatrix& dm, Vertex x, std::uint64_t r, Sign sign,
                          std::size_t exact_limit = 48);

}  // namespace dirhyp
