#pragma once

#include <dirhyp/core.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dirhyp {

enum class RayKind { ray, anti_ray };

// A designated ray or anti-ray of a family. label_at(i) names R(i) for a ray and
// R(-i) for an anti-ray; edges run label_at(i) -> label_at(i+1) for rays and
// label_at(i+1) -> label_at(i) for anti-rays.
struct RaySpec {
  std::string name;
  RayKind kind = RayKind::ray;
  std::function<std::string(std::size_t)> label_at;
  bool geodesic = true;
};

enum class SemigroupKind { monoid, semigroup };

// Complete rewriting system over single-character generators.
struct Presentation {
  std::string generators;  // one character per generator
  std::vector<std::pair<std::string, std::string>> rules;
  SemigroupKind kind = SemigroupKind::monoid;
};

// Generators line, then "lhs -> rhs" lines; "1" or an empty side is the empty
// word. A line "kind monoid|semigroup" sets the kind; '#' starts a comment.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);
// "ex16_5" (a^2 = b^2, ab = ba) and "free<k>".
Presentation builtin_presentation(const std::string& name);

inline constexpr std::size_t default_rewrite_budget = 10000;

// Scans left to right and applies the first rule (in order) matching at the
// leftmost position. Throws std::runtime_error when the budget runs out.
std::string normal_form(const Presentation& p, std::string word, std::size_t budget = default_rewrite_budget);

// Finite semigroup given by its multiplication table.
struct CayleyTable {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> product;  // product[i][j] = elements[i] * elements[j]
  std::vector<std::size_t> generators;
  std::optional<std::size_t> identity;            // start of the ball when set
};

// "elements e a b", one row of element names per element, "generators a",
// optional "identity e".
CayleyTable parse_cayley_table(std::string_view text);

struct BallRealization {
  Digraph digraph;
  std::size_t radius = 0;
  std::vector<std::size_t> level;  // family index (or word length) of each vertex
  // Distances between vertices of level <= stable_core agree with the infinite digraph.
  std::size_t stable_core = 0;
};

struct FamilySpec {
  std::string name;
  std::map<std::string, std::string> params;
  std::optional<Presentation> presentation;  // cayley
  std::vector<std::string> generating_set;   // cayley; defaults to the generators
  std::optional<CayleyTable> table;          // cayley_table
};

FamilySpec family(const std::string& name, std::map<std::string, std::string> params = {});

BallRealization realize(const FamilySpec& f, std::size_t n);
std::vector<RaySpec> rays(const FamilySpec& f);

// Elements of word length <= n over `generating_set`, edges x -> xs.
BallRealization cayley_ball(const Presentation& p, const std::vector<std::string>& generating_set, std::size_t n,
                            std::size_t budget = default_rewrite_budget);
BallRealization cayley_table_ball(const CayleyTable& t, std::size_t n);

struct FamilyInfo {
  std::string name;
  std::string description;
  std::string params;
  bool has_rays = false;
  bool finitely_based = true;
};

const std::vector<FamilyInfo>& list_families();

// Vertices R(0), R(1), ... present in the realization, stopping at the first
// missing label or after `limit` entries.
std::vector<Vertex> ray_vertices(const BallRealization& b, const RaySpec& ray,
                                 std::size_t limit = static_cast<std::size_t>(-1));

}  // namespace dirhyp
