#include <dirhyp/boundary.hpp>
#include <dirhyp/parallel.hpp>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace dirhyp {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::certified: return "certified";
    case ClaimStatus::inconclusive: return "inconclusive";
    case ClaimStatus::refuted: return "refuted";
  }
  return "?";
}

Truncation::Truncation(FamilySpec f, std::size_t n, unsigned workers)
    : spec(std::move(f)), ball(realize(spec, n)), dm(ball.digraph, workers) {}

namespace {

std::vector<char> double_ball(const DistanceMatrix& dm, Vertex x, std::uint64_t r) {
  std::vector<char> mask(dm.size(), 0);
  const ExtNat R = r;
  for (Vertex v = 0; v < dm.size(); ++v) mask[v] = dm(x, v) <= R || dm(v, x) <= R;
  return mask;
}

bool all_blocked(std::span<const Vertex> vs, const std::vector<char>& mask) {
  return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return mask[v] != 0; });
}

std::vector<Vertex> require_ray(const Truncation& t, const RaySpec& r) {
  auto vs = t.ray(r);
  if (vs.empty()) throw std::invalid_argument("ray '" + r.name + "' has no vertex in the truncation");
  return vs;
}

// Strongly connected components of a boolean relation (reflexive closure implied).
std::vector<std::vector<std::size_t>> relation_classes(const std::vector<std::vector<bool>>& rel) {
  const std::size_t n = rel.size();
  auto reach = rel;
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<char> done(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    classes.emplace_back();
    for (std::size_t j = i; j < n; ++j) {
      if (!done[j] && reach[i][j] && reach[j][i]) {
        done[j] = 1;
        classes.back().push_back(j);
      }
    }
  }
  return classes;
}

}  // namespace

LeqResult ray_leq(const Truncation& t, const RaySpec& from, const RaySpec& to, std::uint64_t r) {
  const auto& g = t.digraph();
  const auto a = require_ray(t, from);
  const auto b = require_ray(t, to);
  const auto& level = t.ball.level;
  const std::size_t core = t.ball.stable_core;

  LeqResult res;
  res.status = ClaimStatus::certified;
  res.length = 0;
  for (Vertex x = 0; x < g.size(); ++x) {
    if (level[x] > r + 2) continue;
    auto path = escaping_path(g, t.dm, x, r, a, b);
    if (!path) {
      auto mask = double_ball(t.dm, x, r);
      bool starved = all_blocked(a, mask) || all_blocked(b, mask);
      if (!starved) {
        auto reach = bfs(g, a, Sign::out, &mask);
        for (Vertex v = 0; v < g.size() && !starved; ++v) starved = reach[v].is_finite() && level[v] > core;
      }
      res.status = starved ? ClaimStatus::inconclusive : ClaimStatus::refuted;
      res.length = INF;
      res.witnesses.clear();
      res.failing_probe = x;
      return res;
    }
    if (std::any_of(path->vertices.begin(), path->vertices.end(), [&](Vertex v) { return level[v] > core; }))
      res.status = ClaimStatus::inconclusive;
    res.length = std::max(res.length, ExtNat(walk_length(*path)));
    res.witnesses.push_back({x, r, std::move(*path)});
  }
  return res;
}

LeqResult ray_leq_witness(const FamilySpec& f, const RaySpec& from, const RaySpec& to, std::uint64_t M,
                          std::uint64_t r, std::size_t n) {
  Truncation t(f, n);
  auto res = ray_leq(t, from, to, r);
  if (res.status == ClaimStatus::certified && res.length > ExtNat(M)) {
    res.status = ClaimStatus::refuted;
    res.witnesses.clear();
  }
  return res;
}

std::vector<std::uint64_t> default_r_grid(std::size_t n) {
  std::vector<std::uint64_t> grid{0};
  for (std::uint64_t r = 1; n >= 3 && r <= (n - 3) / 2; ++r) grid.push_back(r);
  return grid;
}

std::vector<ProfileEntry> estimate_M_profile(const Truncation& t, const RaySpec& from, const RaySpec& to,
                                             const std::vector<std::uint64_t>& r_grid) {
  std::vector<ProfileEntry> out;
  for (auto r : r_grid) {
    auto res = ray_leq(t, from, to, r);
    out.push_back({r, res.length, res.status});
  }
  return out;
}

std::vector<ProfileEntry> estimate_M_profile(const FamilySpec& f, const RaySpec& from, const RaySpec& to,
                                             const std::vector<std::uint64_t>& r_grid, std::size_t n) {
  return estimate_M_profile(Truncation(f, n), from, to, r_grid);
}

BoundaryReport boundary_partition(const Truncation& t, std::uint64_t M_cap, const std::vector<std::uint64_t>& r_grid) {
  const auto rs = rays(t.spec);
  if (rs.empty()) throw std::invalid_argument("family '" + t.spec.name + "' has no designated rays");
  const std::size_t k = rs.size();
  BoundaryReport rep;
  for (const auto& r : rs) rep.rays.push_back(r.name);
  rep.profiles.assign(k, std::vector<std::vector<ProfileEntry>>(k));
  rep.leq.assign(k, std::vector<ClaimStatus>(k, ClaimStatus::refuted));
  std::vector<std::vector<bool>> accepted(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto prof = estimate_M_profile(t, rs[i], rs[j], r_grid);
      bool inconclusive = false, bounded = true;
      for (const auto& e : prof) {
        if (e.status == ClaimStatus::inconclusive) inconclusive = true;
        if (e.M > ExtNat(M_cap)) bounded = false;
      }
      // a refuted entry with a complete search is decisive even next to inconclusive ones
      bool decisive_refutation = std::any_of(prof.begin(), prof.end(), [&](const ProfileEntry& e) {
        return e.status == ClaimStatus::refuted && e.M > ExtNat(M_cap);
      });
      ClaimStatus s = decisive_refutation ? ClaimStatus::refuted
                      : inconclusive      ? ClaimStatus::inconclusive
                      : bounded           ? ClaimStatus::certified
                                          : ClaimStatus::refuted;
      if (s == ClaimStatus::inconclusive) rep.provisional = true;
      rep.leq[i][j] = s;
      accepted[i][j] = s == ClaimStatus::certified;
      rep.profiles[i][j] = std::move(prof);
    }
  }
  rep.classes = relation_classes(accepted);
  const std::size_t c = rep.classes.size();
  rep.class_leq.assign(c, std::vector<bool>(c, false));
  for (std::size_t p = 0; p < c; ++p)
    for (std::size_t q = 0; q < c; ++q)
      for (auto i : rep.classes[p])
        for (auto j : rep.classes[q])
          if (accepted[i][j]) rep.class_leq[p][q] = true;
  return rep;
}

BoundaryReport boundary_partition(const FamilySpec& f, std::size_t n, std::uint64_t M_cap,
                                  const std::vector<std::uint64_t>& r_grid) {
  return boundary_partition(Truncation(f, n), M_cap, r_grid);
}

std::uint64_t max_disjoint_paths(const Digraph& g, std::span<const Vertex> from, std::span<const Vertex> to) {
  using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
  using FlowGraph = boost::adjacency_list<
      boost::vecS, boost::vecS, boost::directedS, boost::no_property,
      boost::property<boost::edge_capacity_t, long,
                      boost::property<boost::edge_residual_capacity_t, long,
                                      boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
  const std::size_t n = g.size();
  FlowGraph fg(2 * n + 2);
  auto cap = get(boost::edge_capacity, fg);
  auto rev = get(boost::edge_reverse, fg);
  auto arc = [&](std::size_t u, std::size_t v, long c) {
    auto e = add_edge(u, v, fg).first;
    auto back = add_edge(v, u, fg).first;
    cap[e] = c;
    cap[back] = 0;
    rev[e] = back;
    rev[back] = e;
  };
  const std::size_t source = 2 * n, sink = 2 * n + 1;
  for (Vertex v = 0; v < n; ++v) {
    arc(2 * v, 2 * v + 1, 1);
    for (Vertex w : g.out(v))
      if (w != v) arc(2 * v + 1, 2 * w, 1);
  }
  std::vector<char> in_from(n, 0), in_to(n, 0);
  for (Vertex v : from) in_from.at(v) = 1;
  for (Vertex v : to) in_to.at(v) = 1;
  for (Vertex v = 0; v < n; ++v) {
    if (in_from[v]) arc(source, 2 * v, 1);
    if (in_to[v]) arc(2 * v + 1, sink, 1);
  }
  return static_cast<std::uint64_t>(boost::edmonds_karp_max_flow(fg, source, sink));
}

std::uint64_t disjoint_paths(const FamilySpec& f, const RaySpec& from, const RaySpec& to, std::size_t n) {
  auto b = realize(f, n);
  auto a = ray_vertices(b, from), c = ray_vertices(b, to);
  return max_disjoint_paths(b.digraph, a, c);
}

EndsReport ends_partition(const FamilySpec& f, std::size_t n, unsigned workers) {
  const auto rs = rays(f);
  if (rs.empty()) throw std::invalid_argument("family '" + f.name + "' has no designated rays");
  const std::size_t k = rs.size();
  EndsReport rep;
  for (const auto& r : rs) rep.rays.push_back(r.name);
  rep.schedule = {std::max<std::size_t>(n / 4, 1), std::max<std::size_t>(n / 2, 1), n};
  rep.growth.assign(k, std::vector<std::vector<std::uint64_t>>(k));

  std::vector<BallRealization> balls;
  for (auto m : rep.schedule) balls.push_back(realize(f, m));
  parallel_for(k * k, workers, [&](std::size_t idx) {
    std::size_t i = idx / k, j = idx % k;
    for (const auto& b : balls)
      rep.growth[i][j].push_back(max_disjoint_paths(b.digraph, ray_vertices(b, rs[i]), ray_vertices(b, rs[j])));
  });
  rep.relation.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto& gr = rep.growth[i][j];
      bool inc = gr.back() >= 3;
      for (std::size_t s = 1; s < gr.size(); ++s) inc = inc && gr[s] > gr[s - 1];
      rep.relation[i][j] = i == j || inc;
    }
  }

  // Ball-escape criterion: for probes near the root and growing radii, some
  // R_i -> R_j path avoids both balls.
  Truncation t(f, n, workers);
  rep.escape.assign(k, std::vector<bool>(k, true));
  std::vector<std::uint64_t> radii{0, n / 4};
  std::vector<std::vector<Vertex>> ray_sets;
  for (const auto& r : rs) ray_sets.push_back(t.ray(r));
  parallel_for(k * k, workers, [&](std::size_t idx) {
    std::size_t i = idx / k, j = idx % k;
    if (i == j) return;
    bool ok = true;
    for (Vertex x = 0; x < t.digraph().size() && ok; ++x) {
      if (t.ball.level[x] > 2) continue;
      for (auto R : radii) {
        if (!escaping_path(t.digraph(), t.dm, x, R, ray_sets[i], ray_sets[j])) {
          ok = false;
          break;
        }
      }
    }
    rep.escape[i][j] = ok;
  });
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && rep.escape[i][j] != rep.relation[i][j]) rep.cross_check_agrees = false;

  std::vector<std::vector<bool>> sym(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sym[i][j] = rep.relation[i][j] && rep.relation[j][i];
  rep.classes = relation_classes(sym);
  return rep;
}

RefinementMap refinement_map(const BoundaryReport& b, const EndsReport& e) {
  if (b.rays != e.rays) throw std::invalid_argument("boundary and ends reports cover different rays");
  std::vector<std::size_t> end_of_ray(e.rays.size(), static_cast<std::size_t>(-1));
  for (std::size_t c = 0; c < e.classes.size(); ++c)
    for (auto i : e.classes[c]) end_of_ray[i] = c;
  RefinementMap m;
  for (const auto& cls : b.classes) {
    if (cls.empty()) {
      m.total = false;
      m.end_of_class.push_back(static_cast<std::size_t>(-1));
      continue;
    }
    auto target = end_of_ray[cls.front()];
    if (target == static_cast<std::size_t>(-1)) m.total = false;
    for (auto i : cls)
      if (end_of_ray[i] != target) m.straddles = true;
    m.end_of_class.push_back(target);
  }
  return m;
}

ExtractedRay extract_geodesic_ray(const Truncation& t, const RaySpec& q) {
  const auto& g = t.digraph();
  const auto& dm = t.dm;
  const auto Q = require_ray(t, q);
  const bool forward = q.kind == RayKind::ray;
  // distances and neighbours along the ray's direction
  auto D = [&](Vertex a, Vertex b) { return forward ? dm(a, b) : dm(b, a); };
  auto next = [&](Vertex v) { return forward ? g.out(v) : g.in(v); };

  const Vertex root = Q.front();
  std::vector<std::size_t> alive;
  for (std::size_t i = 1; i < Q.size(); ++i)
    if (D(root, Q[i]).is_finite()) alive.push_back(i);

  ExtractedRay res;
  res.vertices.push_back(root);
  std::uint64_t depth = 0;
  while (true) {
    std::erase_if(alive, [&](std::size_t i) { return D(root, Q[i]).value() <= depth; });
    if (alive.empty()) break;
    std::size_t far = alive.front();
    for (auto i : alive)
      if (D(root, Q[i]) >= D(root, Q[far])) far = i;
    const Vertex v = res.vertices.back();
    auto compatible = [&](Vertex s, std::size_t i) {
      auto rest = D(s, Q[i]);
      return rest.is_finite() && depth + 1 + rest.value() == D(root, Q[i]).value();
    };
    std::optional<Vertex> best;
    std::size_t best_count = 0;
    for (Vertex s : next(v)) {
      if (!compatible(s, far)) continue;
      auto count = static_cast<std::size_t>(
          std::count_if(alive.begin(), alive.end(), [&](std::size_t i) { return compatible(s, i); }));
      if (!best || count > best_count) {
        best = s;
        best_count = count;
      }
    }
    if (!best) throw std::logic_error("geodesic extension lost");  // D is a true distance
    std::erase_if(alive, [&](std::size_t i) { return !compatible(*best, i); });
    res.vertices.push_back(*best);
    ++depth;
  }

  std::vector<Vertex> walk = res.vertices;
  if (!forward) std::reverse(walk.begin(), walk.end());
  res.geodesic = is_geodesic(dm, Walk(walk));
  res.same_as_input =
      res.vertices.size() <= Q.size() && std::equal(res.vertices.begin(), res.vertices.end(), Q.begin());
  auto from_q = distance_to_set(dm, Q, Sign::out);
  auto to_q = distance_to_set(dm, Q, Sign::in);
  for (Vertex p : res.vertices) {
    res.out_bound = std::max(res.out_bound, from_q[p]);
    res.in_bound = std::max(res.in_bound, to_q[p]);
  }
  return res;
}

Rational rational_pow(const Rational& b, std::uint64_t e) {
  Rational result = 1, base = b;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Rational default_rho_base(std::uint64_t k) {
  if (k == 0) return Rational(2);
  // start just below the real-valued answer, then step up exactly
  double guess = 1.0 / (std::pow(2.0, 1.0 / (4.0 * static_cast<double>(k))) - 1.0);
  std::uint64_t m = guess > 3 ? static_cast<std::uint64_t>(guess) - 2 : 1;
  while (!(rational_pow(Rational(1) + Rational(BigInt(1), BigInt(m)), 4 * k) < 2)) ++m;
  return Rational(1) + Rational(BigInt(1), BigInt(m));
}

namespace {

struct PointSequence {
  std::optional<Vertex> vertex;
  std::vector<Vertex> ray;
  std::optional<Vertex> at(std::size_t i) const {
    if (vertex) return vertex;
    if (i < ray.size()) return ray[i];
    return std::nullopt;
  }
};

PointSequence sequence_of(const Truncation& t, const RhoPoint& p) {
  PointSequence s;
  if (p.vertex) {
    if (*p.vertex >= t.digraph().size()) throw std::invalid_argument("point '" + p.name + "' is not a vertex");
    s.vertex = p.vertex;
  } else if (p.ray) {
    s.ray = t.ray(*p.ray);
  } else {
    throw std::invalid_argument("point '" + p.name + "' has neither a vertex nor a ray");
  }
  return s;
}

}  // namespace

RhoMatrix rho_matrix(const Truncation& t, const std::vector<Vertex>& base_set, const std::vector<RhoPoint>& points,
                     std::pair<std::size_t, std::size_t> window, const Rational& base, std::uint64_t k) {
  if (base_set.empty()) throw std::invalid_argument("rho needs a nonempty base set");
  if (window.first > window.second) throw std::invalid_argument("window is reversed");
  if (base <= 1) throw std::invalid_argument("rho base must exceed 1");
  const auto& dm = t.dm;
  for (Vertex s : base_set)
    if (s >= dm.size()) throw std::invalid_argument("base vertex out of range");

  // depth[p] = min over s of d<->(s, p)
  std::vector<ExtNat> depth(dm.size(), INF);
  for (Vertex s : base_set)
    for (Vertex p = 0; p < dm.size(); ++p) depth[p] = std::min(depth[p], dm.sym(s, p));

  std::vector<PointSequence> seq;
  for (const auto& p : points) seq.push_back(sequence_of(t, p));

  RhoMatrix m;
  m.base = base;
  m.epsilon_prime = rational_pow(base, 2 * k);
  m.window = window;
  const std::size_t np = points.size();
  for (const auto& p : points) m.points.push_back(p.name);
  m.rho.assign(np, std::vector<ExtNat>(np, INF));
  m.rho_eps.assign(np, std::vector<Rational>(np, Rational(0)));
  for (std::size_t a = 0; a < np; ++a) {
    for (std::size_t b = 0; b < np; ++b) {
      ExtNat best = INF;
      for (std::size_t i = window.first; i <= window.second; ++i) {
        auto u = seq[a].at(i);
        if (!u) break;
        for (std::size_t j = window.first; j <= window.second; ++j) {
          auto v = seq[b].at(j);
          if (!v) break;
          if (dm(*u, *v).is_infinite()) continue;
          for (Vertex p : geodesic_span(dm, *u, *v)) best = std::min(best, depth[p]);
          if (seq[b].vertex) break;
        }
        if (seq[a].vertex) break;
      }
      m.rho[a][b] = best;
      if (best.is_finite()) m.rho_eps[a][b] = Rational(1) / rational_pow(base, best.value());
    }
  }
  return m;
}

RhoTrend rho_trend(const Truncation& t, const std::vector<Vertex>& base_set, const std::vector<RhoPoint>& points,
                   std::pair<std::size_t, std::size_t> inner, std::pair<std::size_t, std::size_t> outer,
                   const Rational& base, std::uint64_t k) {
  RhoTrend tr{rho_matrix(t, base_set, points, inner, base, k), rho_matrix(t, base_set, points, outer, base, k), {}};
  const std::size_t np = points.size();
  tr.stabilized.assign(np, std::vector<bool>(np, false));
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < np; ++b) tr.stabilized[a][b] = tr.inner.rho[a][b] == tr.outer.rho[a][b];
  return tr;
}

namespace {

template <class T>
std::vector<std::vector<T>> floyd(std::vector<std::vector<T>> d) {
  const std::size_t n = d.size();
  for (const auto& row : d)
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  for (std::size_t i = 0; i < n; ++i) d[i][i] = T(0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        T via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = via;
      }
  return d;
}

template <class T>
ChainReport chain_check(const std::vector<std::vector<T>>& m, const T& eps, const T& tol) {
  ChainReport rep;
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  auto fail_hyp = [&](std::string why) {
    rep.hypothesis = false;
    rep.pass = false;
    rep.hypothesis_failure = std::move(why);
    return rep;
  };
  if (!(eps * eps < T(2))) return fail_hyp("epsilon' squared is not below 2");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (m[a][b] < T(0) || m[a][b] > T(1)) return fail_hyp("entry outside [0, 1]");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (m[a][b] > eps * std::max(m[a][c], m[c][b]) + tol)
          return fail_hyp("triple inequality fails at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                          std::to_string(c) + ")");
  auto d = floyd(m);
  const T lower = T(3) - T(2) * eps;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;  // d is zero on the diagonal by construction
      if (lower * m[a][b] > d[a][b] + tol || d[a][b] > m[a][b] + tol) {
        rep.pass = false;
        rep.failures.emplace_back(a, b);
      }
    }
  return rep;
}

}  // namespace

std::vector<std::vector<Rational>> chain_distance(const std::vector<std::vector<Rational>>& m) { return floyd(m); }
std::vector<std::vector<double>> chain_distance(const std::vector<std::vector<double>>& m) { return floyd(m); }

ChainReport verify_chain_inequality(const std::vector<std::vector<Rational>>& m, const Rational& epsilon_prime) {
  return chain_check(m, epsilon_prime, Rational(0));
}

ChainReport verify_chain_inequality(const std::vector<std::vector<double>>& m, double epsilon_prime,
                                    double tolerance) {
  return chain_check(m, epsilon_prime, tolerance);
}

NeighborhoodResult neighborhood_member(const Truncation& t, const RhoPoint& target, Vertex y, Vertex x,
                                       std::uint64_t r, NeighborhoodSide side,
                                       std::pair<std::size_t, std::size_t> window) {
  const auto& g = t.digraph();
  const auto& dm = t.dm;
  if (y >= g.size() || x >= g.size()) throw std::invalid_argument("vertex out of range");
  auto seq = sequence_of(t, target);
  auto mask = double_ball(dm, x, r);
  NeighborhoodResult res;
  if (mask[y]) return res;
  const Sign dir = side == NeighborhoodSide::minus ? Sign::out : Sign::in;
  auto avoid = bfs(g, std::span<const Vertex>(&y, 1), dir, &mask);
  const auto& level = t.ball.level;
  std::size_t probed = 0;
  for (std::size_t i = window.first; i <= window.second; ++i) {
    auto z = seq.at(i);
    if (!z) break;
    ++probed;
    ExtNat d = side == NeighborhoodSide::minus ? dm(y, *z) : dm(*z, y);
    if (mask[*z] || d.is_infinite() || avoid[*z] != d) return res;
    if (seq.vertex) break;
  }
  res.member = true;
  res.status = ClaimStatus::certified;
  if (probed == 0) {
    res.member = false;
    res.status = ClaimStatus::inconclusive;
  }
  for (std::size_t v = 0; v < g.size(); ++v)
    if (avoid[v].is_finite() && level[v] > t.ball.stable_core) res.status = ClaimStatus::inconclusive;
  return res;
}

BaseCheck base_check(const DistanceMatrix& dm, std::span<const Vertex> base_set) {
  BaseCheck res;
  for (Vertex s : base_set)
    if (s >= dm.size()) throw std::invalid_argument("base vertex out of range");
  for (Vertex v = 0; v < dm.size(); ++v) {
    bool covered = std::any_of(base_set.begin(), base_set.end(), [&](Vertex s) { return dm.sym(s, v).is_finite(); });
    if (!covered) res.uncovered.push_back(v);
  }
  res.is_base = res.uncovered.empty();
  return res;
}

Independence independence(const DistanceMatrix& dm, Vertex x, std::uint64_t r, Sign sign, std::size_t exact_limit) {
  auto pts = ball(dm, x, r, sign);
  const std::size_t n = pts.size();
  // conflict when some direction is finite
  auto conflict = [&](std::size_t a, std::size_t b) { return dm.sym(pts[a], pts[b]).is_finite(); };
  Independence res;
  if (n > exact_limit) {
    res.exact = false;
    std::vector<std::size_t> chosen;
    for (std::size_t a = 0; a < n; ++a)
      if (std::none_of(chosen.begin(), chosen.end(), [&](std::size_t b) { return conflict(a, b); }))
        chosen.push_back(a);
    for (auto a : chosen) res.set.push_back(pts[a]);
    return res;
  }
  std::vector<std::size_t> best, current;
  std::function<void(const std::vector<std::size_t>&)> grow = [&](const std::vector<std::size_t>& cand) {
    if (current.size() + cand.size() <= best.size()) return;
    if (cand.empty()) {
      best = current;
      return;
    }
    auto v = cand.front();
    std::vector<std::size_t> with;
    for (std::size_t i = 1; i < cand.size(); ++i)
      if (!conflict(v, cand[i])) with.push_back(cand[i]);
    current.push_back(v);
    grow(with);
    current.pop_back();
    grow(std::vector<std::size_t>(cand.begin() + 1, cand.end()));
  };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  grow(all);
  for (auto a : best) res.set.push_back(pts[a]);
  return res;
}

}  // namespace dirhyp
