#include <dirhyp/divergence.hpp>
#include <dirhyp/parallel.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dirhyp {

Vertex point_at(const DistanceMatrix& dm, const Walk& P, Vertex x, std::uint64_t R) {
  if (P.vertices.empty()) throw std::invalid_argument("empty walk");
  if (R > walk_length(P))
    throw std::invalid_argument("R = " + std::to_string(R) + " exceeds the geodesic length " +
                                std::to_string(walk_length(P)));
  if (P.front() == x) return P.vertices[R];
  if (P.back() == x) return P.vertices[P.vertices.size() - 1 - R];
  (void)dm;
  throw std::invalid_argument("x is neither the first nor the last vertex of the geodesic");
}

void validate_config(const Digraph& g, const DistanceMatrix& dm, const DivergenceConfig& cfg) {
  for (const Walk* w : {&cfg.first, &cfg.second}) {
    if (!is_walk(g, *w) || !is_geodesic(dm, *w)) throw std::invalid_argument("config side is not a geodesic");
    if (w->front() != cfg.x && w->back() != cfg.x) throw std::invalid_argument("config side does not meet x");
  }
  if (cfg.R > walk_length(cfg.first)) throw std::invalid_argument("R exceeds the length of the first geodesic");
}

namespace {

std::vector<char> ball_mask(const DistanceMatrix& dm, Vertex x, std::uint64_t radius) {
  std::vector<char> blocked(dm.size(), 0);
  const ExtNat rad(radius);
  for (Vertex v = 0; v < dm.size(); ++v) blocked[v] = dm(x, v) <= rad || dm(v, x) <= rad;
  return blocked;
}

ExtNat gap_of(const DistanceMatrix& dm, Vertex u, const Walk& target, GapMode mode) {
  ExtNat best = INF;
  for (Vertex q : target.vertices) {
    best = std::min(best, dm(u, q));
    if (mode == GapMode::symmetric_min) best = std::min(best, dm(q, u));
  }
  return best;
}

}  // namespace

std::optional<Walk> escaping_path(const Digraph& g, const DistanceMatrix& dm, Vertex x, std::uint64_t radius,
                                  std::span<const Vertex> from, std::span<const Vertex> to) {
  auto blocked = ball_mask(dm, x, radius);
  const Vertex none = static_cast<Vertex>(-1);
  std::vector<Vertex> parent(g.size(), none);
  std::vector<char> seen(g.size(), 0), target(g.size(), 0);
  for (Vertex v : to) target[v] = 1;
  std::deque<Vertex> queue;
  for (Vertex s : from) {
    if (blocked[s] || seen[s]) continue;
    seen[s] = 1;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (target[v]) {
      std::vector<Vertex> path{v};
      while (parent[path.back()] != none) path.push_back(parent[path.back()]);
      std::reverse(path.begin(), path.end());
      return Walk(std::move(path));
    }
    for (Vertex s : g.out(v)) {
      if (blocked[s] || seen[s]) continue;
      seen[s] = 1;
      parent[s] = v;
      queue.push_back(s);
    }
  }
  return std::nullopt;
}

DivergenceWitness divergence_witness(const Digraph& g, const DistanceMatrix& dm, const DivergenceConfig& cfg,
                                     GapMode mode) {
  validate_config(g, dm, cfg);
  DivergenceWitness w;
  w.gap = gap_of(dm, point_at(dm, cfg.first, cfg.x, cfg.R), cfg.second, mode);
  w.path = escaping_path(g, dm, cfg.x, cfg.R + cfg.r, cfg.first.vertices, cfg.second.vertices);
  return w;
}

std::vector<DivergencePoint> empirical_divergence(const Digraph& g, const DistanceMatrix& dm,
                                                  const std::vector<DivergenceConfig>& configs,
                                                  const std::vector<std::uint64_t>& r_grid, const Rational& threshold,
                                                  GapMode mode, unsigned workers) {
  for (const auto& c : configs) validate_config(g, dm, c);
  std::vector<std::uint64_t> grid = r_grid;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<DivergencePoint> out(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) out[k].r = grid[k];
  std::vector<std::vector<ExtNat>> per_config(configs.size(), std::vector<ExtNat>(grid.size(), INF));
  parallel_for(configs.size(), workers, [&](std::size_t i) {
    const auto& c = configs[i];
    ExtNat gap = gap_of(dm, point_at(dm, c.first, c.x, c.R), c.second, mode);
    if (gap.is_finite() && Rational(gap.value()) <= threshold) return;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      auto p = escaping_path(g, dm, c.x, c.R + grid[k], c.first.vertices, c.second.vertices);
      if (p) per_config[i][k] = walk_length(*p);
    }
  });
  for (const auto& row : per_config)
    for (std::size_t k = 0; k < grid.size(); ++k) out[k].shortest = std::min(out[k].shortest, row[k]);
  return out;
}

DivergenceAudit audit_divergence(const Digraph& g, const DistanceMatrix& dm, const ConstantTable& table,
                                 std::uint64_t r_max, std::size_t pair_cap, unsigned workers) {
  const std::size_t n = dm.size();
  // integer gaps above e(0)
  const Rational& e0 = table.divergence_e0;
  const std::uint64_t gap_floor =
      e0 < 0 ? 0 : static_cast<std::uint64_t>(numerator(e0) / denominator(e0)) + 1;  // least gap > e(0)
  const bool any_gap = e0 < 0;
  // least escaping length that satisfies the bound at each r (n + 1 when none does)
  std::vector<std::uint64_t> least_ok(r_max + 1, n + 1);
  for (std::uint64_t r = 0; r <= r_max; ++r) {
    for (std::uint64_t L = 0; L <= n; ++L) {
      if (exceeds_divergence_bound(L, r, table)) {
        least_ok[r] = L;
        break;
      }
    }
  }

  std::vector<DivergenceAudit> per_x(n);
  parallel_for(n, workers, [&](std::size_t xi) {
    const auto x = static_cast<Vertex>(xi);
    DivergenceAudit& audit = per_x[xi];
    std::vector<Walk> sides;
    for (Vertex y = 0; y < n; ++y) {
      bool cut = false;
      if (dm(x, y).is_finite()) {
        for (auto& w : geodesic_vertex_paths(g, dm, x, y, pair_cap, &cut)) sides.push_back(std::move(w));
        audit.exhaustive = audit.exhaustive && !cut;
      }
      if (y != x && dm(y, x).is_finite()) {
        for (auto& w : geodesic_vertex_paths(g, dm, y, x, pair_cap, &cut)) sides.push_back(std::move(w));
        audit.exhaustive = audit.exhaustive && !cut;
      }
    }
    std::vector<std::vector<ExtNat>> to_side(sides.size());
    for (std::size_t j = 0; j < sides.size(); ++j) to_side[j] = distance_to_set(dm, sides[j].vertices, Sign::in);

    std::map<std::uint64_t, std::vector<char>> masks;
    auto mask = [&](std::uint64_t radius) -> const std::vector<char>& {
      auto it = masks.find(radius);
      if (it == masks.end()) it = masks.emplace(radius, ball_mask(dm, x, radius)).first;
      return it->second;
    };
    for (std::size_t i = 0; i < sides.size(); ++i) {
      const Walk& P1 = sides[i];
      std::map<std::uint64_t, std::vector<ExtNat>> reach;  // escaping distances from P1, per radius
      auto from_first = [&](std::uint64_t radius) -> const std::vector<ExtNat>& {
        auto it = reach.find(radius);
        if (it != reach.end()) return it->second;
        const auto& blocked = mask(radius);
        std::vector<Vertex> sources;
        for (Vertex v : P1.vertices)
          if (!blocked[v]) sources.push_back(v);
        return reach.emplace(radius, bfs(g, sources, Sign::out, &blocked)).first->second;
      };
      for (std::uint64_t R = 0; R <= walk_length(P1); ++R) {
        const Vertex u = point_at(dm, P1, x, R);
        for (std::size_t j = 0; j < sides.size(); ++j) {
          audit.configs += r_max + 1;
          ExtNat gap = to_side[j][u];
          if (!any_gap && gap.is_finite() && gap.value() < gap_floor) continue;
          audit.triggered += r_max + 1;
          for (std::uint64_t r = 0; r <= r_max; ++r) {
            const auto& dist = from_first(R + r);
            ExtNat best = INF;
            for (Vertex v : sides[j].vertices) best = std::min(best, dist[v]);
            if (!best.is_finite()) continue;
            ++audit.escaping;
            if (best.value() >= least_ok[r]) continue;
            DivergenceViolation viol;
            viol.config = DivergenceConfig{x, P1, sides[j], R, r};
            viol.length = best.value();
            viol.path = *escaping_path(g, dm, x, R + r, P1.vertices, sides[j].vertices);
            if (audit.violations.size() < 64) audit.violations.push_back(std::move(viol));
          }
        }
      }
    }
  });
  DivergenceAudit total;
  for (auto& a : per_x) {
    total.configs += a.configs;
    total.triggered += a.triggered;
    total.escaping += a.escaping;
    total.exhaustive = total.exhaustive && a.exhaustive;
    for (auto& v : a.violations)
      if (total.violations.size() < 64) total.violations.push_back(std::move(v));
  }
  return total;
}

namespace {

// Exact integer form of len <= gamma * d + c.
struct QuasiBound {
  BigInt scale, g, c;
  QuasiBound(const Rational& gamma, const Rational& cc) {
    scale = denominator(gamma) * denominator(cc);
    g = numerator(gamma) * denominator(cc);
    c = numerator(cc) * denominator(gamma);
  }
  bool holds(std::uint64_t len, std::uint64_t d) const { return BigInt(len) * scale <= g * d + c; }
  std::uint64_t max_length(std::uint64_t d) const {
    BigInt top = (g * d + c) / scale;
    return top.convert_to<std::uint64_t>();
  }
};

}  // namespace

StabilityReport stability_defect(const Digraph& g, const DistanceMatrix& dm, Vertex x, Vertex y,
                                 const Rational& gamma, const Rational& c, const StabilityOptions& opt) {
  if (gamma < 1) throw std::invalid_argument("gamma must be at least 1");
  if (c < 0) throw std::invalid_argument("c must be non-negative");
  if (!dm(x, y).is_finite())
    throw std::invalid_argument("unreachable: no directed path from " + g.label(x) + " to " + g.label(y));
  const QuasiBound qb(gamma, c);
  const std::uint64_t limit = qb.max_length(dm(x, y).value());

  StabilityReport rep;
  std::vector<Walk> walks;
  std::vector<Vertex> path{x};
  std::vector<char> on_path(g.size(), 0);
  on_path[x] = 1;
  bool stop = false;
  auto rec = [&](auto&& self, Vertex v) -> void {
    if (stop) return;
    if (v == y) {
      if (walks.size() >= opt.walk_cap) {
        rep.exhaustive = false;
        stop = true;
        return;
      }
      walks.emplace_back(path);
      if (opt.simple_only) return;
    }
    const std::uint64_t len = path.size();  // length after the next step
    for (Vertex s : g.out(v)) {
      if (opt.simple_only && on_path[s]) continue;
      if (!dm(s, y).is_finite() || len + dm(s, y).value() > limit) continue;
      bool ok = true;
      for (std::size_t i = 0; i < path.size() && ok; ++i) {
        ExtNat d = dm(path[i], s);
        ok = d.is_finite() && qb.holds(len - i, d.value());
      }
      if (!ok) continue;
      path.push_back(s);
      ++on_path[s];
      self(self, s);
      --on_path[s];
      path.pop_back();
      if (stop) return;
    }
  };
  rec(rec, x);
  rep.walks = walks.size();
  rep.pairs_examined = static_cast<std::uint64_t>(walks.size()) * walks.size();

  std::vector<char> on_some(g.size(), 0);
  std::vector<std::size_t> holder(g.size(), 0);
  for (std::size_t a = 0; a < walks.size(); ++a)
    for (Vertex p : walks[a].vertices)
      if (!on_some[p]) {
        on_some[p] = 1;
        holder[p] = a;
      }
  for (std::size_t b = 0; b < walks.size(); ++b) {
    auto from_b = distance_to_set(dm, walks[b].vertices, Sign::out);
    auto to_b = distance_to_set(dm, walks[b].vertices, Sign::in);
    for (Vertex p = 0; p < g.size(); ++p) {
      if (!on_some[p]) continue;
      if (from_b[p] > rep.kappa_out) {
        rep.kappa_out = from_b[p];
        rep.witness_out = std::pair{walks[holder[p]], walks[b]};
      }
      if (to_b[p] > rep.kappa_in) {
        rep.kappa_in = to_b[p];
        rep.witness_in = std::pair{walks[holder[p]], walks[b]};
      }
    }
  }
  return rep;
}

QiReport qi_check(const std::vector<Vertex>& map, const DistanceMatrix& d1, const DistanceMatrix& d2,
                  const Rational& gamma, const Rational& c) {
  if (map.size() != d1.size()) throw std::invalid_argument("map must be defined on every source vertex");
  if (gamma < 1 || c < 0) throw std::invalid_argument("need gamma >= 1 and c >= 0");
  for (Vertex v : map)
    if (v >= d2.size()) throw std::invalid_argument("map sends a vertex outside the target");
  QiReport rep;
  const QuasiBound upper(gamma, c);
  for (Vertex a = 0; a < d1.size(); ++a) {
    for (Vertex b = 0; b < d1.size(); ++b) {
      ExtNat s = d1(a, b), t = d2(map[a], map[b]);
      if (s.is_infinite()) {
        if (t.is_finite()) rep.violations.push_back({QiViolation::Kind::lower, a, b});
        continue;
      }
      if (t.is_infinite()) {
        rep.violations.push_back({QiViolation::Kind::infinite, a, b});
        continue;
      }
      if (!upper.holds(t.value(), s.value())) rep.violations.push_back({QiViolation::Kind::upper, a, b});
      // d1 <= gamma (d2 + c)
      if (Rational(s.value()) > gamma * (Rational(t.value()) + c))
        rep.violations.push_back({QiViolation::Kind::lower, a, b});
    }
  }
  for (Vertex y = 0; y < d2.size(); ++y) {
    bool covered = false;
    for (Vertex a = 0; a < map.size() && !covered; ++a) {
      ExtNat there = d2(map[a], y), back = d2(y, map[a]);
      covered = there.is_finite() && back.is_finite() && Rational(there.value()) <= c && Rational(back.value()) <= c;
    }
    if (!covered) rep.violations.push_back({QiViolation::Kind::codensity, 0, y});
  }
  rep.ok = rep.violations.empty();
  return rep;
}

std::vector<Vertex> parse_vertex_map(std::string_view text, const Digraph& from, const Digraph& to) {
  auto resolve = [](const Digraph& g, const std::string& tok, std::size_t line) -> Vertex {
    if (auto v = g.find(tok)) return *v;
    try {
      std::size_t pos = 0;
      auto v = std::stoull(tok, &pos);
      if (pos == tok.size() && v < g.size()) return static_cast<Vertex>(v);
    } catch (const std::exception&) {
    }
    throw ParseError(line, "unknown vertex '" + tok + "'");
  };
  std::vector<Vertex> map(from.size(), 0);
  std::vector<char> set(from.size(), 0);
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::istringstream ls(raw.substr(0, raw.find('#')));
    std::string a, b, extra;
    if (!(ls >> a)) continue;
    if (!(ls >> b) || (ls >> extra)) throw ParseError(lineno, "expected two columns 'u v'");
    Vertex u = resolve(from, a, lineno);
    if (set[u]) throw ParseError(lineno, "vertex '" + a + "' mapped twice");
    map[u] = resolve(to, b, lineno);
    set[u] = 1;
  }
  for (Vertex v = 0; v < from.size(); ++v)
    if (!set[v]) throw ParseError(lineno, "vertex '" + from.label(v) + "' is not mapped");
  return map;
}

}  // namespace dirhyp
