#include <dirhyp/hyperbolicity.hpp>
#include <dirhyp/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace dirhyp {

std::array<std::pair<Vertex, Vertex>, 3> pattern_sides(const std::array<Vertex, 3>& e, unsigned pattern) {
  std::array<std::pair<Vertex, Vertex>, 3> s{{{e[0], e[1]}, {e[1], e[2]}, {e[0], e[2]}}};
  for (int k = 0; k < 3; ++k)
    if (pattern & (1u << k)) std::swap(s[k].first, s[k].second);
  return s;
}

std::optional<std::array<int, 3>> transitive_order(const std::array<std::pair<Vertex, Vertex>, 3>& s) {
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      int c = 3 - a - b;
      if (s[a].second == s[b].first && s[a].first == s[c].first && s[b].second == s[c].second)
        return std::array<int, 3>{a, b, c};
    }
  }
  return std::nullopt;
}

bool is_transitive(const GeodesicTriangle& t) {
  std::array<std::pair<Vertex, Vertex>, 3> s;
  for (int k = 0; k < 3; ++k) s[k] = {t.sides[k].from, t.sides[k].to};
  return transitive_order(s).has_value();
}

bool is_cyclic_pattern(unsigned pattern) {
  return !transitive_order(pattern_sides({0, 1, 2}, pattern)).has_value();
}

std::vector<std::pair<int, int>> thin_assignments(const std::array<std::pair<Vertex, Vertex>, 3>& s, int p) {
  std::vector<std::pair<int, int>> out;
  int i = (p + 1) % 3, j = (p + 2) % 3;
  auto touches = [&](int side, Vertex v) { return s[side].first == v || s[side].second == v; };
  for (auto [q, r] : {std::pair{i, j}, std::pair{j, i}})
    if (touches(q, s[p].first) && touches(r, s[p].second)) out.emplace_back(q, r);
  return out;
}

void validate_triangle(const Digraph& g, const DistanceMatrix& dm, const GeodesicTriangle& t) {
  auto expected = pattern_sides(t.endpoints, t.pattern);
  for (int k = 0; k < 3; ++k) {
    const Side& s = t.sides[k];
    if (s.from != expected[k].first || s.to != expected[k].second)
      throw std::invalid_argument("side " + std::to_string(k) + " does not match the pattern");
    if (!is_walk(g, s.walk) || s.walk.front() != s.from || s.walk.back() != s.to)
      throw std::invalid_argument("side " + std::to_string(k) + " is not a walk between its endpoints");
    if (!is_geodesic(dm, s.walk)) throw std::invalid_argument("side " + std::to_string(k) + " is not geodesic");
  }
}

namespace {

std::array<std::pair<Vertex, Vertex>, 3> side_pairs(const GeodesicTriangle& t) {
  std::array<std::pair<Vertex, Vertex>, 3> s;
  for (int k = 0; k < 3; ++k) s[k] = {t.sides[k].from, t.sides[k].to};
  return s;
}

ExtNat from_side(const DistanceMatrix& dm, const Walk& side, Vertex p) {
  ExtNat best = INF;
  for (Vertex q : side.vertices) best = std::min(best, dm(q, p));
  return best;
}

ExtNat to_side(const DistanceMatrix& dm, const Walk& side, Vertex p) {
  ExtNat best = INF;
  for (Vertex q : side.vertices) best = std::min(best, dm(p, q));
  return best;
}

}  // namespace

ExtNat triangle_defect(const DistanceMatrix& dm, const GeodesicTriangle& t, TriangleKind kind) {
  auto s = side_pairs(t);
  ExtNat worst = 0;
  for (int p = 0; p < 3; ++p) {
    const Walk& P = t.sides[p].walk;
    if (kind == TriangleKind::thin) {
      auto assignments = thin_assignments(s, p);
      if (assignments.empty()) throw std::logic_error("side without a thin assignment");
      for (auto [q, r] : assignments)
        for (Vertex v : P.vertices)
          worst = std::max(worst, std::min(from_side(dm, t.sides[q].walk, v), to_side(dm, t.sides[r].walk, v)));
    } else {
      const Walk& A = t.sides[(p + 1) % 3].walk;
      const Walk& B = t.sides[(p + 2) % 3].walk;
      for (Vertex v : P.vertices) {
        worst = std::max(worst, std::min(from_side(dm, A, v), from_side(dm, B, v)));
        worst = std::max(worst, std::min(to_side(dm, A, v), to_side(dm, B, v)));
      }
    }
  }
  return worst;
}

namespace {

// For every ordered pair (a, b) at finite distance: the vertices on a->b
// geodesics, and for every vertex p the largest value over geodesics Q of
// d(Q, p) ("out") and of d(p, Q) ("in"). Geodesic choices on different sides
// are independent, so maximizing a triangle's defect over all choices reduces
// to these per-side maxima.
class CoverTable {
 public:
  CoverTable(const Digraph& g, const DistanceMatrix& dm, unsigned workers)
      : n_(dm.size()), slot_(n_ * n_, none) {
    if (dm.finite_diameter() >= max_stored)
      throw std::length_error("distances too large for the triangle tables");
    std::size_t slots = 0;
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b = 0; b < n_; ++b)
        if (dm(a, b).is_finite()) slot_[a * n_ + b] = static_cast<std::uint32_t>(slots++);
    spans_.resize(slots);
    out_.assign(slots * n_, 0);
    in_.assign(slots * n_, 0);
    parallel_for(n_, workers, [&](std::size_t a) { fill_from(g, dm, static_cast<Vertex>(a)); });
  }

  bool finite(Vertex a, Vertex b) const { return slot_[a * n_ + b] != none; }
  const std::vector<Vertex>& span(Vertex a, Vertex b) const { return spans_[slot_[a * n_ + b]]; }
  ExtNat out(Vertex a, Vertex b, Vertex p) const { return unpack(out_[slot_[a * n_ + b] * n_ + p]); }
  ExtNat in(Vertex a, Vertex b, Vertex p) const { return unpack(in_[slot_[a * n_ + b] * n_ + p]); }

 private:
  static constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
  static constexpr std::uint16_t inf16 = std::numeric_limits<std::uint16_t>::max();
  static constexpr std::uint64_t max_stored = inf16;

  static std::uint16_t pack(ExtNat e) { return e.is_finite() ? static_cast<std::uint16_t>(e.value()) : inf16; }
  static ExtNat unpack(std::uint16_t v) { return v == inf16 ? INF : ExtNat(v); }

  void fill_from(const Digraph& g, const DistanceMatrix& dm, Vertex a) {
    std::vector<std::uint16_t> best_out, best_in;
    std::vector<std::uint32_t> pos(n_, none);
    for (Vertex b = 0; b < n_; ++b) {
      if (!finite(a, b)) continue;
      std::size_t slot = slot_[a * n_ + b];
      auto span = geodesic_span(dm, a, b);
      const std::size_t m = span.size();
      best_out.assign(m * n_, 0);
      best_in.assign(m * n_, 0);
      for (std::size_t i = 0; i < m; ++i) pos[span[i]] = static_cast<std::uint32_t>(i);
      for (std::size_t i = m; i-- > 0;) {
        Vertex v = span[i];
        std::uint16_t* bo = &best_out[i * n_];
        std::uint16_t* bi = &best_in[i * n_];
        bool leaf = v == b;
        if (!leaf) {
          std::fill(bo, bo + n_, 0);
          std::fill(bi, bi + n_, 0);
          for (Vertex s : g.out(v)) {
            if (pos[s] == none || !(dm(a, s) == dm(a, v) + 1)) continue;
            const std::uint16_t* so = &best_out[pos[s] * n_];
            const std::uint16_t* si = &best_in[pos[s] * n_];
            for (std::size_t p = 0; p < n_; ++p) {
              bo[p] = std::max(bo[p], so[p]);
              bi[p] = std::max(bi[p], si[p]);
            }
          }
        }
        auto row = dm.row(v);
        for (Vertex p = 0; p < n_; ++p) {
          std::uint16_t here_out = pack(row[p]);
          std::uint16_t here_in = pack(dm(p, v));
          bo[p] = leaf ? here_out : std::min(bo[p], here_out);
          bi[p] = leaf ? here_in : std::min(bi[p], here_in);
        }
      }
      std::copy(best_out.begin(), best_out.begin() + static_cast<std::ptrdiff_t>(n_), out_.begin() + static_cast<std::ptrdiff_t>(slot * n_));
      std::copy(best_in.begin(), best_in.begin() + static_cast<std::ptrdiff_t>(n_), in_.begin() + static_cast<std::ptrdiff_t>(slot * n_));
      for (Vertex v : span) pos[v] = none;
      spans_[slot] = std::move(span);
    }
  }

  std::size_t n_;
  std::vector<std::uint32_t> slot_;
  std::vector<std::vector<Vertex>> spans_;
  std::vector<std::uint16_t> out_, in_;
};

// a->b geodesic maximizing min over its vertices q of d(q,p) (Sign::out) or d(p,q) (Sign::in).
Walk cover_maximizer(const Digraph& g, const DistanceMatrix& dm, Vertex a, Vertex b, Vertex p, Sign sign) {
  auto span = geodesic_span(dm, a, b);
  std::vector<ExtNat> best(dm.size(), 0);
  auto weight = [&](Vertex q) { return sign == Sign::out ? dm(q, p) : dm(p, q); };
  auto step = [&](Vertex u, Vertex s) { return dm(a, s) == dm(a, u) + 1 && dm(s, b) + dm(a, s) == dm(a, b); };
  for (auto it = span.rbegin(); it != span.rend(); ++it) {
    Vertex v = *it;
    if (v == b) {
      best[v] = weight(v);
      continue;
    }
    ExtNat m = 0;
    for (Vertex s : g.out(v))
      if (step(v, s)) m = std::max(m, best[s]);
    best[v] = std::min(m, weight(v));
  }
  std::vector<Vertex> path{a};
  Vertex u = a;
  while (u != b) {
    Vertex pick = b;
    bool found = false;
    for (Vertex s : g.out(u)) {
      if (!step(u, s)) continue;
      if (!found || best[s] > best[pick]) {
        pick = s;
        found = true;
      }
    }
    u = pick;
    path.push_back(u);
  }
  return Walk(std::move(path));
}

Walk geodesic_through(const Digraph& g, const DistanceMatrix& dm, Vertex a, Vertex b, Vertex p) {
  return concatenate(first_geodesic(g, dm, a, p), first_geodesic(g, dm, p, b));
}

struct Best {
  ExtNat value = 0;
  bool set = false;
  std::array<Vertex, 3> endpoints{};
  unsigned pattern = 0;
  int p = 0, q = 1, r = 2;
  Vertex point = 0;
  Sign sign = Sign::out;  // slim: which half attained the value
  std::uint64_t count = 0;

  void offer(ExtNat v, const std::array<Vertex, 3>& e, unsigned pat, int p_, int q_, int r_, Vertex pt, Sign sg) {
    if (set && v <= value) return;
    value = v;
    set = true;
    endpoints = e;
    pattern = pat;
    p = p_;
    q = q_;
    r = r_;
    point = pt;
    sign = sg;
  }
};

void evaluate(const CoverTable& ct, const std::array<Vertex, 3>& e, unsigned pattern, const DeltaOptions& opt,
              Best& best) {
  auto s = pattern_sides(e, pattern);
  for (auto& [a, b] : s)
    if (!ct.finite(a, b)) return;
  if (opt.mode == TriangleMode::transitive && !transitive_order(s)) return;
  ++best.count;
  if (!best.set) best.offer(0, e, pattern, 0, 1, 2, e[0], Sign::out);
  for (int p = 0; p < 3; ++p) {
    const auto& span = ct.span(s[p].first, s[p].second);
    if (opt.kind == TriangleKind::thin) {
      for (auto [q, r] : thin_assignments(s, p)) {
        for (Vertex v : span) {
          ExtNat val = std::min(ct.out(s[q].first, s[q].second, v), ct.in(s[r].first, s[r].second, v));
          best.offer(val, e, pattern, p, q, r, v, Sign::out);
        }
      }
    } else {
      int q = (p + 1) % 3, r = (p + 2) % 3;
      for (Vertex v : span) {
        ExtNat o = std::min(ct.out(s[q].first, s[q].second, v), ct.out(s[r].first, s[r].second, v));
        ExtNat i = std::min(ct.in(s[q].first, s[q].second, v), ct.in(s[r].first, s[r].second, v));
        best.offer(o, e, pattern, p, q, r, v, Sign::out);
        best.offer(i, e, pattern, p, q, r, v, Sign::in);
      }
    }
  }
}

DeltaResult finish(const Digraph& g, const DistanceMatrix& dm, const Best& best, const DeltaOptions& opt) {
  DeltaResult res;
  res.delta = best.value;
  res.triangles = best.count;
  if (!best.set) return res;
  auto s = pattern_sides(best.endpoints, best.pattern);
  GeodesicTriangle t;
  t.endpoints = best.endpoints;
  t.pattern = best.pattern;
  for (int k = 0; k < 3; ++k) t.sides[k] = Side{s[k].first, s[k].second, first_geodesic(g, dm, s[k].first, s[k].second)};
  if (best.value > ExtNat(0)) {
    auto [pa, pb] = s[best.p];
    t.sides[best.p].walk = geodesic_through(g, dm, pa, pb, best.point);
    Sign q_sign = opt.kind == TriangleKind::thin ? Sign::out : best.sign;
    Sign r_sign = opt.kind == TriangleKind::thin ? Sign::in : best.sign;
    t.sides[best.q].walk = cover_maximizer(g, dm, s[best.q].first, s[best.q].second, best.point, q_sign);
    t.sides[best.r].walk = cover_maximizer(g, dm, s[best.r].first, s[best.r].second, best.point, r_sign);
  }
  res.witness = std::move(t);
  return res;
}

}  // namespace

DeltaResult delta(const Digraph& g, const DistanceMatrix& dm, const DeltaOptions& opt) {
  const std::size_t n = dm.size();
  CoverTable ct(g, dm, opt.workers);
  std::vector<Best> per_x(n);
  parallel_for(n, opt.workers, [&](std::size_t xi) {
    auto x = static_cast<Vertex>(xi);
    for (Vertex y = x; y < n; ++y)
      for (Vertex z = y; z < n; ++z)
        for (unsigned pattern = 0; pattern < 8; ++pattern) evaluate(ct, {x, y, z}, pattern, opt, per_x[xi]);
  });
  Best total;
  for (const Best& b : per_x) {
    if (b.set && (!total.set || b.value > total.value)) {
      auto keep = total.count;
      total = b;
      total.count = keep;
    }
    total.count += b.count;
  }
  return finish(g, dm, total, opt);
}

DeltaResult delta_at(const Digraph& g, const DistanceMatrix& dm, std::array<Vertex, 3> endpoints,
                     const DeltaOptions& opt) {
  CoverTable ct(g, dm, opt.workers);
  Best best;
  for (unsigned pattern = 0; pattern < 8; ++pattern) evaluate(ct, endpoints, pattern, opt, best);
  return finish(g, dm, best, opt);
}

ZeroHyperbolicity is_zero_hyperbolic(const Digraph& g, const DistanceMatrix& dm) {
  ZeroHyperbolicity res;
  for (const Edge& e : g.edges()) {
    if (e.from == e.to) {
      res.witness = {Walk({e.from}), Walk({e.from, e.from}, {0})};
      return res;
    }
  }
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v : g.out(u)) {
      if (g.multiplicity(u, v) > 1) {
        res.witness = {Walk({u, v}, {0}), Walk({u, v}, {1})};
        return res;
      }
    }
  }
  // a directed cycle: shortest closed walk through the least vertex on one
  for (Vertex x = 0; x < g.size(); ++x) {
    for (Vertex u : g.in(x)) {
      if (u != x && dm(x, u).is_finite()) {
        Walk cycle = first_geodesic(g, dm, x, u);
        cycle.vertices.push_back(x);
        res.witness = {Walk({x}), cycle};
        return res;
      }
    }
  }
  // acyclic: count walks from each source, stop at the first vertex reached twice
  std::vector<Vertex> order;
  {
    std::vector<std::size_t> indeg(g.size());
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < g.size(); ++v)
      if ((indeg[v] = g.in(v).size()) == 0) ready.push(v);
    while (!ready.empty()) {
      Vertex v = ready.top();
      ready.pop();
      order.push_back(v);
      for (Vertex s : g.out(v))
        if (--indeg[s] == 0) ready.push(s);
    }
  }
  for (Vertex x = 0; x < g.size(); ++x) {
    std::vector<std::uint8_t> ways(g.size(), 0);  // 0, 1 or "2+"
    std::vector<Vertex> parent(g.size(), x);
    ways[x] = 1;
    for (Vertex y : order) {
      if (y == x || !dm(x, y).is_finite()) continue;
      Vertex first = 0, second = 0;
      int seen = 0;
      for (Vertex u : g.in(y)) {
        if (ways[u] == 0) continue;
        if (seen == 0) first = u;
        else if (seen == 1) second = u;
        seen += ways[u] > 1 ? 2 : 1;
      }
      if (seen >= 2) {
        auto path_to = [&](Vertex t) {
          std::vector<Vertex> p{t};
          while (p.back() != x) p.push_back(parent[p.back()]);
          std::reverse(p.begin(), p.end());
          p.push_back(y);
          return Walk(std::move(p));
        };
        res.witness = {path_to(first), path_to(second)};
        return res;
      }
      ways[y] = 1;
      parent[y] = first;
    }
  }
  res.zero = true;
  return res;
}

ExtNat BoundProfile::at(std::size_t r) const {
  if (r >= values.size()) throw std::out_of_range("bound profile not computed at radius " + std::to_string(r));
  return values[r];
}

BoundProfile bound_profile(const DistanceMatrix& dm, Sign direction, std::size_t r_max) {
  BoundProfile prof;
  prof.direction = direction;
  prof.values.assign(r_max + 1, 0);
  const std::size_t n = dm.size();
  std::vector<std::pair<std::uint64_t, Vertex>> order;
  std::vector<Vertex> members;
  for (Vertex x = 0; x < n; ++x) {
    order.clear();
    for (Vertex y = 0; y < n; ++y) {
      ExtNat d = direction == Sign::out ? dm(x, y) : dm(y, x);
      if (d.is_finite() && d.value() <= r_max) order.emplace_back(d.value(), y);
    }
    std::sort(order.begin(), order.end());
    members.clear();
    ExtNat running = 0;
    std::size_t next = 0;
    for (std::size_t r = 0; r <= r_max; ++r) {
      for (; next < order.size() && order[next].first == r; ++next) {
        Vertex v = order[next].second;
        members.push_back(v);
        for (Vertex m : members) {
          if (dm(v, m).is_finite()) running = std::max(running, dm(v, m));
          if (dm(m, v).is_finite()) running = std::max(running, dm(m, v));
        }
      }
      prof.values[r] = std::max(prof.values[r], running);
    }
  }
  return prof;
}

BigInt ball_size_bound(std::uint64_t r, std::uint64_t delta, std::uint64_t degree) {
  BigInt base = degree == 0 ? 0 : degree - 1;
  BigInt sum = 0, term = 1;
  for (std::uint64_t i = 0; i <= delta; ++i) {
    sum += term;
    term *= base;
  }
  return 2 * BigInt(r) * sum;
}

BoundFunction as_function(const BoundProfile& p) {
  return [p](std::uint64_t r) { return p.at(r); };
}

namespace {

Rational needed(const BoundFunction& f, const BoundFunction& g, std::uint64_t r) {
  ExtNat v = f(r);
  if (g) v = std::max(v, g(r));
  if (!v.is_finite()) throw std::invalid_argument("bound function is infinite at " + std::to_string(r));
  return Rational(v.value());
}

}  // namespace

ConstantTable proof_constants(const ConstantInputs& in) {
  if (!in.f) throw std::invalid_argument("bound function f is required");
  if (in.epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  ConstantTable t;
  const Rational d(in.delta);
  t.delta = d;
  t.epsilon = in.epsilon;
  t.f_of_delta = needed(in.f, in.g, in.delta);
  t.f_of_delta_plus_1 = needed(in.f, in.g, in.delta + 1);
  const Rational& f1 = t.f_of_delta_plus_1;
  t.side_cover_radius = 6 * d + 2 * d * f1;
  t.order_transfer_bound = (2 * in.M + 5 * d) + (2 * in.M + 2 * d + 1) * f1;
  t.neighbourhood_radius = t.side_cover_radius;
  t.divergence_k = t.side_cover_radius;
  t.visual_exponent = 2 * in.epsilon * t.side_cover_radius;
  t.visual_multiplier = std::exp(to_double(t.visual_exponent));
  t.divergence_e0 = (2 * d + in.epsilon + 1) * f1 + t.f_of_delta + d;
  return t;
}

Rational stability_lambda(const Rational& kappa, std::uint64_t delta, std::uint64_t f_delta,
                          std::uint64_t f_delta_plus_1, const Rational& gamma, const Rational& c) {
  Rational d(delta), f0(f_delta), f1(f_delta_plus_1);
  Rational first = 2 * kappa + 2 * gamma * kappa * f1 + gamma * f0 + c;
  Rational second = (kappa + d) * f1 + 1 + d + gamma * (2 * kappa + 1) + c;
  return std::max(first, second);
}

bool exceeds_divergence_bound(std::uint64_t length, std::uint64_t r, const ConstantTable& t) {
  if (r == 0) return Rational(length) > t.divergence_e0;
  BigInt k = numerator(t.divergence_k);
  if (denominator(t.divergence_k) != 1) throw std::invalid_argument("divergence k must be an integer");
  BigInt exponent = BigInt(r) - 2 * numerator(t.delta) - 1;
  if (k == 0) {
    // limit of 2^{e/k} - 1 as k -> 0+: infinite, zero or -1
    if (exponent > 0) return false;
    if (exponent == 0) return length > 0;
    return true;
  }
  if (exponent < 0) return true;  // e(r) < 0
  auto kk = k.convert_to<unsigned>();
  auto ee = exponent.convert_to<unsigned>();
  // length > 2^{e/k} - 1  <=>  (length + 1)^k > 2^e
  return boost::multiprecision::pow(BigInt(length + 1), kk) > boost::multiprecision::pow(BigInt(2), ee);
}

std::string divergence_bound_text(std::uint64_t r, const ConstantTable& t) {
  std::ostringstream out;
  if (r == 0) {
    out << to_double(t.divergence_e0);
    return out.str();
  }
  double k = to_double(t.divergence_k);
  double e = static_cast<double>(r) - 2 * to_double(t.delta) - 1;
  if (k == 0) {
    if (e > 0) return "inf";
    return e == 0 ? "0" : "-1";
  }
  out << std::exp2(e / k) - 1;
  return out.str();
}

BoundsContext::BoundsContext(const DistanceMatrix& dm, std::uint64_t delta, BoundProfile f, BoundProfile g,
                             Rational epsilon)
    : delta_(delta), epsilon_(std::move(epsilon)) {
  if (epsilon_ <= 0) throw std::invalid_argument("epsilon must be positive");
  Rational shifted = Rational(delta) + epsilon_;
  auto r_eps = static_cast<std::uint64_t>(numerator(shifted) / denominator(shifted));
  std::uint64_t r_need = std::max<std::uint64_t>(r_eps, delta + 1);
  if (f.r_max() < r_need || g.r_max() < r_need)
    throw std::invalid_argument("bound profiles must reach radius " + std::to_string(r_need));
  auto mf = bound_profile(dm, Sign::out, r_need);
  auto mg = bound_profile(dm, Sign::in, r_need);
  for (std::uint64_t r = 0; r <= r_need; ++r) {
    if (!f.at(r).is_finite() || !g.at(r).is_finite())
      throw std::invalid_argument("bound profile infinite at radius " + std::to_string(r));
    if (f.at(r) < mf.at(r)) throw std::invalid_argument("f is below the measured out-ball bound at r=" + std::to_string(r));
    if (g.at(r) < mg.at(r)) throw std::invalid_argument("g is below the measured in-ball bound at r=" + std::to_string(r));
  }
  f_shifted_ = f.at(r_eps).value();
  g_shifted_ = g.at(r_eps).value();
  std::uint64_t h1 = std::max(f.at(delta + 1), g.at(delta + 1)).value();
  cover_radius_ = 6 * delta + 2 * delta * h1;
}

BoundsCheck verify_bounds(const Digraph& g, const DistanceMatrix& dm, const GeodesicTriangle& t,
                          const BoundsContext& ctx) {
  validate_triangle(g, dm, t);
  if (triangle_defect(dm, t, TriangleKind::thin) > ExtNat(ctx.delta()))
    throw std::invalid_argument("triangle is not " + std::to_string(ctx.delta()) + "-thin");
  BoundsCheck res;
  auto s = side_pairs(t);
  for (int p = 0; p < 3; ++p) {
    for (auto [q, r] : thin_assignments(s, p)) {
      Rational lhs(walk_length(t.sides[p].walk));
      Rational rhs = Rational(walk_length(t.sides[q].walk)) / ctx.epsilon() * ctx.f_shifted() +
                     Rational(walk_length(t.sides[r].walk)) / ctx.epsilon() * ctx.g_shifted();
      if (lhs > rhs) {
        res.pass = false;
        res.failure = "side " + std::to_string(p) + " longer than the length bound (" + lhs.str() + " > " +
                      rhs.str() + ")";
        return res;
      }
    }
  }
  if (auto order = transitive_order(s)) {
    const Walk& a = t.sides[(*order)[0]].walk;
    const Walk& b = t.sides[(*order)[1]].walk;
    const Walk& c = t.sides[(*order)[2]].walk;
    const ExtNat radius(ctx.cover_radius());
    for (Vertex v : c.vertices) {
      ExtNat from = std::min(from_side(dm, a, v), from_side(dm, b, v));
      ExtNat to = std::min(to_side(dm, a, v), to_side(dm, b, v));
      if (from > radius || to > radius) {
        res.pass = false;
        res.violating = v;
        res.failure = "vertex " + g.label(v) + " of the composed-parallel side is outside radius " + radius.str();
        return res;
      }
    }
  }
  return res;
}

BoundsCheck verify_bounds(const Digraph& g, const DistanceMatrix& dm, const GeodesicTriangle& t,
                          std::uint64_t delta, const BoundProfile& f, const BoundProfile& gin,
                          const Rational& epsilon) {
  return verify_bounds(g, dm, t, BoundsContext(dm, delta, f, gin, epsilon));
}

std::vector<GeodesicTriangle> triangles_at(const Digraph& g, const DistanceMatrix& dm,
                                           std::array<Vertex, 3> endpoints, unsigned pattern, std::size_t cap,
                                           bool* truncated) {
  auto s = pattern_sides(endpoints, pattern);
  std::array<std::vector<Walk>, 3> choices;
  bool cut = false;
  for (int k = 0; k < 3; ++k) {
    if (!dm(s[k].first, s[k].second).is_finite()) {
      if (truncated) *truncated = false;
      return {};
    }
    bool side_cut = false;
    choices[k] = geodesic_vertex_paths(g, dm, s[k].first, s[k].second, cap, &side_cut);
    cut = cut || side_cut;
  }
  std::vector<GeodesicTriangle> out;
  for (const Walk& a : choices[0]) {
    for (const Walk& b : choices[1]) {
      for (const Walk& c : choices[2]) {
        if (out.size() >= cap) {
          if (truncated) *truncated = true;
          return out;
        }
        out.push_back(GeodesicTriangle{endpoints,
                                       {Side{s[0].first, s[0].second, a}, Side{s[1].first, s[1].second, b},
                                        Side{s[2].first, s[2].second, c}},
                                       pattern});
      }
    }
  }
  if (truncated) *truncated = cut;
  return out;
}

}  // namespace dirhyp
