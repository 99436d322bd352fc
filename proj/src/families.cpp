#include <dirhyp/families.hpp>

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace dirhyp {

namespace {

class Builder {
 public:
  explicit Builder(std::size_t n) : n_(n) {}

  // vertices above the truncation level are dropped
  void add(const std::string& label, std::size_t level) {
    if (level > n_ || index_.count(label)) return;
    index_.emplace(label, static_cast<Vertex>(labels_.size()));
    labels_.push_back(label);
    level_.push_back(level);
  }
  void edge(const std::string& a, const std::string& b) {
    auto i = index_.find(a), j = index_.find(b);
    if (i != index_.end() && j != index_.end()) edges_.push_back({i->second, j->second});
  }
  void both(const std::string& a, const std::string& b) {
    edge(a, b);
    edge(b, a);
  }
  BallRealization finish(std::size_t core) {
    BallRealization out;
    const std::size_t count = labels_.size();
    out.digraph = Digraph(count, std::move(edges_), std::move(labels_));
    out.radius = n_;
    out.level = std::move(level_);
    out.stable_core = core;
    return out;
  }

 private:
  std::size_t n_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> level_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, Vertex> index_;
};

std::string lab(char c, long long i) { return std::string(1, c) + std::to_string(i); }

std::string path_label(const char* side, std::size_t i, std::size_t j) {
  return std::string(side) + std::to_string(i) + "_" + std::to_string(j);
}

BallRealization nat_line(std::size_t n) {
  Builder b(n);
  for (std::size_t i = 0; i <= n; ++i) b.add(lab('x', static_cast<long long>(i)), i);
  for (std::size_t i = 0; i < n; ++i) b.edge(lab('x', static_cast<long long>(i)), lab('x', static_cast<long long>(i + 1)));
  return b.finish(n);
}

BallRealization int_line(std::size_t n) {
  Builder b(n);
  auto m = static_cast<long long>(n);
  for (long long i = -m; i <= m; ++i) b.add(lab('x', i), static_cast<std::size_t>(i < 0 ? -i : i));
  for (long long i = -m; i < m; ++i) b.both(lab('x', i), lab('x', i + 1));
  return b.finish(n);
}

BallRealization ex6_2(std::size_t n) {
  Builder b(n);
  for (std::size_t i = 0; i <= n; ++i) b.add(lab('x', static_cast<long long>(i)), i);
  for (std::size_t i = 1; i <= n; ++i) b.add(lab('y', static_cast<long long>(i)), i);
  for (std::size_t i = 0; i < n; ++i) b.edge(lab('x', static_cast<long long>(i)), lab('x', static_cast<long long>(i + 1)));
  for (std::size_t i = 1; i < n; ++i) b.edge(lab('y', static_cast<long long>(i)), lab('y', static_cast<long long>(i + 1)));
  b.edge("x0", "y1");
  for (std::size_t i = 1; i <= n; ++i) b.edge(lab('x', static_cast<long long>(i)), lab('y', static_cast<long long>(i)));
  return b.finish(n);
}

BallRealization ex7_4(std::size_t n) {
  Builder b(n);
  for (std::size_t i = 0; i <= n; ++i) {
    b.add(lab('x', static_cast<long long>(i)), i);
    b.add(lab('y', static_cast<long long>(i)), i);
  }
  for (std::size_t i = 0; i + 1 <= n; ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      b.add(path_label("px", i, j), i + 1);
      b.add(path_label("py", i, j), i + 1);
    }
  }
  for (std::size_t i = 0; i <= n; ++i) b.edge(lab('x', static_cast<long long>(i)), lab('y', static_cast<long long>(i)));
  for (std::size_t i = 0; i + 1 <= n; ++i) {
    // x_{i+1} -> px{i}_1 -> ... -> px{i}_i -> x_i and y_i -> py{i}_1 -> ... -> y_{i+1}
    std::vector<std::string> xs{lab('x', static_cast<long long>(i + 1))}, ys{lab('y', static_cast<long long>(i))};
    for (std::size_t j = 1; j <= i; ++j) {
      xs.push_back(path_label("px", i, j));
      ys.push_back(path_label("py", i, j));
    }
    xs.push_back(lab('x', static_cast<long long>(i)));
    ys.push_back(lab('y', static_cast<long long>(i + 1)));
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
      b.edge(xs[k], xs[k + 1]);
      b.edge(ys[k], ys[k + 1]);
    }
  }
  return b.finish(n);
}

BallRealization ex12_2(std::size_t n) {
  Builder b(n);
  for (std::size_t i = 0; i <= n; ++i)
    for (char c : {'u', 'v', 'w', 'x', 'y'}) b.add(lab(c, static_cast<long long>(i)), i);
  for (std::size_t i = 0; i <= n; ++i) {
    auto k = static_cast<long long>(i);
    b.edge(lab('u', k), lab('v', k));
    b.edge(lab('v', k), lab('w', k));
    b.edge(lab('w', k), lab('x', k));
    b.edge(lab('x', k), lab('y', k));
    b.edge(lab('v', k), lab('v', k + 1));
    b.edge(lab('x', k + 1), lab('x', k));
  }
  return b.finish(n);
}

// Ball of radius n around x0 in the 3-regular tree; the double ray R is the x_i.
BallRealization ex13_4_tree(std::size_t n) {
  Builder b(n);
  auto m = static_cast<long long>(n);
  for (long long i = -m; i <= m; ++i) b.add(lab('x', i), static_cast<std::size_t>(i < 0 ? -i : i));
  for (long long i = -m; i < m; ++i) b.edge(lab('x', i), lab('x', i + 1));
  for (long long i = -m; i <= m; ++i) {
    std::size_t depth = static_cast<std::size_t>(i < 0 ? -i : i) + 1;
    if (depth > n) continue;
    std::string root = lab('t', i);
    b.add(root, depth);
    b.edge(lab('x', i), root);
    std::vector<std::pair<std::string, std::size_t>> stack{{root, depth}};
    while (!stack.empty()) {
      auto [v, d] = stack.back();
      stack.pop_back();
      if (d == n) continue;
      for (const char* c : {".0", ".1"}) {
        std::string child = v + c;
        b.add(child, d + 1);
        b.both(v, child);
        stack.emplace_back(child, d + 1);
      }
    }
  }
  return b.finish(n);
}

BallRealization ex14_2(std::size_t n) {
  Builder b(n);
  for (std::size_t i = 0; i <= n; ++i) {
    auto k = static_cast<long long>(i);
    b.add(lab('x', k), i);
    b.add(lab('y', -k), i);
    b.add(lab('z', -k), i);
  }
  for (std::size_t i = 0; i <= n; ++i) {
    auto k = static_cast<long long>(i);
    b.edge(lab('x', k), lab('x', k + 1));
    b.edge(lab('y', -k - 1), lab('y', -k));
    b.edge(lab('z', -k - 1), lab('z', -k));
    b.edge(lab('x', k), lab('y', -k));
    b.edge(lab('x', k), lab('z', -k));
  }
  return b.finish(n);
}

std::string word_label(const std::string& w) { return w.empty() ? "1" : w; }

std::size_t param_size(const FamilySpec& f, const std::string& key, std::size_t fallback) {
  auto it = f.params.find(key);
  if (it == f.params.end()) return fallback;
  try {
    std::size_t pos = 0;
    auto v = std::stoull(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw std::invalid_argument("parameter " + key + " must be a non-negative integer, got '" + it->second + "'");
  }
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::string> generating_set_of(const FamilySpec& f, const Presentation& p) {
  if (!f.generating_set.empty()) return f.generating_set;
  if (auto it = f.params.find("gens"); it != f.params.end()) return split_words(it->second);
  std::vector<std::string> out;
  for (char c : p.generators) out.emplace_back(1, c);
  return out;
}

const Presentation& presentation_of(const FamilySpec& f) {
  if (!f.presentation) throw std::invalid_argument("family " + f.name + " needs a presentation");
  return *f.presentation;
}

CayleyTable cyclic_table(std::size_t k) {
  CayleyTable t;
  for (std::size_t i = 0; i < k; ++i) t.elements.push_back("g" + std::to_string(i));
  t.product.assign(k, std::vector<std::size_t>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) t.product[i][j] = (i + j) % k;
  t.generators = {k > 1 ? 1u : 0u};
  t.identity = 0;
  return t;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_generators = false;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (!have_generators) {
      for (const auto& t : tokens(line)) {
        if (t.size() != 1) throw ParseError(lineno, "generators must be single characters, got '" + t + "'");
        if (t == "1" || p.generators.find(t[0]) != std::string::npos)
          throw ParseError(lineno, "invalid or repeated generator '" + t + "'");
        p.generators += t;
      }
      have_generators = true;
      continue;
    }
    if (line.rfind("kind", 0) == 0) {
      auto t = tokens(line);
      if (t.size() != 2 || (t[1] != "monoid" && t[1] != "semigroup"))
        throw ParseError(lineno, "expected 'kind monoid' or 'kind semigroup'");
      p.kind = t[1] == "monoid" ? SemigroupKind::monoid : SemigroupKind::semigroup;
      continue;
    }
    auto arrow = line.find("->");
    if (arrow == std::string::npos) throw ParseError(lineno, "expected a rule 'lhs -> rhs'");
    std::string lhs = trim(line.substr(0, arrow)), rhs = trim(line.substr(arrow + 2));
    if (lhs == "1") lhs.clear();
    if (rhs == "1") rhs.clear();
    if (lhs.empty()) throw ParseError(lineno, "rule with empty left side");
    for (char c : lhs + rhs)
      if (p.generators.find(c) == std::string::npos)
        throw ParseError(lineno, std::string("unknown generator '") + c + "'");
    p.rules.emplace_back(lhs, rhs);
  }
  if (!have_generators) throw ParseError(lineno, "missing generators line");
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return parse_presentation(s.str());
}

Presentation builtin_presentation(const std::string& name) {
  if (name == "ex16_5") return parse_presentation("a b\nba -> ab\nbb -> aa\n");
  if (name.rfind("free", 0) == 0) {
    std::size_t k = 2;
    if (name.size() > 4) k = std::stoul(name.substr(4));
    if (k == 0 || k > 26) throw std::invalid_argument("free monoid rank must be in 1..26");
    Presentation p;
    for (std::size_t i = 0; i < k; ++i) p.generators += static_cast<char>('a' + i);
    return p;
  }
  throw std::invalid_argument("unknown presentation '" + name + "'");
}

std::string normal_form(const Presentation& p, std::string word, std::size_t budget) {
  const std::string original = word;
  for (std::size_t steps = 0;; ++steps) {
    bool rewritten = false;
    for (std::size_t pos = 0; pos < word.size() && !rewritten; ++pos) {
      for (const auto& [lhs, rhs] : p.rules) {
        if (word.compare(pos, lhs.size(), lhs) == 0) {
          if (steps == budget)
            throw std::runtime_error("rewrite budget of " + std::to_string(budget) + " steps exceeded on word '" +
                                     original + "'");
          word.replace(pos, lhs.size(), rhs);
          rewritten = true;
          break;
        }
      }
    }
    if (!rewritten) return word;
  }
}

CayleyTable parse_cayley_table(std::string_view text) {
  CayleyTable t;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  std::vector<std::pair<std::size_t, std::string>> gens;
  std::optional<std::pair<std::size_t, std::string>> identity;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    auto tok = tokens(raw.substr(0, raw.find('#')));
    if (tok.empty()) continue;
    if (tok[0] == "elements") {
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!index.emplace(tok[i], t.elements.size()).second) throw ParseError(lineno, "repeated element " + tok[i]);
        t.elements.push_back(tok[i]);
      }
    } else if (tok[0] == "generators") {
      for (std::size_t i = 1; i < tok.size(); ++i) gens.emplace_back(lineno, tok[i]);
    } else if (tok[0] == "identity") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'identity <element>'");
      identity = {lineno, tok[1]};
    } else {
      rows.emplace_back(lineno, tok);
    }
  }
  if (t.elements.empty()) throw ParseError(lineno, "missing 'elements' line");
  if (rows.size() != t.elements.size())
    throw ParseError(lineno, "expected " + std::to_string(t.elements.size()) + " table rows, got " +
                                 std::to_string(rows.size()));
  auto lookup = [&](std::size_t line, const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError(line, "unknown element " + name);
    return it->second;
  };
  for (auto& [line, row] : rows) {
    if (row.size() != t.elements.size()) throw ParseError(line, "row has the wrong number of entries");
    std::vector<std::size_t> r;
    for (const auto& e : row) r.push_back(lookup(line, e));
    t.product.push_back(std::move(r));
  }
  for (auto& [line, g] : gens) t.generators.push_back(lookup(line, g));
  if (t.generators.empty()) throw ParseError(lineno, "missing 'generators' line");
  if (identity) t.identity = lookup(identity->first, identity->second);
  return t;
}

BallRealization cayley_ball(const Presentation& p, const std::vector<std::string>& generating_set, std::size_t n,
                            std::size_t budget) {
  if (generating_set.empty()) throw std::invalid_argument("empty generating set");
  std::vector<std::string> gens;
  for (const auto& w : generating_set) {
    std::string word = w == "1" ? "" : w;
    for (char c : word)
      if (p.generators.find(c) == std::string::npos)
        throw std::invalid_argument("generating word '" + w + "' uses an unknown generator");
    gens.push_back(word);
  }
  std::vector<std::string> elements;
  std::vector<std::size_t> level;
  std::unordered_map<std::string, Vertex> index;
  std::deque<Vertex> queue;
  auto visit = [&](std::string e, std::size_t depth) {
    if (index.count(e)) return;
    index.emplace(e, static_cast<Vertex>(elements.size()));
    queue.push_back(static_cast<Vertex>(elements.size()));
    elements.push_back(std::move(e));
    level.push_back(depth);
  };
  if (p.kind == SemigroupKind::monoid) {
    visit("", 0);
  } else if (n >= 1) {
    for (const auto& g : gens) visit(normal_form(p, g, budget), 1);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (level[v] >= n) continue;
    for (const auto& g : gens) visit(normal_form(p, elements[v] + g, budget), level[v] + 1);
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < elements.size(); ++v) {
    for (const auto& g : gens) {
      auto it = index.find(normal_form(p, elements[v] + g, budget));
      if (it != index.end()) edges.push_back({v, it->second});
    }
  }
  bool homogeneous = std::all_of(p.rules.begin(), p.rules.end(),
                                 [](const auto& r) { return r.first.size() == r.second.size(); });
  // Homogeneous rules grade elements by letter count, and a path u -> v only
  // passes elements of letter count <= that of v, whose level is at most
  // (longest generator) * level(v).
  std::size_t longest = 0;
  for (const auto& w : gens) longest = std::max(longest, w.size());
  bool graded = homogeneous && std::none_of(gens.begin(), gens.end(), [](const std::string& w) { return w.empty(); });
  std::vector<std::string> labels;
  for (const auto& e : elements) labels.push_back(word_label(e));
  BallRealization out;
  out.digraph = Digraph(elements.size(), std::move(edges), std::move(labels));
  out.radius = n;
  out.level = std::move(level);
  out.stable_core = graded && longest > 0 ? n / longest : 0;
  return out;
}

BallRealization cayley_table_ball(const CayleyTable& t, std::size_t n) {
  const std::size_t m = t.elements.size();
  std::vector<long long> depth(m, -1);
  std::vector<std::size_t> order;
  std::deque<std::size_t> queue;
  auto visit = [&](std::size_t e, long long d) {
    if (depth[e] >= 0) return;
    depth[e] = d;
    order.push_back(e);
    queue.push_back(e);
  };
  if (t.identity) {
    visit(*t.identity, 0);
  } else if (n >= 1) {
    for (auto g : t.generators) visit(g, 1);
  }
  while (!queue.empty()) {
    auto e = queue.front();
    queue.pop_front();
    if (static_cast<std::size_t>(depth[e]) >= n) continue;
    for (auto g : t.generators) visit(t.product[e][g], depth[e] + 1);
  }
  std::vector<Vertex> vid(m, 0);
  for (std::size_t i = 0; i < order.size(); ++i) vid[order[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  bool closed = true;
  for (auto e : order) {
    for (auto g : t.generators) {
      auto f = t.product[e][g];
      if (depth[f] >= 0) edges.push_back({vid[e], vid[f]});
      else closed = false;
    }
  }
  std::vector<std::string> labels;
  std::vector<std::size_t> level;
  for (auto e : order) {
    labels.push_back(t.elements[e]);
    level.push_back(static_cast<std::size_t>(depth[e]));
  }
  BallRealization out;
  out.digraph = Digraph(order.size(), std::move(edges), std::move(labels));
  out.radius = n;
  out.level = std::move(level);
  out.stable_core = closed ? n : 0;
  return out;
}

FamilySpec family(const std::string& name, std::map<std::string, std::string> params) {
  FamilySpec f;
  f.name = name;
  f.params = std::move(params);
  if (name == "ex16_5") {
    f.presentation = builtin_presentation("ex16_5");
  } else if (name == "free_monoid") {
    f.presentation = builtin_presentation("free" + std::to_string(param_size(f, "k", 2)));
  } else if (name == "cayley") {
    auto it = f.params.find("presentation");
    f.presentation = builtin_presentation(it == f.params.end() ? "ex16_5" : it->second);
  } else if (name == "cayley_table") {
    f.table = cyclic_table(param_size(f, "order", 3));
  } else {
    bool known = std::any_of(list_families().begin(), list_families().end(),
                             [&](const FamilyInfo& i) { return i.name == name; });
    if (!known) throw std::invalid_argument("unknown family '" + name + "'");
  }
  return f;
}

BallRealization realize(const FamilySpec& f, std::size_t n) {
  if (n < 1) throw std::invalid_argument("truncation size must be at least 1");
  const auto& name = f.name;
  if (name == "nat_line") return nat_line(n);
  if (name == "int_line") return int_line(n);
  if (name == "ex6_2") return ex6_2(n);
  if (name == "ex7_4") return ex7_4(n);
  if (name == "ex12_2") return ex12_2(n);
  if (name == "ex13_4_tree") return ex13_4_tree(n);
  if (name == "ex14_2") return ex14_2(n);
  if (name == "ex16_5" || name == "free_monoid" || name == "cayley") {
    const auto& p = presentation_of(f);
    return cayley_ball(p, generating_set_of(f, p), n, param_size(f, "budget", default_rewrite_budget));
  }
  if (name == "cayley_table") {
    if (!f.table) throw std::invalid_argument("cayley_table needs a table");
    return cayley_table_ball(*f.table, n);
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

namespace {

RaySpec simple_ray(std::string name, RayKind kind, char c, long long sign = 1, long long offset = 0) {
  return RaySpec{std::move(name), kind,
                 [c, sign, offset](std::size_t i) { return lab(c, sign * static_cast<long long>(i) + offset); }, true};
}

// Anti-ray through x0, x1, ... following the connecting paths backwards.
std::string ex7_4_x(std::size_t k) {
  if (k == 0) return "x0";
  std::size_t pos = 0;
  for (std::size_t i = 0;; ++i) {
    // after x_i come px{i}_i, ..., px{i}_1, then x_{i+1}
    for (std::size_t j = i; j >= 1; --j)
      if (++pos == k) return path_label("px", i, j);
    if (++pos == k) return lab('x', static_cast<long long>(i + 1));
  }
}

std::string ex7_4_y(std::size_t k) {
  if (k == 0) return "y0";
  std::size_t pos = 0;
  for (std::size_t i = 0;; ++i) {
    for (std::size_t j = 1; j <= i; ++j)
      if (++pos == k) return path_label("py", i, j);
    if (++pos == k) return lab('y', static_cast<long long>(i + 1));
  }
}

}  // namespace

std::vector<RaySpec> rays(const FamilySpec& f) {
  const auto& name = f.name;
  if (name == "nat_line") return {simple_ray("x-ray", RayKind::ray, 'x')};
  if (name == "int_line") {
    RaySpec zig{"zig", RayKind::ray,
                [](std::size_t i) {
                  static const char* head[] = {"x0", "x1", "x0"};
                  return i < 3 ? std::string(head[i]) : lab('x', static_cast<long long>(i) - 2);
                },
                false};
    return {simple_ray("right-ray", RayKind::ray, 'x'), simple_ray("left-ray", RayKind::ray, 'x', -1),
            std::move(zig)};
  }
  if (name == "ex6_2") return {simple_ray("x-ray", RayKind::ray, 'x'), simple_ray("y-ray", RayKind::ray, 'y', 1, 1)};
  if (name == "ex7_4")
    return {RaySpec{"x-anti-ray", RayKind::anti_ray, ex7_4_x, true}, RaySpec{"y-ray", RayKind::ray, ex7_4_y, true}};
  if (name == "ex12_2")
    return {simple_ray("v-ray", RayKind::ray, 'v'), simple_ray("x-anti-ray", RayKind::anti_ray, 'x')};
  if (name == "ex13_4_tree")
    return {simple_ray("x-ray", RayKind::ray, 'x'), simple_ray("x-anti-ray", RayKind::anti_ray, 'x', -1)};
  if (name == "ex14_2")
    return {simple_ray("x-ray", RayKind::ray, 'x'), simple_ray("y-anti-ray", RayKind::anti_ray, 'y', -1),
            simple_ray("z-anti-ray", RayKind::anti_ray, 'z', -1)};
  if (name == "ex16_5") {
    auto power = [](std::size_t i) { return i == 0 ? std::string("1") : std::string(i, 'a'); };
    return {RaySpec{"a-ray", RayKind::ray, power, true},
            RaySpec{"ab-ray", RayKind::ray,
                    [](std::size_t i) { return i == 0 ? std::string("a") : std::string(i, 'a') + "b"; }, true}};
  }
  if (name == "free_monoid") {
    return {RaySpec{"a-ray", RayKind::ray,
                    [](std::size_t i) { return i == 0 ? std::string("1") : std::string(i, 'a'); }, true}};
  }
  return {};
}

const std::vector<FamilyInfo>& list_families() {
  static const std::vector<FamilyInfo> catalog{
      {"nat_line", "directed ray x0 -> x1 -> ... truncated at xn; stable core n", "", true, true},
      {"int_line", "both-way path x-n .. xn (the integers); stable core n", "", true, true},
      {"ex6_2", "rays x0x1... and y1y2... with edges x0y1 and xiyi (i >= 1); stable core n", "", true, true},
      {"ex7_4",
       "sequences xi, yi with edges xiyi, a path x(i+1) -> xi and a path yi -> y(i+1) of length i+1 "
       "(interior vertices px<i>_<j>, py<i>_<j>); stable core n",
       "", true, true},
      {"ex12_2", "vertices ui vi wi xi yi, edges uivi viwi wixi xiyi vivi+1 xi+1xi; stable core n", "", true, true},
      {"ex13_4_tree",
       "radius-n ball around x0 in the 3-regular tree: double ray forward, edges off it pointing away, "
       "all other edges both ways; no finite base; stable core n",
       "", true, false},
      {"ex14_2", "ray x0x1..., anti-rays ..y-1y0 and ..z-1z0, edges xi -> y-i and xi -> z-i; stable core n", "",
       true, true},
      {"free_monoid", "Cayley ball of the free monoid on k letters; stable core n", "k (default 2)", true, true},
      {"cayley",
       "Cayley ball of a presented monoid or semigroup; stable core n / (longest generator) for "
       "homogeneous rules, else 0",
       "presentation (builtin name), gens (comma separated words), budget", false, true},
      {"ex16_5", "Cayley ball of <a,b | a^2 = b^2, ab = ba>; stable core n / (longest generator)", "gens (default a,b)", true, true},
      {"cayley_table", "Cayley digraph of a finite semigroup from its table (default: cyclic group)",
       "order (default 3)", false, true},
  };
  return catalog;
}

std::vector<Vertex> ray_vertices(const BallRealization& b, const RaySpec& ray, std::size_t limit) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < limit; ++i) {
    auto v = b.digraph.find(ray.label_at(i));
    if (!v) break;
    out.push_back(*v);
  }
  return out;
}

}  // namespace dirhyp
