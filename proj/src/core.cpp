#include <dirhyp/core.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace dirhyp {

std::string ExtNat::str() const { return is_finite() ? std::to_string(raw_) : "inf"; }

std::ostream& operator<<(std::ostream& os, ExtNat e) { return os << e.str(); }

Digraph::Digraph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n_ >= std::numeric_limits<Vertex>::max()) throw std::invalid_argument("too many vertices");
  for (const Edge& e : edges_) {
    if (e.from >= n_ || e.to >= n_) {
      throw std::invalid_argument("edge (" + std::to_string(e.from) + ", " + std::to_string(e.to) +
                                  ") has an endpoint outside [0, " + std::to_string(n_) + ")");
    }
  }
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
  } else if (labels_.size() != n_) {
    throw std::invalid_argument("label count does not match vertex count");
  } else {
    labelled_ = true;
  }
  by_label_.reserve(n_);
  for (Vertex v = 0; v < n_; ++v) by_label_.emplace(labels_[v], v);

  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  out_off_.assign(n_ + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      ++out_mult_.back();
      continue;
    }
    out_adj_.push_back(sorted[i].to);
    out_mult_.push_back(1);
    ++out_off_[sorted[i].from + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) out_off_[v + 1] += out_off_[v];

  std::vector<Edge> rev;
  rev.reserve(out_adj_.size());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : out(u)) rev.push_back({v, u});
  std::sort(rev.begin(), rev.end());
  in_off_.assign(n_ + 1, 0);
  for (const Edge& e : rev) {
    in_adj_.push_back(e.to);
    ++in_off_[e.from + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) in_off_[v + 1] += in_off_[v];
}

std::uint32_t Digraph::multiplicity(Vertex u, Vertex v) const {
  auto succ = out(u);
  auto it = std::lower_bound(succ.begin(), succ.end(), v);
  if (it == succ.end() || *it != v) return 0;
  return out_mult_[out_off_[u] + static_cast<std::size_t>(it - succ.begin())];
}

bool Digraph::has_loops() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.from == e.to; });
}

bool Digraph::has_parallel_edges() const noexcept {
  return std::any_of(out_mult_.begin(), out_mult_.end(), [](std::uint32_t m) { return m > 1; });
}

std::size_t Digraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max({best, out(v).size(), in(v).size()});
  return best;
}

std::optional<Vertex> Digraph::find(std::string_view label) const {
  if (auto it = by_label_.find(std::string(label)); it != by_label_.end()) return it->second;
  return std::nullopt;
}

Vertex Digraph::vertex(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw std::invalid_argument("no vertex labelled '" + std::string(label) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<long long> parse_ints(std::string_view s, std::size_t line) {
  std::vector<long long> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw ParseError(line, "not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  std::size_t line_no = 0;
  std::optional<std::pair<long long, long long>> header;
  std::vector<Edge> edges;
  std::map<long long, std::string> names;
  std::size_t header_line = 0;

  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view body = trim(line.substr(1));
      if (body.starts_with("label") && body.size() > 5 && std::isspace(static_cast<unsigned char>(body[5]))) {
        body = trim(body.substr(5));
        auto sp = body.find_first_of(" \t");
        auto idx = parse_ints(body.substr(0, sp), line_no);
        if (idx.size() != 1) throw ParseError(line_no, "label line needs a vertex index");
        std::string_view name = sp == std::string_view::npos ? std::string_view{} : trim(body.substr(sp));
        if (name.empty()) throw ParseError(line_no, "empty label");
        names[idx[0]] = std::string(name);
      }
      continue;
    }
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));

    auto nums = parse_ints(line, line_no);
    if (nums.size() != 2) throw ParseError(line_no, "expected two integers");
    if (!header) {
      if (nums[0] < 0) throw ParseError(line_no, "negative vertex count");
      if (nums[1] < 0) throw ParseError(line_no, "negative edge count");
      header = {nums[0], nums[1]};
      header_line = line_no;
      continue;
    }
    if (nums[0] < 0 || nums[1] < 0 || nums[0] >= header->first || nums[1] >= header->first)
      throw ParseError(line_no, "vertex index out of range");
    edges.push_back({static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1])});
  }
  if (!header) throw ParseError(line_no, "missing \"n m\" header");
  if (static_cast<long long>(edges.size()) != header->second)
    throw ParseError(header_line, "header announces " + std::to_string(header->second) + " edges, found " +
                                      std::to_string(edges.size()));

  std::vector<std::string> labels;
  if (!names.empty()) {
    labels.resize(static_cast<std::size_t>(header->first));
    for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = std::to_string(v);
    for (auto& [v, name] : names) {
      if (v < 0 || v >= header->first) throw ParseError(line_no, "label for vertex out of range");
      labels[static_cast<std::size_t>(v)] = name;
    }
  }
  return Digraph(static_cast<std::size_t>(header->first), std::move(edges), std::move(labels));
}

Digraph load_digraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_digraph(buf.str());
}

std::string format_digraph(const Digraph& g) {
  std::ostringstream out;
  out << g.size() << ' ' << g.edges().size() << '\n';
  if (g.labelled())
    for (Vertex v = 0; v < g.size(); ++v) out << "# label " << v << ' ' << g.label(v) << '\n';
  for (const Edge& e : g.edges()) out << e.from << ' ' << e.to << '\n';
  return out.str();
}

Digraph induced(const Digraph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> index(g.size(), std::numeric_limits<Vertex>::max());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (index[keep[i]] != std::numeric_limits<Vertex>::max()) throw std::invalid_argument("duplicate vertex");
    index[keep[i]] = static_cast<Vertex>(i);
    labels.push_back(g.label(keep[i]));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (index[e.from] != std::numeric_limits<Vertex>::max() && index[e.to] != std::numeric_limits<Vertex>::max())
      edges.push_back({index[e.from], index[e.to]});
  return Digraph(keep.size(), std::move(edges), std::move(labels));
}

Digraph subdivide(const Digraph& g, unsigned k) {
  if (k == 0) throw std::invalid_argument("subdivision factor must be positive");
  if (k == 1) return g;
  std::vector<std::string> labels = g.labels();
  std::vector<Edge> edges;
  std::size_t n = g.size();
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    Vertex prev = e.from;
    for (unsigned j = 1; j < k; ++j) {
      auto fresh = static_cast<Vertex>(n++);
      labels.push_back("s" + std::to_string(i) + "_" + std::to_string(j));
      edges.push_back({prev, fresh});
      prev = fresh;
    }
    edges.push_back({prev, e.to});
  }
  return Digraph(n, std::move(edges), std::move(labels));
}

}  // namespace dirhyp
