#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dirhyp {

using Vertex = std::uint32_t;

// A natural number or infinity. Addition absorbs infinity.
class ExtNat {
 public:
  constexpr ExtNat() noexcept = default;
  constexpr ExtNat(std::uint64_t v) : raw_(checked(v)) {}  // NOLINT(implicit)

  static constexpr ExtNat infinity() noexcept {
    ExtNat e;
    e.raw_ = inf_raw;
    return e;
  }

  constexpr bool is_finite() const noexcept { return raw_ != inf_raw; }
  constexpr bool is_infinite() const noexcept { return raw_ == inf_raw; }

  std::uint64_t value() const {
    if (!is_finite()) throw std::domain_error("value() of infinite distance");
    return raw_;
  }

  constexpr ExtNat& operator+=(ExtNat o) noexcept {
    if (!is_finite() || !o.is_finite()) {
      raw_ = inf_raw;
    } else {
      std::uint64_t s = raw_ + o.raw_;
      raw_ = s >= inf_raw ? inf_raw : static_cast<std::uint32_t>(s);
    }
    return *this;
  }
  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) noexcept { return a += b; }

  friend constexpr bool operator==(ExtNat, ExtNat) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) noexcept {
    return a.raw_ <=> b.raw_;
  }

  std::string str() const;

 private:
  static constexpr std::uint32_t inf_raw = std::numeric_limits<std::uint32_t>::max();
  static constexpr std::uint32_t checked(std::uint64_t v) {
    if (v >= inf_raw) throw std::overflow_error("distance value out of range");
    return static_cast<std::uint32_t>(v);
  }
  std::uint32_t raw_ = 0;
};

inline constexpr ExtNat INF = ExtNat::infinity();

std::ostream& operator<<(std::ostream& os, ExtNat e);

struct Edge {
  Vertex from;
  Vertex to;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Finite directed multigraph. Loops and parallel edges are kept.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // distinct successors / predecessors, ascending
  std::span<const Vertex> out(Vertex v) const {
    return {out_adj_.data() + out_off_[v], out_adj_.data() + out_off_[v + 1]};
  }
  std::span<const Vertex> in(Vertex v) const {
    return {in_adj_.data() + in_off_[v], in_adj_.data() + in_off_[v + 1]};
  }
  // number of parallel u->v edges
  std::uint32_t multiplicity(Vertex u, Vertex v) const;

  bool has_loops() const noexcept;
  bool has_parallel_edges() const noexcept;
  std::size_t max_degree() const noexcept;

  bool labelled() const noexcept { return labelled_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;
  Vertex vertex(std::string_view label) const;  // throws std::invalid_argument

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  bool labelled_ = false;
  std::unordered_map<std::string, Vertex> by_label_;
  std::vector<std::size_t> out_off_{0}, in_off_{0};
  std::vector<Vertex> out_adj_, in_adj_;
  std::vector<std::uint32_t> out_mult_;
};

// "n m", then m lines "u v". Comment lines start with '#';
// "# label <v> <text>" names a vertex. Trailing "# ..." on a line is ignored.
Digraph parse_digraph(std::string_view text);
Digraph load_digraph(const std::string& path);
std::string format_digraph(const Digraph& g);

// Induced subdigraph on `keep` (in the given order); labels carried over.
Digraph induced(const Digraph& g, std::span<const Vertex> keep);

// Every edge becomes a directed path of k edges through k-1 fresh vertices.
// Original vertices keep their indices.
Digraph subdivide(const Digraph& g, unsigned k);

}  // namespace dirhyp
