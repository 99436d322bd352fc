#include <dirhyp/acceptance.hpp>
#include <dirhyp/boundary.hpp>
#include <dirhyp/divergence.hpp>
#include <dirhyp/families.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace dirhyp;

namespace {

py::object ext(ExtNat e) {
  if (e.is_infinite()) return py::none();
  return py::int_(e.value());
}

py::object big(const BigInt& b) { return py::int_(py::str(b.str())); }

Rational rational_of(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rational(BigInt(py::str(h).cast<std::string>()));
  return parse_rational(py::str(h).cast<std::string>());
}

TriangleKind kind_of(const std::string& s) {
  if (s == "thin") return TriangleKind::thin;
  if (s == "slim") return TriangleKind::slim;
  throw std::invalid_argument("kind must be 'thin' or 'slim'");
}

TriangleMode mode_of(const std::string& s) {
  if (s == "all") return TriangleMode::all;
  if (s == "transitive") return TriangleMode::transitive;
  throw std::invalid_argument("mode must be 'all' or 'transitive'");
}

std::vector<std::string> labels_of(const Digraph& g, const Walk& w) {
  std::vector<std::string> out;
  for (Vertex v : w.vertices) out.push_back(g.label(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_dirhyp, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                       std::vector<std::string> labels) {
             std::vector<Edge> es;
             for (auto [u, v] : edges) es.push_back({u, v});
             return Digraph(n, std::move(es), std::move(labels));
           }),
           py::arg("n"), py::arg("edges"), py::arg("labels") = std::vector<std::string>{})
      .def_static("parse", [](const std::string& text) { return parse_digraph(text); })
      .def_static("load", &load_digraph)
      .def("__len__", &Digraph::size)
      .def_property_readonly("labels", &Digraph::labels)
      .def_property_readonly("edges",
                             [](const Digraph& g) {
                               std::vector<std::pair<Vertex, Vertex>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.from, e.to);
                               return out;
                             })
      .def("vertex", &Digraph::vertex)
      .def("format", [](const Digraph& g) { return format_digraph(g); })
      .def("__repr__", [](const Digraph& g) {
        return "<Digraph " + std::to_string(g.size()) + " vertices, " + std::to_string(g.edges().size()) + " edges>";
      });

  m.def("distances", [](const Digraph& g) {
    DistanceMatrix dm(g);
    std::vector<std::vector<py::object>> out(g.size());
    for (Vertex u = 0; u < g.size(); ++u)
      for (Vertex v = 0; v < g.size(); ++v) out[u].push_back(ext(dm(u, v)));
    return out;
  }, "All-pairs directed distances; None where unreachable.");

  m.def("delta", [](const Digraph& g, const std::string& kind, const std::string& mode, unsigned workers) {
    DistanceMatrix dm(g, workers);
    auto r = delta(g, dm, {kind_of(kind), mode_of(mode), workers});
    py::dict d;
    d["delta"] = ext(r.delta);
    d["exhaustive"] = r.exhaustive;
    d["triangles"] = r.triangles;
    if (r.witness) {
      std::vector<std::string> ends;
      for (Vertex v : r.witness->endpoints) ends.push_back(g.label(v));
      std::vector<std::vector<std::string>> sides;
      for (const auto& s : r.witness->sides) sides.push_back(labels_of(g, s.walk));
      d["witness"] = py::dict(py::arg("endpoints") = ends, py::arg("sides") = sides);
    }
    return d;
  }, py::arg("g"), py::arg("kind") = "thin", py::arg("mode") = "all", py::arg("workers") = 1);

  m.def("is_zero_hyperbolic", [](const Digraph& g) { return is_zero_hyperbolic(g, DistanceMatrix(g)).zero; });

  m.def("bound_profile", [](const Digraph& g, const std::string& direction, std::size_t r_max) {
    if (direction != "out" && direction != "in") throw std::invalid_argument("direction must be 'out' or 'in'");
    auto p = bound_profile(DistanceMatrix(g), direction == "out" ? Sign::out : Sign::in, r_max);
    std::vector<py::object> out;
    for (auto v : p.values) out.push_back(ext(v));
    return out;
  }, py::arg("g"), py::arg("direction") = "out", py::arg("r_max") = 8);

  m.def("count_geodesics", [](const Digraph& g, Vertex x, Vertex y) {
    DistanceMatrix dm(g);
    if (x >= g.size() || y >= g.size()) throw std::out_of_range("vertex out of range");
    if (dm(x, y).is_infinite()) return py::object(py::int_(0));
    return big(count_geodesics(g, dm, x, y));
  });

  m.def("stability", [](const Digraph& g, Vertex x, Vertex y, const py::object& gamma, const py::object& c) {
    DistanceMatrix dm(g);
    auto s = stability_defect(g, dm, x, y, rational_of(gamma), rational_of(c));
    py::dict d;
    d["kappa_out"] = ext(s.kappa_out);
    d["kappa_in"] = ext(s.kappa_in);
    d["walks"] = s.walks;
    d["exhaustive"] = s.exhaustive;
    return d;
  }, py::arg("g"), py::arg("x"), py::arg("y"), py::arg("gamma") = 1, py::arg("c") = 0);

  m.def("families", [] {
    std::vector<std::string> out;
    for (const auto& f : list_families()) out.push_back(f.name);
    return out;
  });

  m.def("realize", [](const std::string& name, std::size_t n, std::map<std::string, std::string> params) {
    auto b = realize(family(name, std::move(params)), n);
    py::dict d;
    d["digraph"] = b.digraph;
    d["level"] = b.level;
    d["stable_core"] = b.stable_core;
    return d;
  }, py::arg("name"), py::arg("n"), py::arg("params") = std::map<std::string, std::string>{});

  m.def("boundary", [](const std::string& name, std::size_t n, std::uint64_t m_cap,
                       std::map<std::string, std::string> params) {
    auto f = family(name, std::move(params));
    auto b = boundary_partition(f, n, m_cap, default_r_grid(n));
    auto e = ends_partition(f, n);
    auto names = [](const std::vector<std::string>& rays, const std::vector<std::vector<std::size_t>>& cls) {
      std::vector<std::vector<std::string>> out;
      for (const auto& c : cls) {
        out.emplace_back();
        for (auto i : c) out.back().push_back(rays[i]);
      }
      return out;
    };
    std::vector<std::vector<std::string>> order;
    for (const auto& row : b.leq) {
      order.emplace_back();
      for (auto s : row) order.back().push_back(to_string(s));
    }
    py::dict d;
    d["rays"] = b.rays;
    d["order"] = order;
    d["classes"] = names(b.rays, b.classes);
    d["ends"] = names(e.rays, e.classes);
    d["provisional"] = b.provisional;
    return d;
  }, py::arg("name"), py::arg("n"), py::arg("m_cap") = 4, py::arg("params") = std::map<std::string, std::string>{});

  m.def("acceptance", [](std::vector<std::string> only, std::uint64_t seed, unsigned workers) {
    AcceptanceOptions opt;
    opt.only = std::move(only);
    opt.seed = seed;
    opt.workers = workers;
    std::vector<std::tuple<std::string, bool, std::string>> out;
    {
      py::gil_scoped_release release;
      for (auto& r : run_acceptance(opt)) out.emplace_back(r.id, r.passed, r.detail);
    }
    return out;
  }, py::arg("only") = std::vector<std::string>{}, py::arg("seed") = AcceptanceOptions{}.seed,
     py::arg("workers") = 1);
}
