#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "idem/calculus.hpp"
#include "idem/laws.hpp"
#include "idem/solvers.hpp"
#include "idem/text_io.hpp"

namespace py = pybind11;
using namespace idem;

namespace {

// Scalar carriers map to float, interval carriers to a (lo, hi) tuple.
Element to_element(const Semiring& s, const py::handle& h) {
  if (s.is_interval() && py::isinstance<py::sequence>(h)) {
    auto seq = py::reinterpret_borrow<py::sequence>(h);
    if (py::len(seq) != 2) throw DomainError("interval must be a (lo, hi) pair");
    const Element e(seq[0].cast<double>(), seq[1].cast<double>());
    s.require(e);
    return e;
  }
  const Element e = s.embed(h.cast<double>());
  s.require(e);
  return e;
}

py::object from_element(const Semiring& s, const Element& e) {
  if (s.is_interval()) return py::make_tuple(e.lo, e.hi);
  return py::float_(e.value());
}

Matrix to_matrix(const Semiring& s, const py::sequence& rows) {
  const auto n = py::len(rows);
  if (n == 0) throw DimensionMismatch("empty matrix");
  const auto cols = py::len(rows[0]);
  std::vector<Element> data;
  data.reserve(n * cols);
  for (const auto& r : rows) {
    auto row = py::reinterpret_borrow<py::sequence>(r);
    if (py::len(row) != cols) throw DimensionMismatch("ragged matrix");
    for (const auto& v : row) data.push_back(to_element(s, v));
  }
  return Matrix(s, n, cols, std::move(data));
}

py::list from_matrix(const Matrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (const auto& e : m.row(i)) row.append(from_element(m.semiring(), e));
    rows.append(row);
  }
  return rows;
}

std::vector<Element> to_elements(const Semiring& s, const py::sequence& values) {
  std::vector<Element> out;
  out.reserve(py::len(values));
  for (const auto& v : values) out.push_back(to_element(s, v));
  return out;
}

py::list from_elements(const Semiring& s, const std::vector<Element>& values) {
  py::list out;
  for (const auto& e : values) out.append(from_element(s, e));
  return out;
}

Graph to_graph(const std::vector<std::tuple<std::string, std::string, double>>& edges,
               const std::vector<std::string>& nodes) {
  Graph g;
  for (const auto& n : nodes) g.add_node(n);
  for (const auto& [from, to, w] : edges) g.add_edge(from, to, w);
  return g;
}

PathProblem to_problem(const std::string& name) {
  if (name == "shortest-path") return PathProblem::ShortestPath;
  if (name == "widest-path") return PathProblem::WidestPath;
  if (name == "transitive-closure") return PathProblem::TransitiveClosure;
  throw DomainError("unknown path problem '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(idem, m) {
  m.doc() = "Semiring-generic matrix closure, Bellman solvers, idempotent integration and "
            "the Legendre transform.";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", error);
  py::register_exception<UnsupportedOperation>(m, "UnsupportedOperation", error);
  py::register_exception<StarUndefined>(m, "StarUndefined", error);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error);
  py::register_exception<SemiringMismatch>(m, "SemiringMismatch", error);
  py::register_exception<GridMismatch>(m, "GridMismatch", error);
  py::register_exception<UnknownNode>(m, "UnknownNode", error);
  py::register_exception<NonStabilizing>(m, "NonStabilizing", error);
  py::register_exception<ParseError>(m, "ParseError", error);

  py::class_<Semiring>(m, "Semiring")
      .def(py::init([](const std::string& name) { return Semiring::parse(name); }),
           py::arg("name"))
      .def_property_readonly("name", &Semiring::name)
      .def_property_readonly("idempotent", &Semiring::idempotent)
      .def_property_readonly("has_division", &Semiring::has_division)
      .def_property_readonly("zero", [](const Semiring& s) { return from_element(s, s.zero()); })
      .def_property_readonly("one", [](const Semiring& s) { return from_element(s, s.one()); })
      .def("add",
           [](const Semiring& s, py::handle a, py::handle b) {
             return from_element(s, s.add(to_element(s, a), to_element(s, b)));
           })
      .def("mul",
           [](const Semiring& s, py::handle a, py::handle b) {
             return from_element(s, s.mul(to_element(s, a), to_element(s, b)));
           })
      .def("leq",
           [](const Semiring& s, py::handle a, py::handle b) {
             return s.leq(to_element(s, a), to_element(s, b));
           })
      .def("star",
           [](const Semiring& s, py::handle a) { return from_element(s, s.star(to_element(s, a))); })
      .def("__eq__", [](const Semiring& a, const Semiring& b) { return a == b; })
      .def("__repr__", [](const Semiring& s) { return "Semiring('" + s.name() + "')"; });

  m.def("dequantize", &dequantize, py::arg("u"), py::arg("h"));
  m.def("deformed_add", &deformed_add, py::arg("w1"), py::arg("w2"), py::arg("h"));
  m.def(
      "classical_interval_ops",
      [](std::pair<double, double> a, std::pair<double, double> b) {
        const auto r = classical_interval_ops({a.first, a.second}, {b.first, b.second});
        return py::make_tuple(py::make_tuple(r.sum.lo, r.sum.hi),
                              py::make_tuple(r.product.lo, r.product.hi));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "check_laws",
      [](const Semiring& s, std::size_t samples, std::uint64_t seed) {
        py::dict out;
        for (const auto& r : check_laws(s, samples, seed)) {
          out[py::str(r.law)] = r.checked ? py::object(py::bool_(r.ok())) : py::none();
        }
        return out;
      },
      py::arg("semiring"), py::arg("samples") = 1000, py::arg("seed") = 1);

  m.def(
      "identity", [](const Semiring& s, std::size_t n) { return from_matrix(Matrix::identity(s, n)); },
      py::arg("semiring"), py::arg("n"));
  m.def(
      "mat_add",
      [](const Semiring& s, const py::sequence& a, const py::sequence& b) {
        return from_matrix(mat_add(to_matrix(s, a), to_matrix(s, b)));
      },
      py::arg("semiring"), py::arg("a"), py::arg("b"));
  m.def(
      "mat_mul",
      [](const Semiring& s, const py::sequence& a, const py::sequence& b, unsigned threads) {
        return from_matrix(mat_mul(to_matrix(s, a), to_matrix(s, b), threads));
      },
      py::arg("semiring"), py::arg("a"), py::arg("b"), py::arg("threads") = 1);
  m.def(
      "scalar_product",
      [](const Semiring& s, const py::sequence& x, const py::sequence& y) {
        return from_element(s, scalar_product(column_vector(s, to_elements(s, x)),
                                              column_vector(s, to_elements(s, y))));
      },
      py::arg("semiring"), py::arg("x"), py::arg("y"));
  m.def(
      "mat_vec",
      [](const Semiring& s, const py::sequence& a, const py::sequence& v) {
        const Vector r = mat_vec(to_matrix(s, a), column_vector(s, to_elements(s, v)));
        return from_elements(s, std::vector<Element>(r.data().begin(), r.data().end()));
      },
      py::arg("semiring"), py::arg("a"), py::arg("v"));
  m.def(
      "closure",
      [](const Semiring& s, const py::sequence& a) {
        return from_matrix(closure_gauss_jordan(to_matrix(s, a)));
      },
      py::arg("semiring"), py::arg("a"));
  m.def(
      "closure_truncated",
      [](const Semiring& s, const py::sequence& a, std::size_t k) {
        return from_matrix(closure_truncated(to_matrix(s, a), k));
      },
      py::arg("semiring"), py::arg("a"), py::arg("k"));
  m.def(
      "field_inverse",
      [](const py::sequence& a) { return from_matrix(field_inverse(to_matrix(Semiring::field(), a))); },
      py::arg("m"), "M^-1 computed as the closure of 1 - M.");
  m.def(
      "solve_bellman",
      [](const Semiring& s, const py::sequence& a, const py::sequence& b, const std::string& method,
         std::size_t max_iterations, double tolerance) {
        SolverOptions opts;
        opts.max_iterations = max_iterations;
        opts.tolerance = tolerance;
        const Matrix am = to_matrix(s, a);
        const Matrix bm = to_matrix(s, b);
        BellmanSolution sol = [&] {
          if (method == "jacobi") return solve_bellman_jacobi(am, bm, opts);
          if (method == "gauss-seidel") return solve_bellman_gauss_seidel(am, bm, opts);
          throw DomainError("unknown method '" + method + "'");
        }();
        py::dict out;
        out["x"] = from_matrix(sol.x);
        out["iterations"] = sol.iterations;
        out["stabilized"] = sol.stabilized;
        return out;
      },
      py::arg("semiring"), py::arg("a"), py::arg("b"), py::arg("method") = "jacobi",
      py::arg("max_iterations") = 0, py::arg("tolerance") = 1e-10);
  m.def(
      "solve_path_problem",
      [](const std::vector<std::tuple<std::string, std::string, double>>& edges,
         const std::string& problem, std::optional<std::string> source,
         std::optional<std::string> target, const std::vector<std::string>& nodes) -> py::object {
        const PathResult r = solve_path_problem(to_graph(edges, nodes), to_problem(problem),
                                                source, target);
        if (r.closure) {
          py::dict out;
          out["nodes"] = r.nodes;
          out["closure"] = from_matrix(*r.closure);
          return out;
        }
        py::dict out;
        for (const auto& [node, v] : r.values) out[py::str(node)] = from_element(r.semiring, v);
        return out;
      },
      py::arg("edges"), py::arg("problem") = "shortest-path", py::arg("source") = py::none(),
      py::arg("target") = py::none(), py::arg("nodes") = std::vector<std::string>{});

  m.def(
      "riemann",
      [](const Semiring& s, std::vector<double> xs, const py::sequence& values) {
        return from_element(s, riemann_universal(SampledFunction(s, std::move(xs), to_elements(s, values))));
      },
      py::arg("semiring"), py::arg("xs"), py::arg("values"));
  m.def(
      "trapezoid",
      [](std::vector<double> xs, const std::vector<double>& values) {
        return trapezoid(SampledFunction(Semiring::field(), std::move(xs), values)).value();
      },
      py::arg("xs"), py::arg("values"));
  m.def(
      "idempotent_integral",
      [](const Semiring& s, std::vector<double> xs, const py::sequence& values) {
        return from_element(s, idempotent_integral(SampledFunction(s, std::move(xs), to_elements(s, values))));
      },
      py::arg("semiring"), py::arg("xs"), py::arg("values"));
  m.def(
      "measure",
      [](const Semiring& s, std::vector<double> xs, const py::sequence& values,
         const std::vector<std::size_t>& indices) {
        return from_element(s, measure(SampledFunction(s, std::move(xs), to_elements(s, values)), indices));
      },
      py::arg("semiring"), py::arg("xs"), py::arg("values"), py::arg("indices"));
  m.def(
      "integral_operator",
      [](const Semiring& s, std::vector<double> xs, std::vector<double> ys, const py::sequence& k,
         const py::sequence& values) {
        const Kernel kernel(std::move(xs), ys, to_matrix(s, k));
        const SampledFunction f(s, std::move(ys), to_elements(s, values));
        return from_elements(s, integral_operator(kernel, f).values());
      },
      py::arg("semiring"), py::arg("xs"), py::arg("ys"), py::arg("kernel"), py::arg("values"));
  m.def(
      "legendre_transform",
      [](std::vector<double> xs, const std::vector<double>& values, const std::vector<double>& xis) {
        const SampledFunction f(Semiring::max_plus(), std::move(xs), values);
        const SampledFunction g = legendre_transform(f, xis);
        std::vector<double> out;
        for (const auto& e : g.values()) out.push_back(e.value());
        return out;
      },
      py::arg("xs"), py::arg("values"), py::arg("xis"));

  m.def(
      "format_matrix",
      [](const Semiring& s, const py::sequence& a) { return write_matrix(to_matrix(s, a)); },
      py::arg("semiring"), py::arg("a"));
  m.def(
      "parse_matrix",
      [](const std::string& text) {
        const Matrix mtx = parse_matrix(text);
        return py::make_tuple(mtx.semiring(), from_matrix(mtx));
      },
      py::arg("text"));
}
