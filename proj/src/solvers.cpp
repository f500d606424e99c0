#include "idem/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace idem {

namespace {

void require_square(const Matrix& a, const char* op) {
  if (!a.square()) {
    throw DimensionMismatch(std::string(op) + " needs a square matrix, got " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

void check_system(const Matrix& a, const Matrix& b) {
  require_square(a, "bellman solve");
  if (!(a.semiring() == b.semiring())) {
    throw SemiringMismatch("bellman solve: " + a.semiring().name() + " vs " +
                           b.semiring().name());
  }
  if (b.rows() != a.rows()) {
    throw DimensionMismatch("bellman solve: B has " + std::to_string(b.rows()) +
                            " rows, A is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()));
  }
}

std::size_t iteration_cap(const Matrix& a, const SolverOptions& opts) {
  if (opts.max_iterations) return opts.max_iterations;
  const std::size_t n = a.rows();
  return a.semiring().idempotent() ? 10 * n : std::max<std::size_t>(10 * n, 1000);
}

double distance(double x, double y) {
  if (x == y) return 0.0;
  if (std::isinf(x) || std::isinf(y)) return std::numeric_limits<double>::infinity();
  return std::fabs(x - y);
}

// Whether one iterate step counts as a fixed point under the semiring's stopping rule.
bool settled(const Semiring& s, const Element& before, const Element& after, double tol) {
  if (s.idempotent()) return s.equal(before, after);
  return std::max(distance(before.lo, after.lo), distance(before.hi, after.hi)) < tol;
}

NonStabilizing not_settling(std::size_t cap, std::optional<std::size_t> row) {
  return NonStabilizing("bellman iteration did not stabilize within " + std::to_string(cap) +
                            " iterations" +
                            (row ? " (row " + std::to_string(*row) + " still changing)" : ""),
                        row);
}

}  // namespace

Matrix closure_gauss_jordan(const Matrix& a) {
  require_square(a, "closure");
  const auto& s = a.semiring();
  const std::size_t n = a.rows();
  std::vector<Element> w(a.data().begin(), a.data().end());
  std::vector<Element> col(n);
  std::vector<Element> row(n);

  for (std::size_t k = 0; k < n; ++k) {
    Element pivot;
    try {
      pivot = s.star(w[k * n + k]);
    } catch (const StarUndefined& e) {
      throw NonStabilizing("closure does not stabilize at pivot " + std::to_string(k) + ": " +
                               e.what(),
                           k);
    }
    for (std::size_t i = 0; i < n; ++i) {
      col[i] = s.mul(w[i * n + k], pivot);
      row[i] = w[k * n + i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (col[i] == s.zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        w[i * n + j] = s.add(w[i * n + j], s.mul(col[i], row[j]));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) w[i * n + i] = s.add(w[i * n + i], s.one());
  return Matrix(s, n, n, std::move(w));
}

Matrix field_inverse_via_closure(const Matrix& a) {
  if (a.semiring().kind() != Kind::Field) {
    throw SemiringMismatch("field inverse needs the field semiring, got " + a.semiring().name());
  }
  return closure_gauss_jordan(a);
}

Matrix field_inverse(const Matrix& m) {
  if (m.semiring().kind() != Kind::Field) {
    throw SemiringMismatch("field inverse needs the field semiring, got " + m.semiring().name());
  }
  require_square(m, "inverse");
  std::vector<Element> shifted(m.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      shifted[i * m.cols() + j] = Element((i == j ? 1.0 : 0.0) - m(i, j).value());
    }
  }
  return closure_gauss_jordan(Matrix(m.semiring(), m.rows(), m.cols(), std::move(shifted)));
}

BellmanSolution solve_bellman_jacobi(const Matrix& a, const Matrix& b, const SolverOptions& opts) {
  check_system(a, b);
  const auto& s = a.semiring();
  const std::size_t cap = iteration_cap(a, opts);
  Matrix x = b;
  if (opts.on_iterate) opts.on_iterate(0, x);

  std::optional<std::size_t> moving;
  for (std::size_t t = 1; t <= cap; ++t) {
    Matrix next = mat_add(mat_mul(a, x), b);
    if (opts.on_iterate) opts.on_iterate(t, next);
    moving.reset();
    for (std::size_t i = 0; i < x.size() && !moving; ++i) {
      if (!settled(s, x.data()[i], next.data()[i], opts.tolerance)) moving = i / x.cols();
    }
    if (!moving) return {std::move(next), t, true};
    x = std::move(next);
  }
  throw not_settling(cap, moving);
}

BellmanSolution solve_bellman_gauss_seidel(const Matrix& a, const Matrix& b,
                                           const SolverOptions& opts) {
  check_system(a, b);
  const auto& s = a.semiring();
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  const std::size_t cap = iteration_cap(a, opts);
  std::vector<Element> x(b.data().begin(), b.data().end());
  if (opts.on_iterate) opts.on_iterate(0, b);

  std::optional<std::size_t> moving;
  for (std::size_t t = 1; t <= cap; ++t) {
    moving.reset();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        Element acc = s.zero();
        for (std::size_t k = 0; k < n; ++k) acc = s.add(acc, s.mul(a(i, k), x[k * m + j]));
        acc = s.add(acc, b(i, j));
        if (!moving && !settled(s, x[i * m + j], acc, opts.tolerance)) moving = i;
        x[i * m + j] = acc;
      }
    }
    if (opts.on_iterate || !moving) {
      Matrix current(s, n, m, x);
      if (opts.on_iterate) opts.on_iterate(t, current);
      if (!moving) return {std::move(current), t, true};
    }
  }
  throw not_settling(cap, moving);
}

Semiring semiring_for(PathProblem p) {
  return p == PathProblem::ShortestPath ? Semiring::min_plus() : Semiring::max_min();
}

PathResult solve_path_problem(const Graph& g, PathProblem problem,
                              const std::optional<std::string>& source,
                              const std::optional<std::string>& target) {
  const Semiring s = semiring_for(problem);
  PathResult result{s, g.nodes(), std::nullopt, {}};

  const auto located = [&](const NonStabilizing& e) {
    const std::string node = e.index() ? g.nodes().at(*e.index()) : std::string{};
    const std::string what = problem == PathProblem::ShortestPath
                                 ? "negative cycle reaches node '" + node + "'"
                                 : "closure does not stabilize at node '" + node + "'";
    return NonStabilizing(what, e.index(), node);
  };

  if (!source) {
    if (target) throw UnknownNode("a target needs a source node");
    const Matrix a = lower_graph(g, s, problem == PathProblem::TransitiveClosure);
    try {
      result.closure = closure_gauss_jordan(a);
    } catch (const NonStabilizing& e) {
      throw located(e);
    }
    return result;
  }

  const std::size_t src = g.index_of(*source);
  const std::size_t first = target ? g.index_of(*target) : 0;
  const std::size_t last = target ? first + 1 : g.size();
  const Matrix a = lower_graph(g, s, problem == PathProblem::TransitiveClosure);

  // Row problem d = d A (+) e_s, i.e. X = A^T X (+) e_s for commutative (.).
  Matrix rhs(s, g.size(), 1);
  rhs.set(src, 0, s.one());
  BellmanSolution sol{rhs, 0, false};
  try {
    sol = solve_bellman_gauss_seidel(a.transpose(), rhs);
  } catch (const NonStabilizing& e) {
    throw located(e);
  }
  for (std::size_t j = first; j < last; ++j) {
    result.values.emplace_back(g.nodes()[j], sol.x(j, 0));
  }
  return result;
}

}  // namespace idem
