#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idem/graph.hpp"
#include "idem/matrix.hpp"

namespace idem {

/// A*, computed by Gauss-Jordan style elimination with pivots taken in
/// ascending order: a_ij <- a_ij (+) a_ik (.) a_kk* (.) a_kj, then (+) 1.
/// Over the field this is (1 - A)^-1. Throws NonStabilizing carrying the
/// pivot index when a pivot star is undefined.
Matrix closure_gauss_jordan(const Matrix& a);

/// (1 - A)^-1 over the field, via the closure routine.
Matrix field_inverse_via_closure(const Matrix& a);

/// M^-1 = closure(1 - M) over the field.
Matrix field_inverse(const Matrix& m);

struct SolverOptions {
  /// Max-norm change below which non-idempotent iterations count as converged.
  double tolerance = 1e-10;
  /// 0 selects the default: 10 n for idempotent semirings, max(10 n, 1000) otherwise.
  std::size_t max_iterations = 0;
  /// Called with (t, X_t) for t = 0, 1, ... including the final iterate.
  std::function<void(std::size_t, const Matrix&)> on_iterate;
};

struct BellmanSolution {
  Matrix x;
  std::size_t iterations = 0;
  bool stabilized = false;
};

/// X_{t+1} = A X_t (+) B from X_0 = B.
BellmanSolution solve_bellman_jacobi(const Matrix& a, const Matrix& b,
                                     const SolverOptions& opts = {});

/// Same fixed point, but rows of X are updated in place during each sweep.
BellmanSolution solve_bellman_gauss_seidel(const Matrix& a, const Matrix& b,
                                           const SolverOptions& opts = {});

enum class PathProblem { ShortestPath, WidestPath, TransitiveClosure };

/// min-plus, max-min, max-min respectively.
Semiring semiring_for(PathProblem p);

struct PathResult {
  Semiring semiring;
  std::vector<std::string> nodes;
  /// Full closure when no source was given.
  std::optional<Matrix> closure;
  /// Per-node values from the source (only the target when one was given).
  std::vector<std::pair<std::string, Element>> values;
};

/// Lowers `g` into the problem's semiring and solves it. With a source the
/// row problem d = d A (+) e_s is solved by Gauss-Seidel; without one the
/// closure A* is returned. NonStabilizing errors name the offending node.
PathResult solve_path_problem(const Graph& g, PathProblem problem,
                              const std::optional<std::string>& source = std::nullopt,
                              const std::optional<std::string>& target = std::nullopt);

}  // namespace idem
