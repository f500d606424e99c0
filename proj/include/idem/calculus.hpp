#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "idem/matrix.hpp"

namespace idem {

/// Finite model of a map X -> S: values on a strictly increasing grid.
class SampledFunction {
 public:
  SampledFunction(Semiring s, std::vector<double> xs, std::vector<Element> values);
  SampledFunction(Semiring s, std::vector<double> xs, const std::vector<double>& values);

  const Semiring& semiring() const { return semiring_; }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<Element>& values() const { return values_; }
  std::size_t size() const { return xs_.size(); }
  bool empty() const { return xs_.empty(); }

 private:
  Semiring semiring_;
  std::vector<double> xs_;
  std::vector<Element> values_;
};

/// Pointwise (+) of two functions on the same grid.
SampledFunction fn_add(const SampledFunction& f, const SampledFunction& g);
/// c (.) f, pointwise.
SampledFunction fn_scale(const Element& c, const SampledFunction& f);

/// K(x, y) sampled on grids xs (rows) and ys (columns).
class Kernel {
 public:
  Kernel(std::vector<double> xs, std::vector<double> ys, Matrix k);

  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }
  const Matrix& matrix() const { return k_; }

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
  Matrix k_;
};

/// (+)_{i>=1} f(x_i) (.) D_i with D_i = x_i - x_{i-1} embedded in the carrier.
/// The rectangle rule over the field; tends to sup f over max-plus.
Element riemann_universal(const SampledFunction& f);

/// Trapezoid rule. Field only: its halving step has no idempotent counterpart.
Element trapezoid(const SampledFunction& f);

/// (+) of all sample values: the idempotent integral of the finite model.
/// Zero for an empty grid.
Element idempotent_integral(const SampledFunction& f);

/// m_f(B) = (+)_{i in B} f(x_i); zero for an empty index set.
Element measure(const SampledFunction& f, std::span<const std::size_t> indices);

/// <f, g> = (+)_i f(x_i) (.) g(x_i).
Element scalar_product_fn(const SampledFunction& f, const SampledFunction& g);

/// (K f)(x_i) = (+)_j K(i, j) (.) f(y_j).
SampledFunction integral_operator(const Kernel& k, const SampledFunction& f);

/// g(xi_k) = sup_i (xi_k x_i + f(x_i)) over max-plus, one full scan per xi.
SampledFunction legendre_transform(const SampledFunction& f, std::span<const double> xi_grid);

}  // namespace idem
