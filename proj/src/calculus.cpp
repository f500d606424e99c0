#include "idem/calculus.hpp"

#include <cmath>
#include <string>

namespace idem {

namespace {

void require_increasing(const std::vector<double>& xs, const char* what) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i])) throw DomainError(std::string(what) + " has a non-finite point");
    if (i && !(xs[i] > xs[i - 1])) {
      throw DomainError(std::string(what) + " is not strictly increasing at index " +
                        std::to_string(i));
    }
  }
}

void same_grid(const SampledFunction& f, const SampledFunction& g) {
  if (!(f.semiring() == g.semiring())) {
    throw SemiringMismatch(f.semiring().name() + " vs " + g.semiring().name());
  }
  if (f.xs() != g.xs()) throw GridMismatch("functions are sampled on different grids");
}

std::vector<Element> embed_all(const Semiring& s, const std::vector<double>& values) {
  std::vector<Element> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(s.embed(v));
  return out;
}

}  // namespace

SampledFunction::SampledFunction(Semiring s, std::vector<double> xs, std::vector<Element> values)
    : semiring_(s), xs_(std::move(xs)), values_(std::move(values)) {
  if (xs_.size() != values_.size()) {
    throw DimensionMismatch("grid has " + std::to_string(xs_.size()) + " points but " +
                            std::to_string(values_.size()) + " values");
  }
  require_increasing(xs_, "grid");
  for (const auto& v : values_) semiring_.require(v);
}

SampledFunction::SampledFunction(Semiring s, std::vector<double> xs,
                                 const std::vector<double>& values)
    : SampledFunction(s, std::move(xs), embed_all(s, values)) {}

SampledFunction fn_add(const SampledFunction& f, const SampledFunction& g) {
  same_grid(f, g);
  const auto& s = f.semiring();
  std::vector<Element> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s.add(f.values()[i], g.values()[i]);
  return SampledFunction(s, f.xs(), std::move(out));
}

SampledFunction fn_scale(const Element& c, const SampledFunction& f) {
  const auto& s = f.semiring();
  std::vector<Element> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s.mul(c, f.values()[i]);
  return SampledFunction(s, f.xs(), std::move(out));
}

Kernel::Kernel(std::vector<double> xs, std::vector<double> ys, Matrix k)
    : xs_(std::move(xs)), ys_(std::move(ys)), k_(std::move(k)) {
  if (k_.rows() != xs_.size() || k_.cols() != ys_.size()) {
    throw DimensionMismatch("kernel matrix does not match its grids");
  }
  require_increasing(xs_, "kernel x grid");
  require_increasing(ys_, "kernel y grid");
}

Element riemann_universal(const SampledFunction& f) {
  if (f.size() < 2) throw DomainError("riemann sum needs at least 2 grid points");
  const auto& s = f.semiring();
  Element acc = s.zero();
  for (std::size_t i = 1; i < f.size(); ++i) {
    const Element step = s.embed(f.xs()[i] - f.xs()[i - 1]);
    acc = s.add(acc, s.mul(f.values()[i], step));
  }
  return acc;
}

Element trapezoid(const SampledFunction& f) {
  if (f.semiring().kind() != Kind::Field) {
    throw UnsupportedOperation("trapezoid rule is only defined over the field, got " +
                               f.semiring().name());
  }
  if (f.size() < 2) throw DomainError("trapezoid rule needs at least 2 grid points");
  double acc = 0.0;
  for (std::size_t i = 1; i < f.size(); ++i) {
    acc += (f.values()[i - 1].value() + f.values()[i].value()) * (f.xs()[i] - f.xs()[i - 1]) / 2;
  }
  return Element(acc);
}

Element idempotent_integral(const SampledFunction& f) {
  const auto& s = f.semiring();
  if (!s.idempotent()) {
    throw UnsupportedOperation("idempotent integral needs an idempotent semiring, got " +
                               s.name());
  }
  Element acc = s.zero();
  for (const auto& v : f.values()) acc = s.add(acc, v);
  return acc;
}

Element measure(const SampledFunction& f, std::span<const std::size_t> indices) {
  const auto& s = f.semiring();
  Element acc = s.zero();
  for (std::size_t i : indices) {
    if (i >= f.size()) {
      throw DomainError("measure index " + std::to_string(i) + " out of range for " +
                        std::to_string(f.size()) + " samples");
    }
    acc = s.add(acc, f.values()[i]);
  }
  return acc;
}

Element scalar_product_fn(const SampledFunction& f, const SampledFunction& g) {
  same_grid(f, g);
  const auto& s = f.semiring();
  Element acc = s.zero();
  for (std::size_t i = 0; i < f.size(); ++i) acc = s.add(acc, s.mul(f.values()[i], g.values()[i]));
  return acc;
}

SampledFunction integral_operator(const Kernel& k, const SampledFunction& f) {
  if (!(k.matrix().semiring() == f.semiring())) {
    throw SemiringMismatch(k.matrix().semiring().name() + " vs " + f.semiring().name());
  }
  if (k.ys() != f.xs()) throw GridMismatch("function grid differs from the kernel's y grid");
  const Vector out = mat_vec(k.matrix(), column_vector(f.semiring(), f.values()));
  return SampledFunction(f.semiring(), k.xs(),
                         std::vector<Element>(out.data().begin(), out.data().end()));
}

SampledFunction legendre_transform(const SampledFunction& f, std::span<const double> xi_grid) {
  const auto& s = f.semiring();
  if (s.kind() != Kind::MaxPlus) {
    throw SemiringMismatch("legendre transform is defined over max-plus, got " + s.name());
  }
  if (f.empty() || xi_grid.empty()) throw DomainError("legendre transform needs nonempty grids");
  std::vector<double> xis(xi_grid.begin(), xi_grid.end());
  std::vector<Element> out;
  out.reserve(xis.size());
  for (double xi : xis) {
    Element acc = s.zero();
    for (std::size_t i = 0; i < f.size(); ++i) {
      acc = s.add(acc, s.mul(s.embed(xi * f.xs()[i]), f.values()[i]));
    }
    out.push_back(acc);
  }
  return SampledFunction(s, std::move(xis), std::move(out));
}

}  // namespace idem
