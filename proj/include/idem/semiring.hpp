#pragma once

#include <string>
#include <string_view>

#include "idem/errors.hpp"

namespace idem {

/// A value of some semiring carrier. Scalar kinds keep lo == hi; interval kinds
/// store the two endpoints with lo being the smaller one in the base semiring's
/// standard order.
struct Element {
  double lo = 0.0;
  double hi = 0.0;

  constexpr Element() = default;
  constexpr explicit Element(double v) : lo(v), hi(v) {}
  constexpr Element(double l, double h) : lo(l), hi(h) {}

  constexpr double value() const { return lo; }

  friend constexpr bool operator==(const Element&, const Element&) = default;
};

enum class Kind {
  MaxPlus,
  MinPlus,
  MaxMin,
  Field,
  Deformed,
  IntervalMaxPlus,
  IntervalMinPlus,
};

/// Equality policy used throughout: exact for infinities, otherwise absolute
/// 1e-12 or relative 1e-9, whichever is looser.
bool approx_equal(double a, double b);

/// Describes one algebra and implements its operations. Cheap to copy.
class Semiring {
 public:
  static Semiring max_plus() { return Semiring(Kind::MaxPlus); }
  static Semiring min_plus() { return Semiring(Kind::MinPlus); }
  static Semiring max_min() { return Semiring(Kind::MaxMin); }
  static Semiring field() { return Semiring(Kind::Field); }
  static Semiring interval_max_plus() { return Semiring(Kind::IntervalMaxPlus); }
  static Semiring interval_min_plus() { return Semiring(Kind::IntervalMinPlus); }
  /// The h-deformation of (R+, +, *) carried over by w = h ln u. Requires h > 0.
  static Semiring deformed(double h);

  /// Parses the names `max-plus`, `min-plus`, `max-min`, `field`,
  /// `deformed:h=<float>`, `interval-max-plus`, `interval-min-plus`.
  static Semiring parse(std::string_view name);

  Kind kind() const { return kind_; }
  double h() const { return h_; }
  bool idempotent() const { return kind_ != Kind::Field && kind_ != Kind::Deformed; }
  bool has_division() const;
  bool is_interval() const {
    return kind_ == Kind::IntervalMaxPlus || kind_ == Kind::IntervalMinPlus;
  }
  std::string name() const;

  Element zero() const;
  Element one() const;

  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;

  /// Standard partial order: a <= b iff a (+) b == b. Idempotent kinds only.
  bool leq(const Element& a, const Element& b) const;

  /// Scalar closure 1 (+) a (+) a^2 (+) ...; throws StarUndefined when the
  /// series leaves the carrier.
  Element star(const Element& a) const;

  bool contains(const Element& a) const;
  /// Throws DomainError when `a` is outside the carrier.
  void require(const Element& a) const;

  /// Equality under the tolerance policy, endpoint-wise for intervals.
  bool equal(const Element& a, const Element& b) const;

  /// Lifts a plain real (a graph weight, a grid step) into this carrier.
  Element embed(double v) const { return Element(v, v); }

  friend bool operator==(const Semiring& a, const Semiring& b) {
    return a.kind_ == b.kind_ && a.h_ == b.h_;
  }

 private:
  explicit Semiring(Kind k, double h = 0.0) : kind_(k), h_(h) {}

  Kind kind_;
  double h_;
};

struct Constants {
  Element zero;
  Element one;
};

inline Constants constants(const Semiring& s) { return {s.zero(), s.one()}; }

/// w = h ln u, with u = 0 mapped to -inf.
double dequantize(double u, double h);

/// h ln(e^{w1/h} + e^{w2/h}) in the overflow-safe shifted form.
double deformed_add(double w1, double w2, double h);

/// Traditional interval arithmetic, kept only to contrast with the
/// idempotent interval kinds (it is not distributive).
struct ClassicalInterval {
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const ClassicalInterval&, const ClassicalInterval&) = default;
};

struct ClassicalIntervalResult {
  ClassicalInterval sum;
  ClassicalInterval product;
};

ClassicalInterval classical_sum(const ClassicalInterval& a, const ClassicalInterval& b);
ClassicalInterval classical_product(const ClassicalInterval& a, const ClassicalInterval& b);
ClassicalIntervalResult classical_interval_ops(const ClassicalInterval& a,
                                               const ClassicalInterval& b);

}  // namespace idem
