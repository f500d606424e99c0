#include "idem/semiring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace idem {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kAbsTol = 1e-12;
constexpr double kRelTol = 1e-9;

Kind base_of(Kind k) {
  switch (k) {
    case Kind::IntervalMaxPlus:
      return Kind::MaxPlus;
    case Kind::IntervalMinPlus:
      return Kind::MinPlus;
    default:
      return k;
  }
}

double scalar_zero(Kind k) {
  switch (k) {
    case Kind::MaxPlus:
    case Kind::MaxMin:
    case Kind::Deformed:
      return -kInf;
    case Kind::MinPlus:
      return kInf;
    case Kind::Field:
      return 0.0;
    default:
      break;
  }
  return 0.0;
}

double scalar_one(Kind k) {
  switch (k) {
    case Kind::MaxMin:
      return kInf;
    case Kind::Field:
      return 1.0;
    default:
      return 0.0;
  }
}

bool scalar_contains(Kind k, double v) {
  if (std::isnan(v)) return false;
  switch (k) {
    case Kind::MaxPlus:
    case Kind::Deformed:
      return v != kInf;
    case Kind::MinPlus:
      return v != -kInf;
    case Kind::MaxMin:
      return true;
    case Kind::Field:
      return std::isfinite(v);
    default:
      return false;
  }
}

double scalar_add(Kind k, double a, double b, double h) {
  switch (k) {
    case Kind::MaxPlus:
    case Kind::MaxMin:
      return std::max(a, b);
    case Kind::MinPlus:
      return std::min(a, b);
    case Kind::Field:
      return a + b;
    case Kind::Deformed:
      return deformed_add(a, b, h);
    default:
      return 0.0;
  }
}

double scalar_mul(Kind k, double a, double b) {
  const double z = scalar_zero(k);
  if (a == z || b == z) return z;
  switch (k) {
    case Kind::MaxPlus:
    case Kind::MinPlus:
    case Kind::Deformed:
      return a + b;
    case Kind::MaxMin:
      return std::min(a, b);
    case Kind::Field:
      return a * b;
    default:
      return 0.0;
  }
}

// Standard order on a scalar idempotent base.
bool scalar_leq(Kind k, double a, double b) {
  return approx_equal(scalar_add(k, a, b, 0.0), b);
}

double scalar_star(Kind k, double a, double h) {
  switch (k) {
    case Kind::Field:
      if (a == 1.0) throw StarUndefined("field star undefined at a = 1");
      return 1.0 / (1.0 - a);
    case Kind::Deformed: {
      // Image of 1/(1-u) under w = h ln u; defined for u = e^{w/h} < 1.
      if (a == -kInf) return 0.0;
      if (!(a < 0.0)) throw StarUndefined("deformed star requires a < 0");
      return -h * std::log(-std::expm1(a / h));
    }
    default: {
      const double one = scalar_one(k);
      if (!approx_equal(scalar_add(k, one, a, h), one)) {
        std::ostringstream os;
        os << "star undefined: 1 (+) a != 1 for a = " << a;
        throw StarUndefined(os.str());
      }
      return one;
    }
  }
}

}  // namespace

bool approx_equal(double a, double b) {
  if (a == b) return true;
  if (std::isinf(a) || std::isinf(b) || std::isnan(a) || std::isnan(b)) return false;
  const double diff = std::fabs(a - b);
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return diff <= std::max(kAbsTol, kRelTol * scale);
}

Semiring Semiring::deformed(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw DomainError("deformed semiring requires finite h > 0");
  }
  return Semiring(Kind::Deformed, h);
}

Semiring Semiring::parse(std::string_view name) {
  if (name == "max-plus") return max_plus();
  if (name == "min-plus") return min_plus();
  if (name == "max-min") return max_min();
  if (name == "field") return field();
  if (name == "interval-max-plus") return interval_max_plus();
  if (name == "interval-min-plus") return interval_min_plus();
  constexpr std::string_view prefix = "deformed:h=";
  if (name.starts_with(prefix)) {
    const auto text = name.substr(prefix.size());
    double h = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), h);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
      throw DomainError("invalid deformation parameter in '" + std::string(name) + "'");
    }
    return deformed(h);
  }
  throw DomainError("unknown semiring '" + std::string(name) + "'");
}

bool Semiring::has_division() const {
  switch (kind_) {
    case Kind::MaxPlus:
    case Kind::MinPlus:
    case Kind::Field:
    case Kind::Deformed:
      return true;
    default:
      return false;
  }
}

std::string Semiring::name() const {
  switch (kind_) {
    case Kind::MaxPlus:
      return "max-plus";
    case Kind::MinPlus:
      return "min-plus";
    case Kind::MaxMin:
      return "max-min";
    case Kind::Field:
      return "field";
    case Kind::IntervalMaxPlus:
      return "interval-max-plus";
    case Kind::IntervalMinPlus:
      return "interval-min-plus";
    case Kind::Deformed: {
      std::ostringstream os;
      os.precision(17);
      os << "deformed:h=" << h_;
      return os.str();
    }
  }
  return {};
}

Element Semiring::zero() const { return embed(scalar_zero(base_of(kind_))); }

Element Semiring::one() const { return embed(scalar_one(base_of(kind_))); }

Element Semiring::add(const Element& a, const Element& b) const {
  require(a);
  require(b);
  const Kind k = base_of(kind_);
  if (!is_interval()) return embed(scalar_add(k, a.lo, b.lo, h_));
  return {scalar_add(k, a.lo, b.lo, h_), scalar_add(k, a.hi, b.hi, h_)};
}

Element Semiring::mul(const Element& a, const Element& b) const {
  require(a);
  require(b);
  const Kind k = base_of(kind_);
  if (!is_interval()) return embed(scalar_mul(k, a.lo, b.lo));
  return {scalar_mul(k, a.lo, b.lo), scalar_mul(k, a.hi, b.hi)};
}

bool Semiring::leq(const Element& a, const Element& b) const {
  if (!idempotent()) {
    throw UnsupportedOperation("standard order needs an idempotent semiring, got " + name());
  }
  require(a);
  require(b);
  const Kind k = base_of(kind_);
  return scalar_leq(k, a.lo, b.lo) && scalar_leq(k, a.hi, b.hi);
}

Element Semiring::star(const Element& a) const {
  require(a);
  const Kind k = base_of(kind_);
  if (!is_interval()) return embed(scalar_star(k, a.lo, h_));
  return {scalar_star(k, a.lo, h_), scalar_star(k, a.hi, h_)};
}

bool Semiring::contains(const Element& a) const {
  const Kind k = base_of(kind_);
  if (!is_interval()) return a.lo == a.hi && scalar_contains(k, a.lo);
  if (!scalar_contains(k, a.lo) || !scalar_contains(k, a.hi)) return false;
  return k == Kind::MaxPlus ? a.lo <= a.hi : a.lo >= a.hi;
}

void Semiring::require(const Element& a) const {
  if (contains(a)) return;
  std::ostringstream os;
  os << "value ";
  if (is_interval()) {
    os << '[' << a.lo << ", " << a.hi << ']';
  } else if (a.lo == a.hi) {
    os << a.lo;
  } else {
    os << "(lo " << a.lo << ", hi " << a.hi << ')';
  }
  os << " is not in the carrier of " << name();
  throw DomainError(os.str());
}

bool Semiring::equal(const Element& a, const Element& b) const {
  return approx_equal(a.lo, b.lo) && approx_equal(a.hi, b.hi);
}

double dequantize(double u, double h) {
  if (!(h > 0.0)) throw DomainError("dequantize requires h > 0");
  if (std::isnan(u) || u < 0.0) throw DomainError("dequantize requires u >= 0");
  if (u == 0.0) return -kInf;
  return h * std::log(u);
}

double deformed_add(double w1, double w2, double h) {
  if (!(h > 0.0)) throw DomainError("deformed addition requires h > 0");
  if (std::isnan(w1) || std::isnan(w2) || w1 == kInf || w2 == kInf) {
    throw DomainError("deformed addition takes finite values or -inf");
  }
  if (w1 == -kInf) return w2;
  if (w2 == -kInf) return w1;
  const double top = std::max(w1, w2);
  return top + h * std::log1p(std::exp(-std::fabs(w1 - w2) / h));
}

ClassicalInterval classical_sum(const ClassicalInterval& a, const ClassicalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

ClassicalInterval classical_product(const ClassicalInterval& a, const ClassicalInterval& b) {
  const double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  const auto [lo, hi] = std::minmax_element(std::begin(p), std::end(p));
  return {*lo, *hi};
}

ClassicalIntervalResult classical_interval_ops(const ClassicalInterval& a,
                                               const ClassicalInterval& b) {
  return {classical_sum(a, b), classical_product(a, b)};
}

}  // namespace idem
