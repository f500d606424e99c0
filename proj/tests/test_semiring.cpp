#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "idem/laws.hpp"
#include "idem/semiring.hpp"

using namespace idem;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

std::vector<Semiring> all_semirings() {
  return {Semiring::max_plus(),          Semiring::min_plus(),          Semiring::max_min(),
          Semiring::field(),             Semiring::deformed(0.5),       Semiring::interval_max_plus(),
          Semiring::interval_min_plus()};
}

}  // namespace

TEST_CASE("constants of each semiring") {
  CHECK(constants(Semiring::max_plus()).zero == Element(-inf));
  CHECK(constants(Semiring::max_plus()).one == Element(0.0));
  CHECK(constants(Semiring::min_plus()).zero == Element(inf));
  CHECK(constants(Semiring::min_plus()).one == Element(0.0));
  CHECK(constants(Semiring::max_min()).zero == Element(-inf));
  CHECK(constants(Semiring::max_min()).one == Element(inf));
  CHECK(constants(Semiring::field()).zero == Element(0.0));
  CHECK(constants(Semiring::field()).one == Element(1.0));
  for (const auto& s : all_semirings()) CHECK_FALSE(s.zero() == s.one());
}

TEST_CASE("descriptor flags") {
  for (const auto& s : all_semirings()) {
    const bool expect = s.kind() != Kind::Field && s.kind() != Kind::Deformed;
    CHECK(s.idempotent() == expect);
  }
  CHECK(Semiring::max_plus().has_division());
  CHECK(Semiring::min_plus().has_division());
  CHECK_FALSE(Semiring::max_min().has_division());
  CHECK_THROWS_AS(Semiring::deformed(0.0), DomainError);
  CHECK_THROWS_AS(Semiring::deformed(-1.0), DomainError);
}

TEST_CASE("semiring names round trip through parse") {
  for (const auto& s : all_semirings()) CHECK(Semiring::parse(s.name()) == s);
  CHECK(Semiring::parse("deformed:h=0.01").h() == 0.01);
  CHECK_THROWS_AS(Semiring::parse("tropical"), DomainError);
  CHECK_THROWS_AS(Semiring::parse("deformed:h=abc"), DomainError);
  CHECK_THROWS_AS(Semiring::parse("deformed:h=-2"), DomainError);
}

TEST_CASE("add examples") {
  const auto mp = Semiring::max_plus();
  CHECK(mp.add(Element(3), Element(5)) == Element(5));
  CHECK(mp.add(Element(7.5), Element(-inf)) == Element(7.5));
  const auto imp = Semiring::interval_max_plus();
  CHECK(imp.add({1, 3}, {2, 2.5}) == Element(2, 3));
}

TEST_CASE("mul examples") {
  const auto mp = Semiring::max_plus();
  CHECK(mp.mul(Element(3), Element(5)) == Element(8));
  CHECK(mp.mul(Element(-inf), Element(7)) == Element(-inf));
  const auto imp = Semiring::interval_max_plus();
  CHECK(imp.mul({1, 3}, {2, 2.5}) == Element(3, 5.5));
  // absorbing zero is applied before arithmetic
  const auto mn = Semiring::min_plus();
  CHECK(mn.mul(Element(inf), Element(-3)) == Element(inf));
}

TEST_CASE("carrier violations raise DomainError") {
  CHECK_THROWS_AS(Semiring::max_plus().add(Element(inf), Element(1)), DomainError);
  CHECK_THROWS_AS(Semiring::min_plus().mul(Element(-inf), Element(1)), DomainError);
  CHECK_THROWS_AS(Semiring::field().add(Element(inf), Element(1)), DomainError);
  CHECK_THROWS_AS(Semiring::max_plus().add(Element(std::nan("")), Element(1)), DomainError);
  // interval endpoints must be ordered by the base order
  CHECK_THROWS_AS(Semiring::interval_max_plus().add({3, 1}, {0, 0}), DomainError);
  CHECK_NOTHROW(Semiring::interval_min_plus().add({3, 1}, {0, 0}));
  CHECK_THROWS_AS(Semiring::interval_min_plus().add({1, 3}, {0, 0}), DomainError);
}

TEST_CASE("standard order") {
  CHECK(Semiring::max_plus().leq(Element(2), Element(5)));
  CHECK_FALSE(Semiring::max_plus().leq(Element(5), Element(2)));
  CHECK(Semiring::min_plus().leq(Element(5), Element(2)));
  CHECK_THROWS_AS(Semiring::field().leq(Element(1), Element(2)), UnsupportedOperation);
  CHECK_THROWS_AS(Semiring::deformed(1).leq(Element(1), Element(2)), UnsupportedOperation);

  std::mt19937_64 rng(7);
  for (const auto& s : all_semirings()) {
    if (!s.idempotent()) continue;
    for (int i = 0; i < 200; ++i) CHECK(s.leq(s.zero(), random_element(s, rng)));
  }
}

TEST_CASE("star") {
  CHECK(Semiring::min_plus().star(Element(2)) == Element(0));
  CHECK_THROWS_AS(Semiring::min_plus().star(Element(-1)), StarUndefined);
  CHECK(Semiring::field().star(Element(0.5)) == Element(2));
  CHECK_THROWS_AS(Semiring::field().star(Element(1)), StarUndefined);
  CHECK(Semiring::max_plus().star(Element(-3)) == Element(0));
  CHECK_THROWS_AS(Semiring::max_plus().star(Element(0.25)), StarUndefined);
  CHECK(Semiring::max_min().star(Element(4)) == Element(inf));
  CHECK(Semiring::min_plus().star(Element(inf)) == Element(0));
  // deformed star is the image of 1/(1-u): u = 1/2 at h = 1 gives ln 2
  const auto d = Semiring::deformed(1.0);
  CHECK(d.star(Element(std::log(0.5))).value() == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(d.star(Element(0.0)), StarUndefined);
}

TEST_CASE("star fixed point wherever defined") {
  std::mt19937_64 rng(11);
  for (const auto& s : all_semirings()) {
    for (int i = 0; i < 500; ++i) {
      const Element a = random_element(s, rng);
      Element st;
      try {
        st = s.star(a);
      } catch (const StarUndefined&) {
        continue;
      }
      CHECK(s.equal(st, s.add(s.one(), s.mul(a, st))));
    }
  }
}

TEST_CASE("dequantize") {
  CHECK(dequantize(0.0, 0.3) == -inf);
  CHECK(dequantize(1.0, 0.3) == 0.0);
  CHECK(dequantize(std::exp(2.0), 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(dequantize(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(dequantize(1.0, 0.0), DomainError);
}

TEST_CASE("deformed addition") {
  CHECK(deformed_add(0, 0, 1.0) == doctest::Approx(0.6931471805599453).epsilon(1e-15));
  CHECK(deformed_add(0, 0, 0.01) == doctest::Approx(0.01 * std::log(2.0)).epsilon(1e-15));
  const double w = deformed_add(3, 5, 0.01);
  CHECK(w >= 5.0);
  CHECK(w <= 5.0 + 0.01 * std::log(2.0));
  CHECK(deformed_add(4.5, -inf, 0.1) == 4.5);
  CHECK(deformed_add(-inf, -inf, 0.1) == -inf);
  // the literal formula overflows here; the shifted form does not
  CHECK(deformed_add(1000, 1000, 0.01) == doctest::Approx(1000 + 0.01 * std::log(2.0)));
  CHECK_THROWS_AS(deformed_add(inf, 0, 1.0), DomainError);
}

TEST_CASE("dequantization is a homomorphism") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(1e-6, 1e6);
  for (double h : {1.0, 0.1, 0.01}) {
    for (int i = 0; i < 300; ++i) {
      const double u1 = u(rng);
      const double u2 = u(rng);
      CHECK(approx_equal(dequantize(u1 * u2, h), dequantize(u1, h) + dequantize(u2, h)));
      CHECK(approx_equal(dequantize(u1 + u2, h),
                         deformed_add(dequantize(u1, h), dequantize(u2, h), h)));
    }
  }
}

TEST_CASE("deformation bound") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> w(-50, 50);
  for (double h : {2.0, 1.0, 0.1, 0.01, 1e-4}) {
    for (int i = 0; i < 500; ++i) {
      const double a = w(rng);
      const double b = w(rng);
      const double top = std::max(a, b);
      const double r = deformed_add(a, b, h);
      CHECK(top <= r);
      CHECK(r <= top + h * std::log(2.0));
    }
  }
}

TEST_CASE("classical interval ops") {
  const auto r = classical_interval_ops({1, 1}, {-1, -1});
  CHECK(r.sum == ClassicalInterval{0, 0});
  CHECK(classical_product({1, 2}, {0, 0}) == ClassicalInterval{0, 0});

  const ClassicalInterval x{1, 2}, y{1, 1}, z{-1, -1};
  const auto lhs = classical_product(x, classical_sum(y, z));
  const auto rhs = classical_sum(classical_product(x, y), classical_product(x, z));
  CHECK(lhs == ClassicalInterval{0, 0});
  CHECK(rhs == ClassicalInterval{-1, 1});
  // strict inclusion: lhs inside rhs, not equal
  CHECK(rhs.lo < lhs.lo);
  CHECK(lhs.hi < rhs.hi);
}

TEST_CASE("idempotent interval arithmetic is distributive exactly") {
  std::mt19937_64 rng(13);
  for (const auto& s : {Semiring::interval_max_plus(), Semiring::interval_min_plus()}) {
    for (int i = 0; i < 1000; ++i) {
      const Element x = random_element(s, rng);
      const Element y = random_element(s, rng);
      const Element z = random_element(s, rng);
      CHECK(s.mul(x, s.add(y, z)) == s.add(s.mul(x, y), s.mul(x, z)));
      CHECK(s.mul(s.add(x, y), z) == s.add(s.mul(x, z), s.mul(y, z)));
    }
  }
}

TEST_CASE("random elements stay in the carrier") {
  std::mt19937_64 rng(17);
  for (const auto& s : all_semirings()) {
    for (int i = 0; i < 500; ++i) CHECK(s.contains(random_element(s, rng)));
  }
}

TEST_CASE("law suite passes for every instance") {
  for (const auto& s : all_semirings()) {
    CAPTURE(s.name());
    for (const auto& r : check_laws(s, 1000, 42)) {
      CAPTURE(r.law);
      CAPTURE(r.counterexample);
      CHECK(r.ok());
      if (r.law == "add-idempotent" || r.law == "order-consistent") CHECK(r.checked == s.idempotent());
    }
  }
}

TEST_CASE("idempotency fails for the non-idempotent instances") {
  const auto f = Semiring::field();
  CHECK_FALSE(f.equal(f.add(Element(2), Element(2)), Element(2)));
  const auto d = Semiring::deformed(0.1);
  CHECK_FALSE(d.equal(d.add(Element(2), Element(2)), Element(2)));
}
