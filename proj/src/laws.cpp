#include "idem/laws.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

namespace idem {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double random_scalar(Kind base, double zero, double one, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 15);
  std::uniform_real_distribution<double> real(-10.0, 10.0);
  switch (pick(rng)) {
    case 0:
      return zero;
    case 1:
      return one;
    case 2:
      if (base == Kind::MaxMin) return kInf;
      break;
    default:
      break;
  }
  return real(rng);
}

std::string show(const Element& e) {
  std::ostringstream os;
  os.precision(17);
  if (e.lo == e.hi) {
    os << e.lo;
  } else {
    os << '[' << e.lo << ':' << e.hi << ']';
  }
  return os.str();
}

}  // namespace

Element random_element(const Semiring& s, std::mt19937_64& rng) {
  const Element zero = s.zero();
  const Element one = s.one();
  if (!s.is_interval()) return s.embed(random_scalar(s.kind(), zero.lo, one.lo, rng));

  const Kind base = s.kind() == Kind::IntervalMaxPlus ? Kind::MaxPlus : Kind::MinPlus;
  std::uniform_int_distribution<int> pick(0, 15);
  switch (pick(rng)) {
    case 0:
      return zero;
    case 1:
      return one;
    default:
      break;
  }
  double a = random_scalar(base, zero.lo, one.lo, rng);
  double b = random_scalar(base, zero.lo, one.lo, rng);
  // lo is the smaller endpoint in the base order (numeric order reverses for min-plus).
  if ((base == Kind::MaxPlus) == (a > b)) std::swap(a, b);
  return {a, b};
}

std::vector<LawResult> check_laws(const Semiring& s, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Element zero = s.zero();
  const Element one = s.one();

  using Law = std::function<bool(const Element&, const Element&, const Element&)>;
  struct Entry {
    std::string name;
    bool applies;
    Law holds;
  };

  const auto eq = [&s](const Element& a, const Element& b) { return s.equal(a, b); };
  const std::vector<Entry> laws = {
      {"add-associative", true,
       [&](auto& x, auto& y, auto& z) {
         return eq(s.add(x, s.add(y, z)), s.add(s.add(x, y), z));
       }},
      {"mul-associative", true,
       [&](auto& x, auto& y, auto& z) {
         return eq(s.mul(x, s.mul(y, z)), s.mul(s.mul(x, y), z));
       }},
      {"add-commutative", true, [&](auto& x, auto& y, auto&) { return eq(s.add(x, y), s.add(y, x)); }},
      {"add-idempotent", s.idempotent(), [&](auto& x, auto&, auto&) { return eq(s.add(x, x), x); }},
      {"left-distributive", true,
       [&](auto& x, auto& y, auto& z) {
         return eq(s.mul(x, s.add(y, z)), s.add(s.mul(x, y), s.mul(x, z)));
       }},
      {"right-distributive", true,
       [&](auto& x, auto& y, auto& z) {
         return eq(s.mul(s.add(x, y), z), s.add(s.mul(x, z), s.mul(y, z)));
       }},
      {"zero-neutral", true,
       [&](auto& x, auto&, auto&) { return eq(s.add(zero, x), x) && eq(s.add(x, zero), x); }},
      {"one-neutral", true,
       [&](auto& x, auto&, auto&) { return eq(s.mul(one, x), x) && eq(s.mul(x, one), x); }},
      {"zero-absorbing", true,
       [&](auto& x, auto&, auto&) { return s.mul(zero, x) == zero && s.mul(x, zero) == zero; }},
      {"zero-least", s.idempotent(), [&](auto& x, auto&, auto&) { return s.leq(zero, x); }},
      {"order-consistent", s.idempotent(),
       [&](auto& x, auto& y, auto& z) {
         const Element up = s.add(x, y);  // x <= x (+) y always
         if (!s.leq(x, up)) return false;
         return s.leq(s.add(x, z), s.add(up, z)) && s.leq(s.mul(x, z), s.mul(up, z)) &&
                s.leq(s.mul(z, x), s.mul(z, up));
       }},
      {"star-fixed-point", true,
       [&](auto& x, auto&, auto&) {
         Element st;
         try {
           st = s.star(x);
         } catch (const StarUndefined&) {
           return true;
         }
         return eq(st, s.add(one, s.mul(x, st)));
       }},
  };

  std::vector<LawResult> results;
  results.reserve(laws.size());
  for (const auto& law : laws) results.push_back({law.name, law.applies, 0, {}});

  for (std::size_t n = 0; n < samples; ++n) {
    const Element x = random_element(s, rng);
    const Element y = random_element(s, rng);
    const Element z = random_element(s, rng);
    for (std::size_t i = 0; i < laws.size(); ++i) {
      if (!laws[i].applies || laws[i].holds(x, y, z)) continue;
      auto& r = results[i];
      if (r.failures++ == 0) r.counterexample = show(x) + ", " + show(y) + ", " + show(z);
    }
  }
  return results;
}

}  // namespace idem
