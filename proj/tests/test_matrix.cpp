#include <doctest.h>

#include <limits>
#include <random>

#include "idem/laws.hpp"
#include "idem/matrix.hpp"
#include "idem/solvers.hpp"
#include "support.hpp"

using namespace idem;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

Matrix random_matrix(const Semiring& s, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::vector<Element> data(r * c);
  for (auto& e : data) e = random_element(s, rng);
  return Matrix(s, r, c, std::move(data));
}

}  // namespace

TEST_CASE("matrix constants") {
  const auto mp = mat_constants(Semiring::max_plus(), 2);
  CHECK(mp.identity == Matrix::from_rows(Semiring::max_plus(), {{0, -inf}, {-inf, 0}}));
  CHECK(mat_constants(Semiring::min_plus(), 1).zero_matrix ==
        Matrix::from_rows(Semiring::min_plus(), {{inf}}));
  CHECK(mat_constants(Semiring::field(), 2).identity ==
        Matrix::from_rows(Semiring::field(), {{1, 0}, {0, 1}}));
}

TEST_CASE("construction validates shape and carrier") {
  CHECK_THROWS_AS(Matrix(Semiring::field(), 0, 2), DimensionMismatch);
  CHECK_THROWS_AS(Matrix(Semiring::field(), 2, 2, {Element(1)}), DimensionMismatch);
  CHECK_THROWS_AS(Matrix::from_rows(Semiring::max_plus(), {{inf}}), DomainError);
  CHECK_THROWS_AS(Matrix::from_rows(Semiring::field(), {{1, 2}, {3}}), DimensionMismatch);
  Matrix m(Semiring::min_plus(), 2, 2);
  CHECK_THROWS_AS(m.set(0, 0, Element(-inf)), DomainError);
  CHECK_THROWS_AS(m.set(2, 0, Element(1)), DimensionMismatch);
}

TEST_CASE("mat_add") {
  const auto s = Semiring::max_plus();
  const auto a = Matrix::from_rows(s, {{1, 2}, {3, 4}});
  const auto b = Matrix::from_rows(s, {{4, 3}, {2, 1}});
  CHECK(mat_add(a, b) == Matrix::from_rows(s, {{4, 3}, {3, 4}}));
  CHECK(mat_add(a, Matrix::zeros(s, 2, 2)) == a);
  CHECK(mat_add(a, a) == a);
  CHECK_THROWS_AS(mat_add(a, Matrix::zeros(s, 2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(mat_add(a, Matrix::zeros(Semiring::min_plus(), 2, 2)), SemiringMismatch);
}

TEST_CASE("mat_mul") {
  const auto mn = Semiring::min_plus();
  const auto a = Matrix::from_rows(mn, {{0, 2}, {inf, 0}});
  const auto b = Matrix::from_rows(mn, {{0, inf}, {3, 0}});
  CHECK(mat_mul(a, b) == Matrix::from_rows(mn, {{0, 2}, {3, 0}}));
  CHECK(mat_mul(a, Matrix::identity(mn, 2)) == a);

  const auto f = Semiring::field();
  CHECK(mat_mul(Matrix::from_rows(f, {{1, 2}, {3, 4}}), Matrix::from_rows(f, {{5, 6}, {7, 8}})) ==
        Matrix::from_rows(f, {{19, 22}, {43, 50}}));
  CHECK_THROWS_AS(mat_mul(a, Matrix::zeros(mn, 3, 3)), DimensionMismatch);
  CHECK_THROWS_AS(mat_mul(a, Matrix::zeros(f, 2, 2)), SemiringMismatch);
}

TEST_CASE("scalar product") {
  const auto mp = Semiring::max_plus();
  CHECK(scalar_product(column_vector(mp, {1.0, 2.0, 3.0}), column_vector(mp, {3.0, 2.0, 1.0})) ==
        Element(4));
  CHECK(scalar_product(column_vector(mp, {-inf, -inf}), column_vector(mp, {5.0, 1.0})) ==
        mp.zero());
  const auto f = Semiring::field();
  CHECK(scalar_product(column_vector(f, {1.0, 2.0}), column_vector(f, {3.0, 4.0})) == Element(11));
  CHECK_THROWS_AS(scalar_product(column_vector(f, std::vector<double>{1.0}), column_vector(f, {1.0, 2.0})),
                  DimensionMismatch);
}

TEST_CASE("scalar product agrees with row-times-column product") {
  std::mt19937_64 rng(21);
  for (const auto& s : {Semiring::max_plus(), Semiring::min_plus(), Semiring::max_min(),
                        Semiring::field(), Semiring::interval_min_plus()}) {
    for (int t = 0; t < 50; ++t) {
      const Matrix x = random_matrix(s, 1, 6, rng);
      const Matrix y = random_matrix(s, 6, 1, rng);
      CHECK(scalar_product(x, y) == mat_mul(x, y)(0, 0));
    }
  }
}

TEST_CASE("mat_vec") {
  const auto mp = Semiring::max_plus();
  const auto v = column_vector(mp, {5.0, 7.0});
  CHECK(mat_vec(Matrix::identity(mp, 2), v) == v);
  CHECK(mat_vec(Matrix::from_rows(mp, {{0, 1}, {-inf, 0}}), v) == column_vector(mp, {8.0, 7.0}));
  CHECK(mat_vec(Matrix::zeros(mp, 2, 2), v) == column_vector(mp, {-inf, -inf}));
}

TEST_CASE("truncated closure") {
  const auto mn = Semiring::min_plus();
  const auto a = Matrix::from_rows(mn, {{inf, 2}, {3, inf}});
  CHECK(closure_truncated(a, 0) == Matrix::identity(mn, 2));
  CHECK(closure_truncated(a, 2) == Matrix::from_rows(mn, {{0, 2}, {3, 0}}));
  CHECK_THROWS_AS(closure_truncated(Matrix::zeros(mn, 2, 3), 1), DimensionMismatch);
}

TEST_CASE("truncated closure equals Gauss-Jordan closure on random nonnegative matrices") {
  std::mt19937_64 rng(5);
  const auto mn = Semiring::min_plus();
  for (int t = 0; t < 50; ++t) {
    const auto a = support::to_matrix(mn, oracle::random_min_plus(5, 0.5, rng));
    CHECK(closure_truncated(a, 4) == closure_gauss_jordan(a));
  }
}

TEST_CASE("Mat_n(S) semiring laws") {
  std::mt19937_64 rng(99);
  for (const auto& s : {Semiring::max_plus(), Semiring::min_plus(), Semiring::max_min(),
                        Semiring::interval_max_plus()}) {
    CAPTURE(s.name());
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + t % 5;
      const Matrix a = random_matrix(s, n, n, rng);
      const Matrix b = random_matrix(s, n, n, rng);
      const Matrix c = random_matrix(s, n, n, rng);
      const auto [zero, one] = mat_constants(s, n);
      CHECK(mat_add(a, mat_add(b, c)) == mat_add(mat_add(a, b), c));
      CHECK(mat_add(a, b) == mat_add(b, a));
      CHECK(mat_add(a, a) == a);
      CHECK(approx_equal(mat_mul(a, mat_mul(b, c)), mat_mul(mat_mul(a, b), c)));
      CHECK(approx_equal(mat_mul(a, mat_add(b, c)), mat_add(mat_mul(a, b), mat_mul(a, c))));
      CHECK(approx_equal(mat_mul(mat_add(a, b), c), mat_add(mat_mul(a, c), mat_mul(b, c))));
      CHECK(mat_mul(a, one) == a);
      CHECK(mat_mul(one, a) == a);
      CHECK(mat_add(a, zero) == a);
      CHECK(mat_mul(a, zero) == zero);
      CHECK(mat_mul(zero, a) == zero);
    }
  }
}

TEST_CASE("parallel and sequential products are bit-identical") {
  std::mt19937_64 rng(8);
  for (const auto& s : {Semiring::field(), Semiring::max_plus(), Semiring::deformed(0.3)}) {
    const Matrix a = random_matrix(s, 37, 23, rng);
    const Matrix b = random_matrix(s, 23, 19, rng);
    const Matrix seq = mat_mul(a, b, 1);
    for (unsigned threads : {2u, 3u, 8u, 64u}) CHECK(mat_mul(a, b, threads) == seq);
  }
}

TEST_CASE("field product matches a reference triple loop") {
  std::mt19937_64 rng(4);
  const auto f = Semiring::field();
  for (int t = 0; t < 20; ++t) {
    const auto ga = oracle::random_contraction(6, 3.0, rng);
    const auto gb = oracle::random_contraction(6, 2.0, rng);
    const auto expect = oracle::field_matmul(ga, gb);
    const auto got = support::to_grid(mat_mul(support::to_matrix(f, ga), support::to_matrix(f, gb)));
    CHECK(approx_equal(support::to_matrix(f, got), support::to_matrix(f, expect)));
  }
}

TEST_CASE("transpose and scale") {
  const auto mp = Semiring::max_plus();
  const auto a = Matrix::from_rows(mp, {{1, 2, 3}, {4, 5, -inf}});
  CHECK(a.transpose() == Matrix::from_rows(mp, {{1, 4}, {2, 5}, {3, -inf}}));
  CHECK(scale(Element(1), a) == Matrix::from_rows(mp, {{2, 3, 4}, {5, 6, -inf}}));
}
