#include "idem/matrix.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace idem {

namespace {

std::string dims(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void same_semiring(const Matrix& a, const Matrix& b, const char* op) {
  if (!(a.semiring() == b.semiring())) {
    throw SemiringMismatch(std::string(op) + ": " + a.semiring().name() + " vs " +
                           b.semiring().name());
  }
}

void same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": " + dims(a) + " vs " + dims(b));
  }
}

}  // namespace

Matrix::Matrix(Semiring s, std::size_t rows, std::size_t cols)
    : semiring_(s), rows_(rows), cols_(cols), data_(rows * cols, s.zero()) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
}

Matrix::Matrix(Semiring s, std::size_t rows, std::size_t cols, std::vector<Element> data)
    : semiring_(s), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
  if (data_.size() != rows * cols) {
    throw DimensionMismatch("matrix data has " + std::to_string(data_.size()) +
                            " entries, expected " + std::to_string(rows * cols));
  }
  for (const auto& e : data_) semiring_.require(e);
}

Matrix Matrix::from_rows(Semiring s, const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) throw DimensionMismatch("empty matrix literal");
  const std::size_t cols = rows.front().size();
  std::vector<Element> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("ragged matrix literal");
    for (double v : r) data.push_back(s.embed(v));
  }
  return Matrix(s, rows.size(), cols, std::move(data));
}

Matrix Matrix::identity(Semiring s, std::size_t n) {
  Matrix m(s, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = s.one();
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Element& v) {
  if (i >= rows_ || j >= cols_) throw DimensionMismatch("index out of range");
  semiring_.require(v);
  data_[i * cols_ + j] = v;
}

Matrix Matrix::transpose() const {
  std::vector<Element> out(data_.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[j * rows_ + i] = data_[i * cols_ + j];
  }
  return Matrix(semiring_, cols_, rows_, std::move(out));
}

Vector column_vector(Semiring s, std::vector<Element> values) {
  const auto n = values.size();
  return Matrix(s, n, 1, std::move(values));
}

Vector column_vector(Semiring s, const std::vector<double>& values) {
  std::vector<Element> data;
  data.reserve(values.size());
  for (double v : values) data.push_back(s.embed(v));
  return column_vector(s, std::move(data));
}

Vector row_vector(Semiring s, std::vector<Element> values) {
  const auto n = values.size();
  return Matrix(s, 1, n, std::move(values));
}

MatrixConstants mat_constants(const Semiring& s, std::size_t n) {
  return {Matrix::zeros(s, n, n), Matrix::identity(s, n)};
}

bool approx_equal(const Matrix& a, const Matrix& b) {
  if (!(a.semiring() == b.semiring()) || a.rows() != b.rows() || a.cols() != b.cols()) {
    return false;
  }
  const auto& s = a.semiring();
  return std::ranges::equal(a.data(), b.data(),
                            [&s](const Element& x, const Element& y) { return s.equal(x, y); });
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  same_semiring(a, b, "mat_add");
  same_shape(a, b, "mat_add");
  const auto& s = a.semiring();
  std::vector<Element> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s.add(a.data()[i], b.data()[i]);
  return Matrix(s, a.rows(), a.cols(), std::move(out));
}

Matrix mat_mul(const Matrix& a, const Matrix& b, unsigned threads) {
  same_semiring(a, b, "mat_mul");
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mat_mul: " + dims(a) + " times " + dims(b));
  }
  const auto& s = a.semiring();
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  const std::size_t inner = a.cols();
  std::vector<Element> out(n * m, s.zero());

  auto rows = [&](std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        Element acc = s.zero();
        for (std::size_t k = 0; k < inner; ++k) acc = s.add(acc, s.mul(a(i, k), b(k, j)));
        out[i * m + j] = acc;
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, n);
  if (workers == 1) {
    rows(0, n);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t first = 0; first < n; first += chunk) {
      pool.emplace_back(rows, first, std::min(n, first + chunk));
    }
  }
  return Matrix(s, n, m, std::move(out));
}

Element scalar_product(const Vector& x, const Vector& y) {
  same_semiring(x, y, "scalar_product");
  if (!x.is_vector() || !y.is_vector() || x.size() != y.size()) {
    throw DimensionMismatch("scalar_product: " + dims(x) + " vs " + dims(y));
  }
  const auto& s = x.semiring();
  Element acc = s.zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = s.add(acc, s.mul(x.data()[i], y.data()[i]));
  return acc;
}

Vector mat_vec(const Matrix& a, const Vector& v) {
  if (v.cols() != 1) throw DimensionMismatch("mat_vec expects a column vector");
  return mat_mul(a, v);
}

Matrix scale(const Element& c, const Matrix& a) {
  const auto& s = a.semiring();
  std::vector<Element> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s.mul(c, a.data()[i]);
  return Matrix(s, a.rows(), a.cols(), std::move(out));
}

Matrix closure_truncated(const Matrix& a, std::size_t k) {
  if (!a.square()) throw DimensionMismatch("closure of a non-square matrix " + dims(a));
  Matrix sum = Matrix::identity(a.semiring(), a.rows());
  Matrix power = sum;
  for (std::size_t t = 0; t < k; ++t) {
    power = mat_mul(power, a);
    sum = mat_add(sum, power);
  }
  return sum;
}

}  // namespace idem
