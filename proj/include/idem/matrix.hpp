#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "idem/semiring.hpp"

namespace idem {

/// Dense row-major matrix over a semiring. Every entry lies in the carrier;
/// the constructors enforce it.
class Matrix {
 public:
  /// rows x cols matrix filled with the zero of `s`.
  Matrix(Semiring s, std::size_t rows, std::size_t cols);
  Matrix(Semiring s, std::size_t rows, std::size_t cols, std::vector<Element> data);

  /// Convenience for scalar carriers: one inner vector per row.
  static Matrix from_rows(Semiring s, const std::vector<std::vector<double>>& rows);
  static Matrix identity(Semiring s, std::size_t n);
  static Matrix zeros(Semiring s, std::size_t rows, std::size_t cols) {
    return Matrix(s, rows, cols);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Semiring& semiring() const { return semiring_; }

  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Bounds- and carrier-checked write.
  void set(std::size_t i, std::size_t j, const Element& v);

  std::span<const Element> data() const { return data_; }
  std::span<const Element> row(std::size_t i) const {
    return std::span<const Element>(data_).subspan(i * cols_, cols_);
  }

  bool square() const { return rows_ == cols_; }
  bool is_vector() const { return rows_ == 1 || cols_ == 1; }
  /// Number of entries; the length when this is a vector.
  std::size_t size() const { return data_.size(); }

  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.semiring_ == b.semiring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  Semiring semiring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// Vectors are 1-column (or 1-row) matrices.
using Vector = Matrix;

Vector column_vector(Semiring s, std::vector<Element> values);
Vector column_vector(Semiring s, const std::vector<double>& values);
Vector row_vector(Semiring s, std::vector<Element> values);

struct MatrixConstants {
  Matrix zero_matrix;
  Matrix identity;
};

MatrixConstants mat_constants(const Semiring& s, std::size_t n);

/// Entrywise equality under the semiring's tolerance policy.
bool approx_equal(const Matrix& a, const Matrix& b);

Matrix mat_add(const Matrix& a, const Matrix& b);

/// (AB)_ij = (+)_k a_ik (.) b_kj, reduced in ascending k. With threads > 1 the
/// output rows are split across workers; results are bit-identical to the
/// sequential run.
Matrix mat_mul(const Matrix& a, const Matrix& b, unsigned threads = 1);

/// (+)_i x_i (.) y_i. Accepts row or column vectors of equal length.
Element scalar_product(const Vector& x, const Vector& y);

Vector mat_vec(const Matrix& a, const Vector& v);

/// Scales every entry: c (.) a_ij.
Matrix scale(const Element& c, const Matrix& a);

/// 1 (+) A (+) A^2 (+) ... (+) A^k.
Matrix closure_truncated(const Matrix& a, std::size_t k);

}  // namespace idem
