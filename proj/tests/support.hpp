#pragma once

#include "idem/matrix.hpp"
#include "oracles.hpp"

namespace support {

inline idem::Matrix to_matrix(const idem::Semiring& s, const oracle::Grid& g) {
  return idem::Matrix::from_rows(s, g);
}

inline oracle::Grid to_grid(const idem::Matrix& m) {
  oracle::Grid g(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j).value();
  }
  return g;
}

}  // namespace support
