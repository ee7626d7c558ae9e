#pragma once

// Dense matrices over the rationals.  Sized for coupled-cell work: the
// matrices are n x n with n the number of cells (n <= ~12), so simplicity
// beats cleverness throughout.

#include <cstddef>
#include <vector>

#include "cellnet/errors.hpp"
#include "cellnet/rational.hpp"

namespace cellnet {

class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  // Row-major flattening; this fixes the coordinate order used by all span
  // computations.
  const std::vector<Rational>& flat() const { return data_; }

  ExactMatrix mul(const ExactMatrix& o) const {
    if (cols_ != o.rows_)
      throw SizeMismatch("matrix product needs inner dimensions to agree");
    ExactMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) += a * o.at(k, j);
      }
    return r;
  }

  bool operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

using MatrixFamily = std::vector<ExactMatrix>;

}  // namespace cellnet
