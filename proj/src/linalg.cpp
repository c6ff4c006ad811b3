#include "nakayama/linalg.hpp"

#include <algorithm>

#include "nakayama/error.hpp"

namespace nakayama::linalg {

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw Error(Errc::precondition_violated, "negative matrix shape");
}

Matrix Matrix::identity(int size) {
  Matrix m(size, size);
  for (int i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

Matrix Matrix::column(int c) const {
  Matrix out(rows_, 1);
  for (int r = 0; r < rows_; ++r) out(r, 0) = (*this)(r, c);
  return out;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols_ != y.rows_) throw Error(Errc::internal_inconsistency, "matrix shape mismatch");
  Matrix out(x.rows_, y.cols_);
  for (int i = 0; i < x.rows_; ++i) {
    for (int k = 0; k < x.cols_; ++k) {
      const Rational& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < y.cols_; ++j) {
        if (!y(k, j).is_zero()) out(i, j) += xik * y(k, j);
      }
    }
  }
  return out;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) {
    throw Error(Errc::internal_inconsistency, "matrix shape mismatch");
  }
  Matrix out = x;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= y.data_[i];
  return out;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) throw Error(Errc::internal_inconsistency, "hstack row mismatch");
  Matrix out(left.rows(), left.cols() + right.cols());
  for (int r = 0; r < left.rows(); ++r) {
    for (int c = 0; c < left.cols(); ++c) out(r, c) = left(r, c);
    for (int c = 0; c < right.cols(); ++c) out(r, left.cols() + c) = right(r, c);
  }
  return out;
}

std::vector<int> row_reduce(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (int c = col; c < m.cols(); ++c) std::swap(m(row, c), m(pivot, c));
    }
    const Rational inv = Rational(1) / m(row, col);
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (int c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(Matrix m) { return static_cast<int>(row_reduce(m).size()); }

Matrix nullspace(const Matrix& m) {
  Matrix reduced = m;
  const auto pivots = row_reduce(reduced);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  const int nullity = m.cols() - static_cast<int>(pivots.size());
  Matrix basis(m.cols(), nullity);
  int out = 0;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, out) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis(pivots[r], out) = -reduced(static_cast<int>(r), free);
    }
    ++out;
  }
  return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(Errc::internal_inconsistency, "solve row mismatch");
  Matrix aug = hstack(a, b);
  const auto pivots = row_reduce(aug);
  Matrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= a.cols()) return std::nullopt;  // 0 = nonzero row
    for (int c = 0; c < b.cols(); ++c) x(pivots[r], c) = aug(static_cast<int>(r), a.cols() + c);
  }
  return x;
}

}  // namespace nakayama::linalg
