#pragma once

#include <optional>
#include <vector>

#include "nakayama/rational.hpp"

// Dense exact matrices over Q, sized for the brute-force oracle.
namespace nakayama::linalg {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);

  static Matrix identity(int size);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Rational& operator()(int r, int c) { return data_[index(r, c)]; }
  const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }

  bool is_zero() const noexcept;
  Matrix column(int c) const;

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t index(int r, int c) const noexcept {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Columns side by side; both operands need the same row count.
Matrix hstack(const Matrix& left, const Matrix& right);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> row_reduce(Matrix& m);

int rank(Matrix m);

/// Basis of {x : m x = 0} as the columns of a (cols x nullity) matrix.
Matrix nullspace(const Matrix& m);

/// Some X with a X = b, or nullopt if the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

}  // namespace nakayama::linalg
