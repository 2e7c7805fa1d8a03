#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lg/field.hpp"

namespace lg {

/// Dense row-major matrix over F_p.
///
/// Maps act on column vectors: an (m x n) matrix carries F_p^n to F_p^m,
/// so composition reads right to left as usual.
class Matrix {
 public:
  Matrix(PrimeField field, int rows, int cols);

  static Matrix identity(PrimeField field, int n);
  static Matrix from_rows(PrimeField field,
                          const std::vector<std::vector<std::uint32_t>>& rows,
                          int cols = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  std::uint32_t operator()(int r, int c) const { return a_[idx(r, c)]; }
  std::uint32_t& at(int r, int c) { return a_[idx(r, c)]; }

  std::vector<std::uint32_t> row(int r) const;
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_scalar(std::uint32_t s) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  PrimeField field_;
  int rows_;
  int cols_;
  std::vector<std::uint32_t> a_;
};

Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);

/// Reduced row-echelon form. Row space is preserved and the result is a
/// fixed point of the reduction.
Matrix rref(const Matrix& m);

int rank(const Matrix& m);

/// Inverse of a square matrix; throws std::domain_error if singular.
Matrix inverse(const Matrix& m);

}  // namespace lg
