#include "lg/matrix.hpp"

#include <sstream>

namespace lg {

Matrix::Matrix(PrimeField field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("matrix dimensions must be non-negative");
  }
  a_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

Matrix Matrix::identity(PrimeField field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(PrimeField field,
                         const std::vector<std::vector<std::uint32_t>>& rows,
                         int cols) {
  if (cols < 0) {
    cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  }
  Matrix m(field, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) {
      throw std::invalid_argument("ragged rows in matrix literal");
    }
    for (int c = 0; c < cols; ++c) {
      m.at(r, c) = field.reduce(static_cast<std::int64_t>(rows[r][c]));
    }
  }
  return m;
}

std::vector<std::uint32_t> Matrix::row(int r) const {
  std::vector<std::uint32_t> out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
  return out;
}

std::vector<std::uint32_t> Matrix::apply(
    const std::vector<std::uint32_t>& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    throw std::invalid_argument("vector length does not match matrix columns");
  }
  std::vector<std::uint32_t> out(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (int c = 0; c < cols_; ++c) {
      acc += static_cast<std::uint64_t>((*this)(r, c)) * v[c];
    }
    out[r] = static_cast<std::uint32_t>(acc % field_.p());
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (field_ != rhs.field_) {
    throw std::invalid_argument("matrix product over mismatched fields");
  }
  if (cols_ != rhs.rows_) {
    throw std::invalid_argument("matrix product dimension mismatch");
  }
  Matrix out(field_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      std::uint64_t x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) = static_cast<std::uint32_t>(
            (out(i, j) + x * rhs(k, j)) % field_.p());
      }
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(c, r) = (*this)(r, c);
  }
  return out;
}

bool Matrix::is_zero() const {
  for (std::uint32_t x : a_) {
    if (x != 0) return false;
  }
  return true;
}

bool Matrix::is_scalar(std::uint32_t s) const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? s : 0u)) return false;
    }
  }
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (int c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
  }
  os << ']';
  return os.str();
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols() || top.field() != bottom.field()) {
    throw std::invalid_argument("vstack shape mismatch");
  }
  Matrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (int r = 0; r < top.rows(); ++r)
    for (int c = 0; c < top.cols(); ++c) out.at(r, c) = top(r, c);
  for (int r = 0; r < bottom.rows(); ++r)
    for (int c = 0; c < top.cols(); ++c)
      out.at(top.rows() + r, c) = bottom(r, c);
  return out;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows() || left.field() != right.field()) {
    throw std::invalid_argument("hstack shape mismatch");
  }
  Matrix out(left.field(), left.rows(), left.cols() + right.cols());
  for (int r = 0; r < left.rows(); ++r) {
    for (int c = 0; c < left.cols(); ++c) out.at(r, c) = left(r, c);
    for (int c = 0; c < right.cols(); ++c)
      out.at(r, left.cols() + c) = right(r, c);
  }
  return out;
}

Matrix rref(const Matrix& m) {
  Matrix a = m;
  const PrimeField& f = a.field();
  int pivot_row = 0;
  for (int col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    int pr = -1;
    for (int r = pivot_row; r < a.rows(); ++r) {
      if (a(r, col) != 0) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != pivot_row) {
      for (int c = 0; c < a.cols(); ++c) {
        std::uint32_t tmp = a(pivot_row, c);
        a.at(pivot_row, c) = a(pr, c);
        a.at(pr, c) = tmp;
      }
    }
    std::uint32_t piv_inv = f.inv(a(pivot_row, col));
    for (int c = col; c < a.cols(); ++c) {
      a.at(pivot_row, c) = f.mul(a(pivot_row, c), piv_inv);
    }
    for (int r = 0; r < a.rows(); ++r) {
      if (r == pivot_row) continue;
      std::uint32_t factor = a(r, col);
      if (factor == 0) continue;
      for (int c = col; c < a.cols(); ++c) {
        a.at(r, c) = f.sub(a(r, c), f.mul(factor, a(pivot_row, c)));
      }
    }
    ++pivot_row;
  }
  return a;
}

int rank(const Matrix& m) {
  Matrix r = rref(m);
  int rk = 0;
  for (int i = 0; i < r.rows(); ++i) {
    bool nonzero = false;
    for (int c = 0; c < r.cols(); ++c) {
      if (r(i, c) != 0) {
        nonzero = true;
        break;
      }
    }
    if (nonzero) ++rk;
  }
  return rk;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("inverse of a non-square matrix");
  }
  int n = m.rows();
  Matrix aug = rref(hstack(m, Matrix::identity(m.field(), n)));
  // singular iff the left block did not reduce to the identity
  for (int i = 0; i < n; ++i) {
    if (aug(i, i) != 1) throw std::domain_error("matrix is singular");
  }
  Matrix out(m.field(), n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.at(r, c) = aug(r, n + c);
  return out;
}

}  // namespace lg
