#include "lg/subspace.hpp"

#include <algorithm>

namespace lg {

namespace {

std::vector<int> pivot_columns(const Matrix& rref_m) {
  std::vector<int> pivots;
  for (int r = 0; r < rref_m.rows(); ++r) {
    for (int c = 0; c < rref_m.cols(); ++c) {
      if (rref_m(r, c) != 0) {
        pivots.push_back(c);
        break;
      }
    }
  }
  return pivots;
}

Matrix drop_zero_rows(const Matrix& m) {
  std::vector<std::vector<std::uint32_t>> rows;
  for (int r = 0; r < m.rows(); ++r) {
    bool nonzero = false;
    for (int c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) {
        nonzero = true;
        break;
      }
    }
    if (nonzero) rows.push_back(m.row(r));
  }
  return Matrix::from_rows(m.field(), rows, m.cols());
}

}  // namespace

Subspace::Subspace(Matrix rref_basis)
    : basis_(std::move(rref_basis)), pivots_(pivot_columns(basis_)) {}

Subspace Subspace::zero(PrimeField field, int ambient) {
  return Subspace(Matrix(field, 0, ambient));
}

Subspace Subspace::full(PrimeField field, int ambient) {
  return Subspace(Matrix::identity(field, ambient));
}

Subspace Subspace::span(const Matrix& vectors_as_rows) {
  return Subspace(drop_zero_rows(rref(vectors_as_rows)));
}

bool Subspace::contains_vector(const std::vector<std::uint32_t>& v) const {
  if (static_cast<int>(v.size()) != ambient_dim()) {
    throw std::invalid_argument("vector length does not match ambient space");
  }
  // reduce v against the RREF basis and check the residue vanishes
  std::vector<std::uint32_t> w = v;
  const PrimeField& f = field();
  for (int r = 0; r < dim(); ++r) {
    std::uint32_t c = w[pivots_[r]];
    if (c == 0) continue;
    for (int j = 0; j < ambient_dim(); ++j) {
      w[j] = f.sub(w[j], f.mul(c, basis_(r, j)));
    }
  }
  return std::all_of(w.begin(), w.end(),
                     [](std::uint32_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim() || field() != other.field()) {
    throw std::invalid_argument("ambient mismatch in containment test");
  }
  if (other.dim() > dim()) return false;
  for (int r = 0; r < other.dim(); ++r) {
    if (!contains_vector(other.basis().row(r))) return false;
  }
  return true;
}

std::vector<std::uint32_t> Subspace::coordinates(
    const std::vector<std::uint32_t>& v) const {
  std::vector<std::uint32_t> coords(dim());
  for (int r = 0; r < dim(); ++r) coords[r] = v[pivots_[r]];
  return coords;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field()) {
    throw std::invalid_argument("ambient mismatch in subspace sum");
  }
  return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field()) {
    throw std::invalid_argument("ambient mismatch in subspace intersection");
  }
  const int d = a.ambient_dim();
  Matrix top = hstack(a.basis(), a.basis());
  Matrix bottom = hstack(b.basis(), Matrix(b.field(), b.dim(), d));
  Matrix red = rref(vstack(top, bottom));
  std::vector<std::vector<std::uint32_t>> rows;
  for (int r = 0; r < red.rows(); ++r) {
    bool left_zero = true;
    for (int c = 0; c < d; ++c) {
      if (red(r, c) != 0) {
        left_zero = false;
        break;
      }
    }
    if (!left_zero) continue;
    std::vector<std::uint32_t> right(d);
    bool nonzero = false;
    for (int c = 0; c < d; ++c) {
      right[c] = red(r, d + c);
      nonzero = nonzero || right[c] != 0;
    }
    if (nonzero) rows.push_back(std::move(right));
  }
  return Subspace::span(Matrix::from_rows(a.field(), rows, d));
}

Subspace column_space(const Matrix& map) {
  return Subspace::span(map.transpose());
}

Subspace image(const Matrix& map, const Subspace& s) {
  if (map.cols() != s.ambient_dim() || map.field() != s.field()) {
    throw std::invalid_argument("map domain does not match subspace ambient");
  }
  // rows of s.basis * map^T are the images of the basis vectors
  return Subspace::span(s.basis() * map.transpose());
}

Subspace kernel(const Matrix& map) {
  Matrix red = rref(map);
  std::vector<int> pivots = pivot_columns(red);
  std::vector<bool> is_pivot(map.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  const PrimeField& f = map.field();
  std::vector<std::vector<std::uint32_t>> rows;
  for (int free = 0; free < map.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(map.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = f.neg(red(static_cast<int>(r), free));
    }
    rows.push_back(std::move(v));
  }
  return Subspace::span(Matrix::from_rows(f, rows, map.cols()));
}

Subspace preimage(const Matrix& map, const Subspace& s) {
  if (map.rows() != s.ambient_dim() || map.field() != s.field()) {
    throw std::invalid_argument("map codomain does not match subspace ambient");
  }
  Quotient q(s.ambient_dim(), s);
  return kernel(q.projection() * map);
}

Quotient::Quotient(int ambient, Subspace kernel_space)
    : kernel_(std::move(kernel_space)),
      projection_(kernel_.field(), 0, 0),
      section_(kernel_.field(), 0, 0) {
  if (kernel_.ambient_dim() != ambient) {
    throw std::invalid_argument("kernel is not a subspace of the ambient space");
  }
  const PrimeField& f = kernel_.field();
  const int k = kernel_.dim();
  const int t = ambient - k;
  std::vector<bool> is_pivot(ambient, false);
  for (int c : kernel_.pivots()) is_pivot[c] = true;
  // complete the kernel's RREF basis by the standard vectors at the
  // non-pivot columns
  Matrix complement(f, t, ambient);
  {
    int r = 0;
    for (int c = 0; c < ambient; ++c) {
      if (!is_pivot[c]) complement.at(r++, c) = 1;
    }
  }
  // coordinates with respect to (kernel rows, complement rows): solve
  // B^T gamma = v; the projection is the complement part of gamma
  Matrix b_t = vstack(kernel_.basis(), complement).transpose();
  Matrix coords = inverse(b_t);
  projection_ = Matrix(f, t, ambient);
  for (int r = 0; r < t; ++r) {
    for (int c = 0; c < ambient; ++c) projection_.at(r, c) = coords(k + r, c);
  }
  section_ = complement.transpose();
}

Subspace Quotient::push(const Subspace& s) const {
  if (s.ambient_dim() != source_dim()) {
    throw std::invalid_argument("pushforward ambient mismatch");
  }
  return image(projection_, s);
}

std::vector<std::uint32_t> Quotient::push_vector(
    const std::vector<std::uint32_t>& v) const {
  return projection_.apply(v);
}

}  // namespace lg
