#pragma once

#include <vector>

#include "lg/matrix.hpp"

namespace lg {

/// A subspace of F_p^d in canonical form: the basis matrix is the reduced
/// row-echelon form of any spanning set, with zero rows dropped. Two
/// subspaces are equal as values exactly when they are equal as sets of
/// vectors.
class Subspace {
 public:
  static Subspace zero(PrimeField field, int ambient);
  static Subspace full(PrimeField field, int ambient);
  /// Canonicalizes an arbitrary spanning matrix (rows span the space).
  static Subspace span(const Matrix& vectors_as_rows);

  int ambient_dim() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const PrimeField& field() const { return basis_.field(); }

  bool contains_vector(const std::vector<std::uint32_t>& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of a member vector in the canonical basis. Because the
  /// basis is in RREF these are just the entries at the pivot columns;
  /// membership is the caller's responsibility (checked in debug paths via
  /// contains_vector).
  std::vector<std::uint32_t> coordinates(
      const std::vector<std::uint32_t>& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  explicit Subspace(Matrix rref_basis);

  Matrix basis_;
  std::vector<int> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
/// Zassenhaus intersection: row-reduce [A|A; B|0] and read the right block
/// of the rows whose left block vanished.
Subspace intersect(const Subspace& a, const Subspace& b);

Subspace column_space(const Matrix& map);
Subspace image(const Matrix& map, const Subspace& s);
Subspace kernel(const Matrix& map);
Subspace preimage(const Matrix& map, const Subspace& s);

/// Quotient of F_p^d by a distinguished kernel, carried by an explicit
/// surjection. The projection kills the kernel and maps the standard-basis
/// completion of the kernel's pivot columns to the standard basis of the
/// target, so pushforwards are plain matrix products.
class Quotient {
 public:
  Quotient(int ambient, Subspace kernel);

  int source_dim() const { return projection_.cols(); }
  int target_dim() const { return projection_.rows(); }
  const Matrix& projection() const { return projection_; }
  const Subspace& declared_kernel() const { return kernel_; }
  /// Right inverse of the projection (target -> source), as a matrix acting
  /// on column vectors.
  const Matrix& section() const { return section_; }

  Subspace push(const Subspace& s) const;
  std::vector<std::uint32_t> push_vector(
      const std::vector<std::uint32_t>& v) const;

 private:
  Subspace kernel_;
  Matrix projection_;
  Matrix section_;
};

}  // namespace lg
