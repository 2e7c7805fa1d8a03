#pragma once

#include <cstdint>
#include <optional>

#include "lg/subspace.hpp"

namespace lg {

/// Gaussian binomial coefficient [d choose r]_q, computed by the q-Pascal
/// recurrence in exact integers. Throws std::overflow_error if the value
/// does not fit in 64 bits.
std::uint64_t gaussian_binomial(int d, int r, std::uint64_t q);

/// Streams every r-dimensional subspace of F_p^d exactly once, in a fixed
/// deterministic order: pivot patterns lexicographically, then the free
/// entries of the echelon form in odometer order. Patterns partition the
/// stream, so consumers may split work by pattern.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(PrimeField field, int d, int r);

  std::optional<Subspace> next();

  /// Total number of subspaces in the stream.
  std::uint64_t count() const;

 private:
  bool advance_pattern();
  Subspace current() const;
  bool advance_entries();

  PrimeField field_;
  int d_;
  int r_;
  bool done_;
  std::vector<int> pattern_;                 // pivot columns, increasing
  std::vector<std::pair<int, int>> free_;    // (row, col) free positions
  std::vector<std::uint32_t> entries_;       // current free values
};

/// Streams every r-dimensional subspace containing `base` (dim <= r) inside
/// its ambient space, by enumerating (r - dim base)-dimensional subspaces of
/// the quotient and pulling them back.
class SuperspaceEnumerator {
 public:
  SuperspaceEnumerator(Subspace base, int r);

  std::optional<Subspace> next();
  std::uint64_t count() const;

 private:
  Subspace base_;
  Quotient quotient_;
  SubspaceEnumerator inner_;
};

template <typename Fn>
void for_each_subspace(PrimeField field, int d, int r, Fn&& fn) {
  SubspaceEnumerator en(field, d, r);
  while (auto s = en.next()) fn(*s);
}

}  // namespace lg
