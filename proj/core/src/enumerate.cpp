#include "lg/enumerate.hpp"

namespace lg {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > UINT64_MAX - b) throw std::overflow_error("gaussian binomial overflow");
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) {
    throw std::overflow_error("gaussian binomial overflow");
  }
  return a * b;
}

}  // namespace

std::uint64_t gaussian_binomial(int d, int r, std::uint64_t q) {
  if (r < 0 || r > d) {
    throw std::invalid_argument("gaussian binomial requires 0 <= r <= d");
  }
  // [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q
  std::vector<std::uint64_t> row(static_cast<std::size_t>(d) + 1, 0);
  row[0] = 1;
  for (int n = 1; n <= d; ++n) {
    std::vector<std::uint64_t> next(row.size(), 0);
    next[0] = 1;
    std::uint64_t qk = 1;
    for (int k = 1; k <= n; ++k) {
      qk = checked_mul(qk, q);
      next[k] = checked_add(row[k - 1], checked_mul(qk, row[k]));
    }
    row = std::move(next);
  }
  return row[r];
}

SubspaceEnumerator::SubspaceEnumerator(PrimeField field, int d, int r)
    : field_(field), d_(d), r_(r), done_(false) {
  if (r < 0 || r > d) {
    throw std::invalid_argument("subspace enumeration requires 0 <= r <= d");
  }
  pattern_.resize(r);
  for (int i = 0; i < r; ++i) pattern_[i] = i;
  std::vector<bool> is_pivot(d, false);
  for (int c : pattern_) is_pivot[c] = true;
  for (int i = 0; i < r; ++i) {
    for (int c = pattern_[i] + 1; c < d; ++c) {
      if (!is_pivot[c]) free_.emplace_back(i, c);
    }
  }
  entries_.assign(free_.size(), 0);
}

std::uint64_t SubspaceEnumerator::count() const {
  return gaussian_binomial(d_, r_, field_.p());
}

Subspace SubspaceEnumerator::current() const {
  Matrix m(field_, r_, d_);
  for (int i = 0; i < r_; ++i) m.at(i, pattern_[i]) = 1;
  for (std::size_t k = 0; k < free_.size(); ++k) {
    m.at(free_[k].first, free_[k].second) = entries_[k];
  }
  return Subspace::span(m);
}

bool SubspaceEnumerator::advance_entries() {
  for (std::size_t k = entries_.size(); k-- > 0;) {
    if (entries_[k] + 1 < field_.p()) {
      ++entries_[k];
      for (std::size_t j = k + 1; j < entries_.size(); ++j) entries_[j] = 0;
      return true;
    }
  }
  return false;
}

bool SubspaceEnumerator::advance_pattern() {
  // next r-combination of {0..d-1} in lexicographic order
  int i = r_ - 1;
  while (i >= 0 && pattern_[i] == d_ - r_ + i) --i;
  if (i < 0) return false;
  ++pattern_[i];
  for (int j = i + 1; j < r_; ++j) pattern_[j] = pattern_[j - 1] + 1;
  std::vector<bool> is_pivot(d_, false);
  for (int c : pattern_) is_pivot[c] = true;
  free_.clear();
  for (int row = 0; row < r_; ++row) {
    for (int c = pattern_[row] + 1; c < d_; ++c) {
      if (!is_pivot[c]) free_.emplace_back(row, c);
    }
  }
  entries_.assign(free_.size(), 0);
  return true;
}

std::optional<Subspace> SubspaceEnumerator::next() {
  if (done_) return std::nullopt;
  Subspace out = current();
  if (!advance_entries() && !advance_pattern()) done_ = true;
  return out;
}

SuperspaceEnumerator::SuperspaceEnumerator(Subspace base, int r)
    : base_(base),
      quotient_(base.ambient_dim(), base),
      inner_(base.field(), base.ambient_dim() - base.dim(), r - base.dim()) {
  if (r < base.dim() || r > base.ambient_dim()) {
    throw std::invalid_argument(
        "superspace enumeration requires dim(base) <= r <= ambient");
  }
}

std::uint64_t SuperspaceEnumerator::count() const { return inner_.count(); }

std::optional<Subspace> SuperspaceEnumerator::next() {
  auto w = inner_.next();
  if (!w) return std::nullopt;
  // lift the quotient basis through the section and adjoin the base
  Matrix lifted = w->basis() * quotient_.section().transpose();
  return Subspace::span(vstack(base_.basis(), lifted));
}

}  // namespace lg
