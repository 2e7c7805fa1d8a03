#pragma once

#include <cstdint>
#include <stdexcept>

namespace lg {

bool is_prime(std::uint32_t n);

/// Arithmetic in the prime field F_p, 2 <= p < 2^16.
///
/// Elements are plain uint32_t values kept reduced to [0, p). All
/// intermediate products fit in 64 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  std::uint32_t reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a) * b % p_);
  }

  /// Multiplicative inverse; throws std::domain_error on zero.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace lg
