#include "lg/field.hpp"

namespace lg {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t k = 3; k * k <= n; k += 2) {
    if (n % k == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 16)) {
    throw std::invalid_argument("field modulus must satisfy 2 <= p < 2^16");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("field modulus must be prime");
  }
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("division by zero in F_p");
  // extended Euclid on (a, p)
  std::int64_t old_r = a, r = p_;
  std::int64_t old_t = 1, t = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return reduce(old_t);
}

}  // namespace lg
