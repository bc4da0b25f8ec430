#include "hkfun/field.hpp"

#include <string>

namespace hkfun {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw PreconditionError("characteristic " + std::to_string(p) + " is not a supported prime");
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw DivisionByZero();
  // extended Euclid on (a, p)
  std::int64_t r0 = p_, r1 = a % p_;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t quot = r0 / r1;
    std::int64_t r2 = r0 - quot * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - quot * t1;
    t0 = t1;
    t1 = t2;
  }
  return from_int(t0);
}

std::optional<unsigned> PrimeField::log_characteristic(std::uint64_t q) const noexcept {
  if (q == 0) return std::nullopt;
  unsigned k = 0;
  while (q % p_ == 0) {
    q /= p_;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return k;
}

}  // namespace hkfun
