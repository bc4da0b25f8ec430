#pragma once

#include <cstdint>
#include <optional>

#include "hkfun/errors.hpp"

namespace hkfun {

/// Residue in [0, p), interpreted relative to a PrimeField.
using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n) noexcept;

/// The prime field F_p. Elements are plain residues; the field object carries
/// the modulus and does the arithmetic.
class PrimeField {
 public:
  /// Throws PreconditionError unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  /// Throws DivisionByZero for a == 0.
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  /// If q = p^k for some k >= 0, returns k.
  std::optional<unsigned> log_characteristic(std::uint64_t q) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace hkfun
