#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hkfun/monomial.hpp"

namespace hkfun {

/// Integer polynomial in one formal variable t.
class UniPolynomial {
 public:
  UniPolynomial() = default;
  explicit UniPolynomial(std::vector<std::int64_t> coeffs);
  static UniPolynomial one() { return UniPolynomial({1}); }
  /// 1 - t^k
  static UniPolynomial one_minus_power(unsigned k);

  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t operator[](std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0; }
  std::int64_t at_one() const noexcept;

  /// Quotient by (1 - t) when exact.
  std::optional<UniPolynomial> divide_one_minus_t() const;

  friend UniPolynomial operator+(const UniPolynomial& a, const UniPolynomial& b);
  friend UniPolynomial operator-(const UniPolynomial& a, const UniPolynomial& b);
  friend UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b);
  UniPolynomial shift(unsigned k) const;

  std::string to_string() const;
  friend bool operator==(const UniPolynomial&, const UniPolynomial&) = default;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// HS(S/I) = numerator / (1 - t)^ambient_dim.
struct HilbertSeries {
  UniPolynomial numerator;
  std::size_t ambient_dim = 0;

  /// Hilbert function values in degrees 0..max_degree.
  std::vector<std::int64_t> expand(std::size_t max_degree) const;
  /// Krull dimension of the quotient; nullopt for the zero module.
  std::optional<std::size_t> dimension() const;
  /// numerator / (1 - t)^(ambient_dim - dim), the reduced numerator.
  UniPolynomial reduced_numerator() const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// Numerator of the Hilbert series of S/(generators) for a monomial ideal in
/// `nvars` variables, by pivot splitting N(M) = N(M + p) + t^deg(p) N(M : p).
UniPolynomial monomial_ideal_numerator(std::vector<Monomial> generators);

/// Drops generators divisible by other generators (and duplicates).
void minimalize_monomials(std::vector<Monomial>& generators);

}  // namespace hkfun
