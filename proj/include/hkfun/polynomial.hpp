#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hkfun/field.hpp"
#include "hkfun/monomial.hpp"

namespace hkfun {

/// F_p[x_1..x_n] with a fixed monomial order. Immutable; shared by pointer.
class PolynomialRing {
 public:
  PolynomialRing(PrimeField field, std::vector<std::string> names, MonomialOrder order);

  static std::shared_ptr<const PolynomialRing> create(std::uint32_t p, std::vector<std::string> names,
                                                      MonomialOrder order = MonomialOrder::grevlex());

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const noexcept;

  /// Same variables and field, different order.
  std::shared_ptr<const PolynomialRing> with_order(MonomialOrder order) const;

  friend bool operator==(const PolynomialRing&, const PolynomialRing&) = default;

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolynomialRing>;

struct Term {
  Monomial monomial;
  Coeff coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: nonzero terms sorted strictly descending in the ring's
/// order.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, Coeff c = 1);
  /// Wraps terms already in canonical order without re-sorting.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return is_zero() || (size() == 1 && terms_[0].monomial.is_one()); }
  bool is_unit() const noexcept { return size() == 1 && terms_[0].monomial.is_one(); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  Coeff leading_coeff() const { return terms_.front().coeff; }

  /// Total degree, -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  /// Smallest exponent of variable `var` over all terms.
  unsigned min_exponent(std::size_t var) const noexcept;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scale(Coeff c) const;
  Polynomial mul_term(const Monomial& m, Coeff c) const;
  /// Repeated squaring; no Frobenius shortcut.
  Polynomial pow(unsigned k) const;
  /// f^q for q a power of the characteristic, via c^q = c on coefficients.
  Polynomial frobenius(std::uint64_t q) const;
  Polynomial monic() const;

  /// Same polynomial re-sorted for a ring with the same variables and field.
  Polynomial in_ring(const RingPtr& other) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Throws RingMismatch unless the two rings are equal.
void require_same_ring(const PolynomialRing& a, const PolynomialRing& b);

/// this - c*m*g where every operand is already canonical; `start` skips a
/// prefix of `f`. Core reduction step shared by the Groebner engine.
std::vector<Term> sub_mul_terms(const PolynomialRing& ring, std::span<const Term> f, Coeff c, const Monomial& m,
                                std::span<const Term> g);

/// Remainder of multivariate division of f by divisors (not necessarily a
/// Groebner basis).
Polynomial reduce_by(const Polynomial& f, std::span<const Polynomial> divisors);

/// Quotient f / g if g divides f exactly.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// Substitute images[i] for variable i; images live in `target`.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images, const RingPtr& target);

/// Canonical text form: descending terms, `x^k`, explicit `*`, joined by " + ".
std::string to_string(const Polynomial& f);
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace hkfun
