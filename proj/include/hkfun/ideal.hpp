#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hkfun/groebner.hpp"
#include "hkfun/hilbert.hpp"
#include "hkfun/ring.hpp"

namespace hkfun {

/// Ideal of R = S/D, held as the ambient ideal (generators) + D.
///
/// Copies share one memo (Groebner bases per order, Hilbert series,
/// saturation); the memo only ever caches values determined by the
/// generators, so an Ideal behaves as an immutable value.
class Ideal {
 public:
  Ideal(RingSpecPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingSpecPtr ring);
  static Ideal unit(RingSpecPtr ring);
  /// The irrelevant ideal (all variables).
  static Ideal maximal(RingSpecPtr ring);
  /// m^n, generated by all monomials of degree n.
  static Ideal maximal_power(RingSpecPtr ring, unsigned n);

  const RingSpecPtr& ring() const noexcept { return ring_; }
  /// User-level generators; D is implicit.
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  /// Generators followed by the defining ideal.
  std::vector<Polynomial> ambient_generators() const;

  const GroebnerBasis& groebner_basis() const;
  const GroebnerBasis& groebner_basis(const MonomialOrder& order) const;

  bool contains(const Polynomial& f) const;
  /// Every generator of `other` lies in this ideal.
  bool contains(const Ideal& other) const;
  /// Two-way membership.
  bool equals(const Ideal& other) const;

  bool is_unit() const;
  /// Zero as an ideal of R, i.e. contained in D.
  bool is_zero() const;
  bool is_homogeneous() const noexcept;

  /// Printed reduced grevlex basis; equal ideals give equal keys.
  const std::string& key() const;
  /// Same ideal generated by its reduced grevlex basis minus elements of D,
  /// largest leading monomial first.
  Ideal minimalized() const;

  /// Generators joined by ", ".
  std::string to_string() const;

  // memo hooks used by the ideal operations
  std::optional<Ideal> cached_saturation() const;
  void store_saturation(const Ideal& saturation) const;
  std::optional<HilbertSeries> cached_series() const;
  void store_series(const HilbertSeries& series) const;

 private:
  struct Memo;
  RingSpecPtr ring_;
  std::vector<Polynomial> generators_;
  bool homogeneous_ = true;
  std::shared_ptr<Memo> memo_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal elt_times_ideal(const Polynomial& x, const Ideal& k);
Ideal add_generators(const Ideal& a, const std::vector<Polynomial>& extra);

/// I intersected with the subring of the last n - k variables (kept as an
/// ideal of the same ring).
Ideal eliminate(const Ideal& ideal, std::size_t k);

/// t*I + (1 - t)*J with t eliminated.
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

/// (I : f). Uses Bayer's grevlex trick when I is homogeneous and f is a power
/// of a linear form; otherwise (I intersect (f)) / f.
Ideal colon_element(const Ideal& ideal, const Polynomial& f);
/// The generic route of colon_element, always through an intersection.
Ideal colon_element_by_intersection(const Ideal& ideal, const Polynomial& f);
Ideal colon_ideal(const Ideal& ideal, const Ideal& k);

/// (I : f^infinity).
Ideal saturate_element(const Ideal& ideal, const Polynomial& f);
/// The generic route: iterate colon_element until (I:f^k) = (I:f^{k+1}).
Ideal saturate_element_by_iteration(const Ideal& ideal, const Polynomial& f);
/// I^sat, the saturation at the irrelevant ideal. Memoized on the ideal.
Ideal saturate_m(const Ideal& ideal);

/// Generated by g^q for each user-level generator g; D kept unraised.
Ideal frobenius_power(const Ideal& ideal, std::uint64_t q);

/// Requires homogeneous input. Memoized on the ideal.
HilbertSeries hilbert_series(const Ideal& ideal);
/// Krull dimension of R/I, nullopt when I is the unit ideal.
std::optional<std::size_t> krull_dimension(const Ideal& ideal);
/// Krull dimension of R itself.
std::size_t ring_dimension(const RingSpecPtr& ring);
/// l(R/I); throws NotMPrimary for positive-dimensional quotients.
std::uint64_t colength(const Ideal& ideal);
/// l(H^0_m(R/I)) = l(I^sat / I).
std::uint64_t h0_length(const Ideal& ideal);
/// h0_length starting from a known saturation of `ideal`.
std::uint64_t h0_length(const Ideal& ideal, const Ideal& saturation);

/// If f = c * l^m for a linear form l, returns (l, m).
std::optional<std::pair<Polynomial, unsigned>> as_linear_power(const Polynomial& f);

}  // namespace hkfun
