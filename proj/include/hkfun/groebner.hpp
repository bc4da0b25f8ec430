#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hkfun/polynomial.hpp"

namespace hkfun {

struct GroebnerOptions {
  /// Maximum number of S-pairs processed by one basis computation.
  std::size_t max_pairs = 20'000'000;
};

/// Options in effect for the calling thread.
GroebnerOptions& groebner_options() noexcept;

/// Installs options for the current thread until destroyed.
class ScopedGroebnerOptions {
 public:
  explicit ScopedGroebnerOptions(GroebnerOptions options) : saved_(groebner_options()) {
    groebner_options() = options;
  }
  ~ScopedGroebnerOptions() { groebner_options() = saved_; }
  ScopedGroebnerOptions(const ScopedGroebnerOptions&) = delete;
  ScopedGroebnerOptions& operator=(const ScopedGroebnerOptions&) = delete;

 private:
  GroebnerOptions saved_;
};

class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, bool reduced)
      : ring_(std::move(ring)), elements_(std::move(elements)), reduced_(reduced) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return ring_->order(); }
  /// Sorted ascending by leading monomial when reduced.
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  bool reduced() const noexcept { return reduced_; }
  bool is_zero_ideal() const noexcept { return elements_.empty(); }
  bool is_unit_ideal() const noexcept { return elements_.size() == 1 && elements_[0].is_unit(); }

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  std::vector<Monomial> leading_monomials() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
  bool reduced_;
};

/// Reduced Groebner basis of the generators in the order of `ring`. All
/// generators must belong to `ring`. Throws BudgetExceeded when the active
/// pair budget runs out.
GroebnerBasis groebner_basis(const RingPtr& ring, std::span<const Polynomial> generators);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

}  // namespace hkfun
