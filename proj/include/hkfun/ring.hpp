#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hkfun/polynomial.hpp"

namespace hkfun {

/// R = S/D with S = F_p[vars] (standard grading, grevlex) and D an optional
/// homogeneous defining ideal. Ideals of R are stored as ambient ideals that
/// implicitly contain D.
class RingSpec {
 public:
  RingSpec(RingPtr ambient, std::vector<Polynomial> defining_ideal);

  static std::shared_ptr<const RingSpec> create(std::uint32_t p, std::vector<std::string> variables,
                                                const std::vector<std::string>& quotient = {});

  std::uint32_t characteristic() const noexcept { return ambient_->field().characteristic(); }
  const PrimeField& field() const noexcept { return ambient_->field(); }
  const RingPtr& ambient() const noexcept { return ambient_; }
  std::size_t nvars() const noexcept { return ambient_->nvars(); }
  const std::vector<std::string>& variables() const noexcept { return ambient_->names(); }
  const std::vector<Polynomial>& defining_ideal() const noexcept { return defining_; }
  bool has_quotient() const noexcept { return !defining_.empty(); }

  Polynomial parse(std::string_view text) const;
  Polynomial variable(std::size_t i) const { return Polynomial::variable(ambient_, i); }
  Polynomial one() const { return Polynomial::constant(ambient_, 1); }

  /// `ring p=<p> vars=<a,b,..>[ quotient=<f;g;..>]`
  std::string header() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b);

 private:
  RingPtr ambient_;
  std::vector<Polynomial> defining_;
};

using RingSpecPtr = std::shared_ptr<const RingSpec>;

void require_same_ring(const RingSpec& a, const RingSpec& b);

}  // namespace hkfun
