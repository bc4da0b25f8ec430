#include "hkfun/ring.hpp"

#include "hkfun/errors.hpp"
#include "hkfun/parse.hpp"

namespace hkfun {

RingSpec::RingSpec(RingPtr ambient, std::vector<Polynomial> defining_ideal)
    : ambient_(std::move(ambient)), defining_(std::move(defining_ideal)) {
  if (ambient_->order() != MonomialOrder::grevlex()) throw PreconditionError("ring presentation must use grevlex");
  if (ambient_->nvars() + 1 > kMaxVariables)
    throw PreconditionError("at most " + std::to_string(kMaxVariables - 1) + " variables are supported");
  for (const auto& name : ambient_->names())
    if (!is_identifier(name)) throw PreconditionError("invalid variable name '" + name + "'");
  std::erase_if(defining_, [](const Polynomial& f) { return f.is_zero(); });
  for (const auto& f : defining_) {
    require_same_ring(*f.ring(), *ambient_);
    if (!f.is_homogeneous() || f.degree() <= 0)
      throw NotHomogeneous("defining ideal generator " + to_string(f) + " must be homogeneous of positive degree");
  }
}

std::shared_ptr<const RingSpec> RingSpec::create(std::uint32_t p, std::vector<std::string> variables,
                                                 const std::vector<std::string>& quotient) {
  for (const auto& name : variables)
    if (!is_identifier(name)) throw PreconditionError("invalid variable name '" + name + "'");
  auto ambient = PolynomialRing::create(p, std::move(variables));
  std::vector<Polynomial> defining;
  for (const auto& text : quotient) defining.push_back(parse_polynomial(text, ambient));
  return std::make_shared<const RingSpec>(ambient, std::move(defining));
}

Polynomial RingSpec::parse(std::string_view text) const { return parse_polynomial(text, ambient_); }

std::string RingSpec::header() const {
  std::string out = "ring p=" + std::to_string(characteristic()) + " vars=";
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (i) out += ',';
    out += variables()[i];
  }
  if (has_quotient()) {
    out += " quotient=";
    for (std::size_t i = 0; i < defining_.size(); ++i) {
      if (i) out += ';';
      out += to_string(defining_[i]);
    }
  }
  return out;
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  return *a.ambient_ == *b.ambient_ && a.defining_ == b.defining_;
}

void require_same_ring(const RingSpec& a, const RingSpec& b) {
  if (&a != &b && !(a == b)) throw RingMismatch();
}

}  // namespace hkfun
