#include "hkfun/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "hkfun/errors.hpp"

namespace hkfun {

Monomial::Monomial(std::size_t nvars) : size_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables) throw PreconditionError("too many variables");
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  std::uint64_t degree = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    check_degree(exponents[i]);
    exp_[i] = static_cast<Exponent>(exponents[i]);
    degree += exponents[i];
  }
  check_degree(degree);
  degree_ = static_cast<std::uint32_t>(degree);
}

void Monomial::check_degree(std::uint64_t degree) const {
  if (degree > std::numeric_limits<Exponent>::max())
    throw PreconditionError("monomial degree exceeds supported range");
}

void Monomial::set(std::size_t i, unsigned e) {
  std::uint64_t degree = std::uint64_t{degree_} - exp_[i] + e;
  check_degree(degree);
  exp_[i] = static_cast<Exponent>(e);
  degree_ = static_cast<std::uint32_t>(degree);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size_);
  a.check_degree(std::uint64_t{a.degree_} + b.degree_);
  for (std::size_t i = 0; i < a.size_; ++i) r.exp_[i] = static_cast<Monomial::Exponent>(a.exp_[i] + b.exp_[i]);
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) r.exp_[i] = static_cast<Monomial::Exponent>(a.exp_[i] - b.exp_[i]);
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size_);
  std::uint32_t degree = 0;
  for (std::size_t i = 0; i < a.size_; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    degree += r.exp_[i];
  }
  r.check_degree(degree);
  r.degree_ = degree;
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.size_);
  std::uint32_t degree = 0;
  for (std::size_t i = 0; i < a.size_; ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    degree += r.exp_[i];
  }
  r.degree_ = degree;
  return r;
}

Monomial Monomial::pow(unsigned k) const {
  Monomial r(size_);
  check_degree(std::uint64_t{degree_} * k);
  for (std::size_t i = 0; i < size_; ++i) r.exp_[i] = static_cast<Exponent>(exp_[i] * k);
  r.degree_ = degree_ * k;
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= exp_[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

namespace {

int revlex_tail(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) noexcept {
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

unsigned partial_degree(const Monomial& m, std::size_t begin, std::size_t end) noexcept {
  unsigned d = 0;
  for (std::size_t i = begin; i < end; ++i) d += m[i];
  return d;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::kGrevlex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return revlex_tail(a, b, 0, n);
    case Kind::kLex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case Kind::kBlockElimination: {
      const std::size_t k = std::min(block_, n);
      unsigned da = partial_degree(a, 0, k), db = partial_degree(b, 0, k);
      if (da != db) return da > db ? 1 : -1;
      if (int c = revlex_tail(a, b, 0, k); c != 0) return c;
      unsigned ra = a.degree() - da, rb = b.degree() - db;
      if (ra != rb) return ra > rb ? 1 : -1;
      return revlex_tail(a, b, k, n);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::kGrevlex: return "grevlex";
    case Kind::kLex: return "lex";
    case Kind::kBlockElimination: return "eliminate(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace hkfun
