#include "hkfun/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hkfun/errors.hpp"

namespace hkfun {

PolynomialRing::PolynomialRing(PrimeField field, std::vector<std::string> names, MonomialOrder order)
    : field_(field), names_(std::move(names)), order_(order) {
  if (names_.size() > kMaxVariables) throw PreconditionError("too many variables");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw PreconditionError("variable names must be unique");
}

std::shared_ptr<const PolynomialRing> PolynomialRing::create(std::uint32_t p, std::vector<std::string> names,
                                                             MonomialOrder order) {
  return std::make_shared<const PolynomialRing>(PrimeField(p), std::move(names), order);
}

std::optional<std::size_t> PolynomialRing::index_of(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::shared_ptr<const PolynomialRing> PolynomialRing::with_order(MonomialOrder order) const {
  return std::make_shared<const PolynomialRing>(field_, names_, order);
}

void require_same_ring(const PolynomialRing& a, const PolynomialRing& b) {
  if (&a != &b && !(a == b)) throw RingMismatch();
}

namespace {

void normalize(const PolynomialRing& ring, std::vector<Term>& terms) {
  const auto& order = ring.order();
  const auto& field = ring.field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = terms[i];
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].monomial == acc.monomial) {
      acc.coeff = field.add(acc.coeff, terms[j].coeff);
      ++j;
    }
    if (acc.coeff != 0) terms[out++] = acc;
    i = j;
  }
  terms.resize(out);
}

std::vector<Term> merge_add(const PolynomialRing& ring, std::span<const Term> a, std::span<const Term> b,
                            bool subtract) {
  const auto& order = ring.order();
  const auto& field = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = order.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = b[j++];
      if (subtract) t.coeff = field.neg(t.coeff);
      out.push_back(t);
    } else {
      Coeff s = subtract ? field.sub(a[i].coeff, b[j].coeff) : field.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back({a[i].monomial, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    Term t = b[j];
    if (subtract) t.coeff = field.neg(t.coeff);
    out.push_back(t);
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (auto& t : terms_) {
    if (t.monomial.size() != ring_->nvars()) throw PreconditionError("monomial has wrong number of variables");
    t.coeff %= ring_->field().characteristic();
  }
  normalize(*ring_, terms_);
}

Polynomial Polynomial::constant(RingPtr ring, Coeff c) {
  Monomial one(ring->nvars());
  return Polynomial(ring, {{one, c}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->nvars());
  m.set(index, 1);
  return Polynomial(std::move(ring), {{m, 1}});
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Coeff c) {
  return Polynomial(std::move(ring), {{m, c}});
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial f(std::move(ring));
  f.terms_ = std::move(terms);
  return f;
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

unsigned Polynomial::min_exponent(std::size_t var) const noexcept {
  if (terms_.empty()) return 0;
  unsigned e = terms_.front().monomial[var];
  for (const auto& t : terms_) e = std::min(e, t.monomial[var]);
  return e;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(*ring_, *other.ring_);
  terms_ = merge_add(*ring_, terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(*ring_, *other.ring_);
  terms_ = merge_add(*ring_, terms_, other.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (b.size() == 1) return a.mul_term(b.terms_[0].monomial, b.terms_[0].coeff);
  if (a.size() == 1) return b.mul_term(a.terms_[0].monomial, a.terms_[0].coeff);
  const auto& field = a.ring_->field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial, 0);
      it->second = field.add(it->second, field.mul(s.coeff, t.coeff));
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, c});
  return Polynomial(a.ring_, std::move(terms));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::scale(Coeff c) const {
  c %= ring_->field().characteristic();
  if (c == 0) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, Coeff c) const {
  c %= ring_->field().characteristic();
  if (c == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves the (multiplicative) order
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, ring_->field().mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::frobenius(std::uint64_t q) const {
  if (!ring_->field().log_characteristic(q))
    throw PreconditionError(std::to_string(q) + " is not a power of the characteristic");
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  // m -> m^q is strictly monotone for every supported order
  for (const auto& t : terms_) r.terms_.push_back({t.monomial.pow(static_cast<unsigned>(q)), t.coeff});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::in_ring(const RingPtr& other) const {
  if (other->nvars() != ring_->nvars() || !(other->field() == ring_->field())) throw RingMismatch();
  if (other->order() == ring_->order()) {
    Polynomial r(other);
    r.terms_ = terms_;
    return r;
  }
  return Polynomial(other, terms_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  return a.terms_ == b.terms_;
}

std::vector<Term> sub_mul_terms(const PolynomialRing& ring, std::span<const Term> f, Coeff c, const Monomial& m,
                                std::span<const Term> g) {
  const auto& order = ring.order();
  const auto& field = ring.field();
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() && j < g.size()) {
    Monomial gm = g[j].monomial * m;
    int cmp = order.compare(f[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, field.neg(field.mul(c, g[j].coeff))});
      ++j;
    } else {
      Coeff s = field.sub(f[i].coeff, field.mul(c, g[j].coeff));
      if (s != 0) out.push_back({f[i].monomial, s});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back({g[j].monomial * m, field.neg(field.mul(c, g[j].coeff))});
  return out;
}

Polynomial reduce_by(const Polynomial& f, std::span<const Polynomial> divisors) {
  const auto& ring = *f.ring();
  const auto& field = ring.field();
  std::vector<Term> current = f.terms();
  std::vector<Term> remainder;
  std::size_t pos = 0;
  while (pos < current.size()) {
    const Term& lead = current[pos];
    const Polynomial* divisor = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(lead.monomial)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(lead);
      ++pos;
      continue;
    }
    Coeff c = field.div(lead.coeff, divisor->leading_coeff());
    Monomial m = lead.monomial / divisor->leading_monomial();
    current = sub_mul_terms(ring, std::span<const Term>(current).subspan(pos), c, m, divisor->terms());
    pos = 0;
  }
  return Polynomial::from_sorted(f.ring(), std::move(remainder));
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(*f.ring(), *g.ring());
  if (g.is_zero()) throw DivisionByZero();
  const auto& ring = *f.ring();
  const auto& field = ring.field();
  std::vector<Term> current = f.terms();
  std::vector<Term> quotient;
  while (!current.empty()) {
    const Term& lead = current.front();
    if (!g.leading_monomial().divides(lead.monomial)) return std::nullopt;
    Coeff c = field.div(lead.coeff, g.leading_coeff());
    Monomial m = lead.monomial / g.leading_monomial();
    quotient.push_back({m, c});
    current = sub_mul_terms(ring, current, c, m, g.terms());
  }
  // quotient terms come out in descending order
  return Polynomial::from_sorted(f.ring(), std::move(quotient));
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images, const RingPtr& target) {
  const std::size_t n = f.ring()->nvars();
  if (images.size() != n) throw PreconditionError("substitution needs one image per variable");
  const auto& field = target->field();
  std::vector<std::vector<Polynomial>> powers(n);
  auto power_of = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (std::size_t v = 0; v < n && !prod.is_zero(); ++v) {
      unsigned e = t.monomial[v];
      if (e > 0) prod = prod * power_of(v, e);
    }
    for (const auto& pt : prod.terms()) {
      auto [it, inserted] = acc.try_emplace(pt.monomial, 0);
      it->second = field.add(it->second, pt.coeff);
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, c});
  return Polynomial(target, std::move(terms));
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const auto& names = f.ring()->names();
  std::ostringstream out;
  bool first_term = true;
  for (const auto& t : f.terms()) {
    if (!first_term) out << " + ";
    first_term = false;
    bool need_star = false;
    if (t.coeff != 1 || t.monomial.is_one()) {
      out << t.coeff;
      need_star = true;
    }
    for (std::size_t v = 0; v < names.size(); ++v) {
      unsigned e = t.monomial[v];
      if (e == 0) continue;
      if (need_star) out << '*';
      out << names[v];
      if (e > 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }

}  // namespace hkfun
