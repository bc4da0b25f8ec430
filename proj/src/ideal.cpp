#include "hkfun/ideal.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <mutex>

#include "hkfun/errors.hpp"

namespace hkfun {

struct Ideal::Memo {
  std::mutex mutex;
  std::map<MonomialOrder, std::shared_ptr<const GroebnerBasis>> bases;
  std::optional<std::string> key;
  std::optional<HilbertSeries> series;
  std::optional<Ideal> saturation;
};

Ideal::Ideal(RingSpecPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), memo_(std::make_shared<Memo>()) {
  generators_.reserve(generators.size());
  for (auto& g : generators) {
    require_same_ring(*g.ring(), *ring_->ambient());
    if (g.is_zero()) continue;
    if (std::find(generators_.begin(), generators_.end(), g) != generators_.end()) continue;
    if (!g.is_homogeneous()) homogeneous_ = false;
    generators_.push_back(std::move(g));
  }
}

Ideal Ideal::zero(RingSpecPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::unit(RingSpecPtr ring) {
  auto one = ring->one();
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(RingSpecPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->variable(i));
  return Ideal(std::move(ring), std::move(vars));
}

Ideal Ideal::maximal_power(RingSpecPtr ring, unsigned n) {
  const std::size_t nv = ring->nvars();
  std::vector<Polynomial> gens;
  std::vector<unsigned> exps(nv, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned left) {
    if (var + 1 == nv) {
      exps[var] = left;
      gens.push_back(Polynomial::monomial(ring->ambient(), Monomial(std::span<const unsigned>(exps))));
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      exps[var] = e;
      rec(var + 1, left - e);
    }
  };
  if (nv == 0) return n == 0 ? unit(ring) : zero(ring);
  rec(0, n);
  return Ideal(std::move(ring), std::move(gens));
}

std::vector<Polynomial> Ideal::ambient_generators() const {
  std::vector<Polynomial> all = generators_;
  for (const auto& d : ring_->defining_ideal()) all.push_back(d);
  return all;
}

const GroebnerBasis& Ideal::groebner_basis() const { return groebner_basis(MonomialOrder::grevlex()); }

const GroebnerBasis& Ideal::groebner_basis(const MonomialOrder& order) const {
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->bases.find(order); it != memo_->bases.end()) return *it->second;
  }
  RingPtr target = order == ring_->ambient()->order() ? ring_->ambient() : ring_->ambient()->with_order(order);
  std::vector<Polynomial> gens;
  for (const auto& g : ambient_generators()) gens.push_back(g.in_ring(target));
  auto basis = std::make_shared<const GroebnerBasis>(hkfun::groebner_basis(target, gens));
  std::lock_guard lock(memo_->mutex);
  auto [it, inserted] = memo_->bases.emplace(order, std::move(basis));
  return *it->second;
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(*f.ring(), *ring_->ambient());
  return groebner_basis().contains(f);
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(*ring_, *other.ring_);
  for (const auto& g : other.generators_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::equals(const Ideal& other) const { return contains(other) && other.contains(*this); }

bool Ideal::is_unit() const { return groebner_basis().is_unit_ideal(); }

bool Ideal::is_zero() const {
  if (generators_.empty()) return true;
  return Ideal::zero(ring_).contains(*this);
}

bool Ideal::is_homogeneous() const noexcept { return homogeneous_; }

const std::string& Ideal::key() const {
  {
    std::lock_guard lock(memo_->mutex);
    if (memo_->key) return *memo_->key;
  }
  std::string key;
  for (const auto& g : groebner_basis().elements()) {
    if (!key.empty()) key += "; ";
    key += hkfun::to_string(g);
  }
  std::lock_guard lock(memo_->mutex);
  if (!memo_->key) memo_->key = std::move(key);
  return *memo_->key;
}

Ideal Ideal::minimalized() const {
  // largest leading monomial first
  std::vector<Polynomial> gens;
  const auto& basis = groebner_basis().elements();
  std::optional<Ideal> zero_ideal;
  if (ring_->has_quotient()) zero_ideal = Ideal::zero(ring_);
  for (auto it = basis.rbegin(); it != basis.rend(); ++it)
    if (!zero_ideal || !zero_ideal->contains(*it)) gens.push_back(*it);
  Ideal result(ring_, std::move(gens));
  // the basis of the original ideal is also the basis of the result
  std::lock_guard lock(memo_->mutex);
  if (auto it = memo_->bases.find(MonomialOrder::grevlex()); it != memo_->bases.end())
    result.memo_->bases.emplace(it->first, it->second);
  result.memo_->series = memo_->series;
  result.memo_->saturation = memo_->saturation;
  result.memo_->key = memo_->key;
  return result;
}

std::string Ideal::to_string() const {
  if (generators_.empty()) return "0";
  std::string out;
  for (const auto& g : generators_) {
    if (!out.empty()) out += ", ";
    out += hkfun::to_string(g);
  }
  return out;
}

std::optional<Ideal> Ideal::cached_saturation() const {
  std::lock_guard lock(memo_->mutex);
  return memo_->saturation;
}

void Ideal::store_saturation(const Ideal& saturation) const {
  std::lock_guard lock(memo_->mutex);
  if (!memo_->saturation) memo_->saturation = saturation;
}

std::optional<HilbertSeries> Ideal::cached_series() const {
  std::lock_guard lock(memo_->mutex);
  return memo_->series;
}

void Ideal::store_series(const HilbertSeries& series) const {
  std::lock_guard lock(memo_->mutex);
  if (!memo_->series) memo_->series = series;
}

// ---------------------------------------------------------------------------
// Generator-level constructions

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  return add_generators(a, b.generators());
}

Ideal add_generators(const Ideal& a, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal elt_times_ideal(const Polynomial& x, const Ideal& k) {
  std::vector<Polynomial> gens;
  for (const auto& g : k.generators()) gens.push_back(x * g);
  return Ideal(k.ring(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Elimination and intersection

namespace {

bool free_of_first(const Polynomial& f, std::size_t k) {
  for (const auto& t : f.terms())
    for (std::size_t v = 0; v < k; ++v)
      if (t.monomial[v] != 0) return false;
  return true;
}

RingPtr extended_ring(const PolynomialRing& base) {
  std::string aux = "_t";
  while (base.index_of(aux)) aux += "_";
  std::vector<std::string> names{aux};
  names.insert(names.end(), base.names().begin(), base.names().end());
  return std::make_shared<const PolynomialRing>(base.field(), std::move(names), MonomialOrder::elimination(1));
}

Polynomial lift(const Polynomial& f, const RingPtr& ext, unsigned t_exponent) {
  const std::size_t n = f.ring()->nvars();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(n + 1);
    m.set(0, t_exponent);
    for (std::size_t v = 0; v < n; ++v) m.set(v + 1, t.monomial[v]);
    terms.push_back({m, t.coeff});
  }
  return Polynomial(ext, std::move(terms));
}

Polynomial drop_first(const Polynomial& f, const RingPtr& base) {
  const std::size_t n = base->nvars();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(n);
    for (std::size_t v = 0; v < n; ++v) m.set(v, t.monomial[v + 1]);
    terms.push_back({m, t.coeff});
  }
  return Polynomial(base, std::move(terms));
}

// (a) intersect (b) as ambient ideals of S, no implicit D.
std::vector<Polynomial> intersect_ambient(const RingPtr& base, const std::vector<Polynomial>& a,
                                          const std::vector<Polynomial>& b) {
  RingPtr ext = extended_ring(*base);
  std::vector<Polynomial> gens;
  gens.reserve(a.size() + 2 * b.size());
  for (const auto& f : a) gens.push_back(lift(f, ext, 1));
  for (const auto& g : b) gens.push_back(lift(g, ext, 0) - lift(g, ext, 1));
  GroebnerBasis basis = groebner_basis(ext, gens);
  std::vector<Polynomial> out;
  for (const auto& g : basis.elements())
    if (free_of_first(g, 1)) out.push_back(drop_first(g, base));
  return out;
}

}  // namespace

Ideal eliminate(const Ideal& ideal, std::size_t k) {
  if (k > ideal.ring()->nvars()) throw PreconditionError("cannot eliminate more variables than the ring has");
  if (k == 0) return ideal;
  const GroebnerBasis& basis = ideal.groebner_basis(MonomialOrder::elimination(k));
  std::vector<Polynomial> gens;
  for (const auto& g : basis.elements())
    if (free_of_first(g, k)) gens.push_back(g.in_ring(ideal.ring()->ambient()));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  if (a.is_unit() || a.contains(b)) return b;
  if (b.is_unit() || b.contains(a)) return a;
  return Ideal(a.ring(), intersect_ambient(a.ring()->ambient(), a.ambient_generators(), b.ambient_generators()));
}

// ---------------------------------------------------------------------------
// Colon and saturation

std::optional<std::pair<Polynomial, unsigned>> as_linear_power(const Polynomial& f) {
  if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1) return std::nullopt;
  const RingPtr& ring = f.ring();
  const auto& field = ring->field();
  const std::size_t n = ring->nvars();
  const auto m = static_cast<unsigned>(f.degree());

  std::vector<Coeff> pure(n, 0);
  for (const auto& t : f.terms())
    for (std::size_t v = 0; v < n; ++v)
      if (t.monomial[v] == m) pure[v] = t.coeff;
  std::size_t k = n;
  for (std::size_t v = n; v-- > 0;)
    if (pure[v] != 0) {
      k = v;
      break;
    }
  if (k == n) return std::nullopt;
  if (f.size() == 1) return std::make_pair(Polynomial::variable(ring, k), m);

  const std::uint32_t p = field.characteristic();
  if (p > (1u << 16)) return std::nullopt;
  // candidate coefficients a_v with a_v^m = pure[v] / pure[k], a_k = 1
  std::vector<std::vector<Coeff>> roots(n);
  std::size_t combos = 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (v == k) {
      roots[v] = {1};
    } else if (pure[v] == 0) {
      roots[v] = {0};
    } else {
      Coeff target = field.div(pure[v], pure[k]);
      for (Coeff a = 1; a < p; ++a)
        if (field.pow(a, m) == target) roots[v].push_back(a);
      if (roots[v].empty()) return std::nullopt;
    }
    combos *= roots[v].size();
    if (combos > 256) return std::nullopt;
  }
  // m = p^a * b: l^m = (l^b)^(p^a)
  unsigned b = m;
  std::uint64_t pa = 1;
  while (b % p == 0) {
    b /= p;
    pa *= p;
  }
  std::vector<std::size_t> choice(n, 0);
  for (std::size_t c = 0; c < combos; ++c) {
    std::size_t rest = c;
    Polynomial ell(ring);
    for (std::size_t v = 0; v < n; ++v) {
      choice[v] = rest % roots[v].size();
      rest /= roots[v].size();
      ell += Polynomial::variable(ring, v).scale(roots[v][choice[v]]);
    }
    Polynomial power = ell.pow(b).frobenius(pa).scale(pure[k]);
    if (power == f) return std::make_pair(ell, m);
  }
  return std::nullopt;
}

namespace {

constexpr unsigned kInfinite = std::numeric_limits<unsigned>::max();

// (I : l^m) for homogeneous I and a linear form l, m = kInfinite for
// saturation. Coordinates are changed so that l becomes the last (smallest)
// grevlex variable; then a grevlex basis divided by the largest admissible
// power of that variable generates the colon.
Ideal colon_linear_power(const Ideal& ideal, const Polynomial& ell, unsigned m) {
  const RingPtr& base = ideal.ring()->ambient();
  const auto& field = base->field();
  const std::size_t n = base->nvars();
  std::size_t k = n;
  Coeff ak = 0;
  for (std::size_t v = n; v-- > 0 && k == n;)
    for (const auto& t : ell.terms())
      if (t.monomial[v] == 1) {
        k = v;
        ak = t.coeff;
        break;
      }
  auto position = [&](std::size_t v) { return v < k ? v : v - 1; };

  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v)
    if (v != k) names.push_back(base->names()[v]);
  names.push_back(base->names()[k]);
  RingPtr moved = std::make_shared<const PolynomialRing>(field, std::move(names), MonomialOrder::grevlex());

  std::vector<Polynomial> forward;
  Polynomial last = Polynomial::variable(moved, n - 1);
  for (std::size_t v = 0; v < n; ++v) {
    if (v == k) {
      forward.push_back(Polynomial(moved));
      continue;
    }
    forward.push_back(Polynomial::variable(moved, position(v)));
  }
  {
    Polynomial image = last;
    for (const auto& t : ell.terms()) {
      std::size_t v = 0;
      while (t.monomial[v] == 0) ++v;
      if (v != k) image -= Polynomial::variable(moved, position(v)).scale(t.coeff);
    }
    forward[k] = image.scale(field.inv(ak));
  }
  std::vector<Polynomial> backward(n, Polynomial(base));
  for (std::size_t v = 0; v < n; ++v)
    if (v != k) backward[position(v)] = Polynomial::variable(base, v);
  backward[n - 1] = ell;

  std::vector<Polynomial> gens;
  for (const auto& g : ideal.ambient_generators()) gens.push_back(substitute(g, forward, moved));
  GroebnerBasis basis = groebner_basis(moved, gens);

  std::vector<Polynomial> result;
  for (const auto& g : basis.elements()) {
    unsigned e = std::min(g.min_exponent(n - 1), m);
    std::vector<Term> terms = g.terms();
    for (auto& t : terms) t.monomial.set(n - 1, t.monomial[n - 1] - e);
    result.push_back(substitute(Polynomial::from_sorted(moved, std::move(terms)), backward, base));
  }
  return Ideal(ideal.ring(), std::move(result));
}

}  // namespace

Ideal colon_element_by_intersection(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(*f.ring(), *ideal.ring()->ambient());
  if (f.is_zero()) throw PreconditionError("colon by the zero element");
  if (f.is_constant()) return ideal;
  std::vector<Polynomial> quotients;
  for (const auto& g : intersect_ambient(ideal.ring()->ambient(), ideal.ambient_generators(), {f})) {
    auto q = divide_exact(g, f);
    if (!q) throw InternalError("intersection generator not divisible by " + to_string(f));
    quotients.push_back(std::move(*q));
  }
  return Ideal(ideal.ring(), std::move(quotients));
}

Ideal colon_element(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(*f.ring(), *ideal.ring()->ambient());
  if (f.is_zero()) throw PreconditionError("colon by the zero element");
  if (f.is_constant()) return ideal;
  if (ideal.is_homogeneous() && f.is_homogeneous()) {
    if (auto lp = as_linear_power(f)) return colon_linear_power(ideal, lp->first, lp->second);
  }
  return colon_element_by_intersection(ideal, f);
}

Ideal colon_ideal(const Ideal& ideal, const Ideal& k) {
  require_same_ring(*ideal.ring(), *k.ring());
  if (k.is_zero()) throw PreconditionError("colon by the zero ideal");
  std::optional<Ideal> result;
  Ideal zero_ideal = Ideal::zero(ideal.ring());
  for (const auto& g : k.generators()) {
    if (zero_ideal.contains(g)) continue;  // (I : 0) = R
    Ideal part = colon_element(ideal, g);
    result = result ? ideal_intersection(*result, part) : part;
  }
  return *result;
}

Ideal saturate_element_by_iteration(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("saturation by the zero element");
  Ideal current = ideal;
  while (true) {
    Ideal next = colon_element(current, f);
    if (current.contains(next)) return current;
    current = next;
  }
}

Ideal saturate_element(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(*f.ring(), *ideal.ring()->ambient());
  if (f.is_zero()) throw PreconditionError("saturation by the zero element");
  if (f.is_constant()) return ideal;
  if (ideal.is_homogeneous() && f.is_homogeneous()) {
    if (auto lp = as_linear_power(f)) return colon_linear_power(ideal, lp->first, kInfinite);
  }
  return saturate_element_by_iteration(ideal, f);
}

Ideal saturate_m(const Ideal& ideal) {
  if (auto cached = ideal.cached_saturation()) return *cached;
  if (ideal.is_unit()) {
    ideal.store_saturation(ideal);
    return ideal;
  }
  std::vector<Ideal> parts;
  for (std::size_t v = 0; v < ideal.ring()->nvars(); ++v) {
    Ideal part = saturate_element(ideal, ideal.ring()->variable(v));
    if (ideal.contains(part)) {
      // I^sat is contained in every (I : x_v^inf)
      ideal.store_saturation(ideal);
      return ideal;
    }
    if (!part.is_unit()) parts.push_back(std::move(part));
  }
  Ideal result = Ideal::unit(ideal.ring());
  for (const auto& part : parts) result = ideal_intersection(result, part);
  ideal.store_saturation(result);
  return result;
}

Ideal frobenius_power(const Ideal& ideal, std::uint64_t q) {
  if (!ideal.ring()->field().log_characteristic(q))
    throw PreconditionError(std::to_string(q) + " is not a power of the characteristic " +
                            std::to_string(ideal.ring()->characteristic()));
  if (q == 1) return ideal;
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(g.frobenius(q));
  return Ideal(ideal.ring(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Hilbert series and lengths

HilbertSeries hilbert_series(const Ideal& ideal) {
  if (auto cached = ideal.cached_series()) return *cached;
  if (!ideal.is_homogeneous()) throw NotHomogeneous("ideal (" + ideal.to_string() + ")");
  HilbertSeries series;
  series.ambient_dim = ideal.ring()->nvars();
  series.numerator = monomial_ideal_numerator(ideal.groebner_basis().leading_monomials());
  if (ideal.groebner_basis().is_zero_ideal()) series.numerator = UniPolynomial::one();
  ideal.store_series(series);
  return series;
}

std::optional<std::size_t> krull_dimension(const Ideal& ideal) { return hilbert_series(ideal).dimension(); }

std::size_t ring_dimension(const RingSpecPtr& ring) {
  auto d = krull_dimension(Ideal::zero(ring));
  if (!d) throw PreconditionError("the ring is the zero ring");
  return *d;
}

std::uint64_t colength(const Ideal& ideal) {
  HilbertSeries series = hilbert_series(ideal);
  auto dim = series.dimension();
  if (!dim) return 0;
  if (*dim != 0) throw NotMPrimary("R/(" + ideal.to_string() + ") has dimension " + std::to_string(*dim));
  return static_cast<std::uint64_t>(series.reduced_numerator().at_one());
}

std::uint64_t h0_length(const Ideal& ideal, const Ideal& saturation) {
  HilbertSeries a = hilbert_series(ideal);
  HilbertSeries b = hilbert_series(saturation);
  UniPolynomial diff = a.numerator - b.numerator;
  for (std::size_t r = 0; r < a.ambient_dim; ++r) {
    auto q = diff.divide_one_minus_t();
    if (!q) throw InternalError("I^sat/I is not of finite length for (" + ideal.to_string() + ")");
    diff = *q;
  }
  for (auto c : diff.coeffs())
    if (c < 0) throw InternalError("negative Hilbert function for I^sat/I of (" + ideal.to_string() + ")");
  return static_cast<std::uint64_t>(diff.at_one());
}

std::uint64_t h0_length(const Ideal& ideal) {
  if (ideal.is_unit()) return 0;
  if (!ideal.is_homogeneous()) throw NotHomogeneous("ideal (" + ideal.to_string() + ")");
  return h0_length(ideal, saturate_m(ideal));
}

}  // namespace hkfun
