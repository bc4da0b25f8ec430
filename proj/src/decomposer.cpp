#include "hkfun/decomposer.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "hkfun/errors.hpp"

namespace hkfun {

std::vector<std::uint64_t> default_q_list(std::uint32_t p) {
  std::vector<std::uint64_t> qs{1, p, std::uint64_t{p} * p};
  if (p == 2) qs.push_back(8);
  return qs;
}

std::vector<std::uint64_t> normalize_q_list(std::uint32_t p, std::vector<std::uint64_t> q_list) {
  PrimeField field(p);
  for (auto q : q_list)
    if (!field.log_characteristic(q))
      throw PreconditionError(std::to_string(q) + " is not a power of the characteristic " + std::to_string(p));
  std::sort(q_list.begin(), q_list.end());
  q_list.erase(std::unique(q_list.begin(), q_list.end()), q_list.end());
  return q_list;
}

// ---------------------------------------------------------------------------
// Signed combinations

void SignedCombination::add(std::int64_t coefficient, const Ideal& ideal) {
  require_same_ring(*ideal.ring(), *ring_);
  if (coefficient == 0 || ideal.is_unit()) return;
  if (krull_dimension(ideal) != 0u) throw NotMPrimary("combination term (" + ideal.to_string() + ")");
  Ideal canonical = ideal.minimalized();
  auto it = std::find_if(terms_.begin(), terms_.end(),
                         [&](const CombinationTerm& t) { return t.ideal.key() == canonical.key(); });
  if (it == terms_.end()) {
    terms_.push_back({coefficient, canonical});
    return;
  }
  it->coefficient += coefficient;
  if (it->coefficient == 0) terms_.erase(it);
}

void SignedCombination::add(std::int64_t scale, const SignedCombination& other) {
  for (const auto& t : other.terms()) add(scale * t.coefficient, t.ideal);
}

std::int64_t evaluate_combination(const SignedCombination& combination, std::uint64_t q) {
  std::int64_t total = 0;
  for (const auto& t : combination.terms())
    total += t.coefficient * static_cast<std::int64_t>(colength(frobenius_power(t.ideal, q)));
  return total;
}

// ---------------------------------------------------------------------------
// Certificates

bool ElementRecord::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const ElementCheck& c) { return c.pass; });
}

bool StepRecord::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const StepCheck& c) { return c.pass; });
}

bool Certificate::certified() const {
  return std::all_of(elements.begin(), elements.end(), [](const ElementRecord& r) { return r.pass(); }) &&
         std::all_of(steps.begin(), steps.end(), [](const StepRecord& r) { return r.pass(); }) &&
         std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

Certificate verify_identity(const Ideal& ideal, const SignedCombination& combination,
                            std::span<const std::uint64_t> q_list) {
  require_same_ring(*ideal.ring(), *combination.ring());
  Certificate cert;
  cert.q_list.assign(q_list.begin(), q_list.end());
  for (auto q : q_list) {
    IdentityCheck check;
    check.q = q;
    check.combination = evaluate_combination(combination, q);
    check.ghk = static_cast<std::int64_t>(ghk_value(ideal, q));
    check.pass = check.combination == check.ghk && check.combination >= 0;
    cert.checks.push_back(check);
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Context and element selection

DecompositionContext::DecompositionContext(const RingSpecPtr& ring, DecomposeOptions options)
    : options_(std::move(options)), rng_(options_.seed) {
  if (options_.q_list.empty()) options_.q_list = default_q_list(ring->characteristic());
  options_.q_list = normalize_q_list(ring->characteristic(), options_.q_list);
  if (options_.degree == 0) throw PreconditionError("candidate degree must be positive");
  if (options_.max_degree < options_.degree) options_.max_degree = options_.degree;
  for (const auto& p : options_.preferred) {
    require_same_ring(*p.ring(), *ring->ambient());
    if (p.degree() < 1 || !p.is_homogeneous())
      throw PreconditionError("preferred element " + to_string(p) + " must be homogeneous of positive degree");
  }
  certificate_.seed = options_.seed;
  certificate_.q_list = options_.q_list;
}

std::uint64_t DecompositionContext::h0(const StarExpression& e, std::uint64_t q) {
  Ideal value = evaluate(e, q);
  if (value.is_unit()) return 0;
  return h0_length(value);
}

Coeff sample_coefficient(std::mt19937_64& rng, std::uint32_t p) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - kMax % p;
  while (true) {
    std::uint64_t r = rng();
    if (r < limit) return static_cast<Coeff>(r % p);
  }
}

Polynomial random_homogeneous_form(const RingSpecPtr& ring, unsigned degree, std::mt19937_64& rng) {
  if (degree == 0) throw PreconditionError("random form of degree zero");
  const auto monomials = Ideal::maximal_power(ring, degree).generators();
  while (true) {
    std::vector<Term> terms;
    for (const auto& m : monomials) {
      Coeff c = sample_coefficient(rng, ring->characteristic());
      if (c != 0) terms.push_back({m.leading_monomial(), c});
    }
    if (!terms.empty()) return Polynomial(ring->ambient(), std::move(terms));
  }
}

unsigned family_lc_exponent(const StarExpression& family, DecompositionContext& context) {
  unsigned n = 1;
  for (auto q : context.q_list()) {
    Ideal e = context.evaluate(family, q);
    if (e.is_unit()) continue;
    unsigned nq = annihilator_exponent(e, saturate_m(e));
    n = std::max(n, static_cast<unsigned>((nq + q - 1) / q));
  }
  return n;
}

bool validate_element(const StarExpression& family, const Polynomial& s, DecompositionContext& context,
                      std::vector<ElementCheck>* checks, std::uint64_t* failing_q) {
  bool all = true;
  for (auto q : context.q_list()) {
    Ideal e = context.evaluate(family, q);
    Polynomial sq = s.frobenius(q);
    ElementCheck check;
    check.q = q;
    auto before = krull_dimension(e);
    check.dimension_before = before.value_or(0);
    check.colon_is_saturation = colon_element(e, sq).equals(saturate_m(e));
    if (check.colon_is_saturation) {
      check.dimension_after = krull_dimension(add_generators(e, {sq}));
      check.pass = before && *before > 0 && check.dimension_after && *check.dimension_after + 1 == *before;
    }
    if (checks != nullptr) checks->push_back(check);
    if (!check.pass) {
      if (failing_q != nullptr) *failing_q = q;
      all = false;
      if (checks == nullptr) return false;
    }
  }
  return all;
}

Polynomial choose_element(const StarExpression& family, DecompositionContext& context) {
  const auto& ring = family.ring();
  const std::uint64_t q0 = context.q_list().front();
  auto dim = krull_dimension(context.evaluate(family, q0));
  if (!dim || *dim == 0)
    throw PreconditionError("element selection needs a positive-dimensional family: " + family.to_string());

  const unsigned n = family_lc_exponent(family, context);
  std::set<std::string> tried;
  std::string log;
  std::uint64_t failing_q = q0;
  unsigned attempts = 0;

  auto attempt = [&](const Polynomial& s0, unsigned degree) -> std::optional<Polynomial> {
    ++attempts;
    if (!tried.insert(to_string(s0.monic())).second) return std::nullopt;
    for (unsigned e = 1; e <= n; ++e) {
      Polynomial s = s0.pow(e);
      std::uint64_t bad = q0;
      if (validate_element(family, s, context, nullptr, &bad)) {
        ElementRecord record;
        record.family = family.to_string();
        record.element = to_string(s);
        record.base_form = to_string(s0);
        record.exponent = e;
        record.degree = degree;
        record.attempts = attempts;
        validate_element(family, s, context, &record.checks);
        context.certificate().elements.push_back(std::move(record));
        return s;
      }
      failing_q = bad;
      if (!log.empty()) log += "; ";
      log += "(" + to_string(s0) + ")^" + std::to_string(e) + " fails at q=" + std::to_string(bad);
    }
    return std::nullopt;
  };

  for (const auto& p : context.options().preferred)
    if (auto s = attempt(p, static_cast<unsigned>(p.degree()))) return *s;
  for (unsigned degree = context.options().degree; degree <= context.options().max_degree; ++degree)
    for (unsigned r = 0; r < context.options().retries; ++r)
      if (auto s = attempt(random_homogeneous_form(ring, degree, context.rng()), degree)) return *s;
  throw ElementSelectionFailed("no valid element for " + family.to_string() + " after " + std::to_string(attempts) +
                                   " candidates [" + log + "]",
                               failing_q);
}

// ---------------------------------------------------------------------------
// Rewrites

namespace {

StepRecord check_identity(const std::string& rule, const StarExpression& e, std::int64_t coefficient,
                          DecompositionContext& context,
                          const std::function<std::pair<std::int64_t, std::int64_t>(std::uint64_t)>& sides) {
  StepRecord record;
  record.rule = rule;
  record.expression = e.to_string();
  record.coefficient = coefficient;
  for (auto q : context.q_list()) {
    auto [lhs, rhs] = sides(q);
    record.checks.push_back({q, lhs, rhs, lhs == rhs});
  }
  context.certificate().steps.push_back(record);
  if (!record.pass())
    throw CertificateViolation(rule + " identity failed for " + e.to_string());
  return record;
}

}  // namespace

std::pair<SignedExpression, SignedExpression> split_once(const StarExpression& e, const Polynomial& z,
                                                         DecompositionContext& context) {
  if (z.is_zero()) throw PreconditionError("split by the zero element");
  SignedExpression plus{1, e.star0(z)};
  SignedExpression minus{-1, e.star1(z)};
  check_identity("split", e, 1, context, [&](std::uint64_t q) {
    auto lhs = static_cast<std::int64_t>(context.h0(e, q));
    auto rhs = static_cast<std::int64_t>(context.h0(plus.expression, q)) -
               static_cast<std::int64_t>(context.h0(minus.expression, q));
    return std::make_pair(lhs, rhs);
  });
  return {plus, minus};
}

std::pair<SignedExpression, SignedExpression> inject_rewrite(const StarExpression& e, DecompositionContext& context) {
  auto j = e.last_colon_step();
  if (!j) throw PreconditionError("inject rewrite needs a colon step: " + e.to_string());
  for (auto q : context.q_list()) {
    auto d = krull_dimension(context.evaluate(e, q));
    if (d && *d != 0)
      throw PreconditionError("inject rewrite needs a zero-dimensional expression: " + e.to_string());
  }
  const auto& steps = e.steps();
  const Polynomial& y = steps[*j].y;
  std::vector<Polynomial> kgens{y};
  for (std::size_t i = *j + 1; i < steps.size(); ++i)
    for (const auto& g : steps[i].k.generators()) kgens.push_back(steps[i].y * g);
  StarExpression prefix = e.prefix(*j);
  SignedExpression plus{1, prefix.star0(y, Ideal(e.ring(), std::move(kgens)))};
  SignedExpression minus{-1, prefix.star0(y)};
  if (!(plus.expression.measure() < e.measure()) || !(minus.expression.measure() < e.measure()))
    throw InternalError("inject rewrite did not decrease the measure");
  check_identity("inject", e, 1, context, [&](std::uint64_t q) {
    auto lhs = static_cast<std::int64_t>(context.h0(e, q));
    auto rhs = static_cast<std::int64_t>(context.h0(plus.expression, q)) -
               static_cast<std::int64_t>(context.h0(minus.expression, q));
    return std::make_pair(lhs, rhs);
  });
  return {plus, minus};
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

void require_decomposable(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw NotHomogeneous("(" + ideal.to_string() + ")");
}

void finish(Decomposition& out, const Ideal& ideal, DecompositionContext& context) {
  Certificate verified = verify_identity(ideal, out.combination, context.q_list());
  out.certificate = context.certificate();
  out.certificate.checks = std::move(verified.checks);
}

// dim R/I <= 1 inside a shared context
SignedCombination dim1_terms(const Ideal& ideal, DecompositionContext& context) {
  SignedCombination combination(ideal.ring());
  auto dim = krull_dimension(ideal);
  if (!dim) return combination;
  if (*dim == 0) {
    combination.add(1, ideal);
    return combination;
  }
  if (*dim != 1) throw PreconditionError("dimension one formula applied to dim " + std::to_string(*dim));
  StarExpression family(ideal);
  Polynomial s = choose_element(family, context);
  Ideal a = add_generators(ideal, {s});
  Ideal b = add_generators(ideal, {s * s});
  check_identity("dim1", family, 1, context, [&](std::uint64_t q) {
    auto lhs = static_cast<std::int64_t>(context.h0(family, q));
    auto rhs = 2 * static_cast<std::int64_t>(colength(frobenius_power(a, q))) -
               static_cast<std::int64_t>(colength(frobenius_power(b, q)));
    return std::make_pair(lhs, rhs);
  });
  combination.add(2, a);
  combination.add(-1, b);
  return combination;
}

}  // namespace

Decomposition decompose_dim1(const Ideal& ideal, const DecomposeOptions& options) {
  require_decomposable(ideal);
  auto dim = krull_dimension(ideal);
  if (dim != 1u)
    throw PreconditionError("decompose_dim1 needs dim R/I = 1, got " + (dim ? std::to_string(*dim) : "empty"));
  DecompositionContext context(ideal.ring(), options);
  Decomposition out{dim1_terms(ideal, context), {}, dim};
  finish(out, ideal, context);
  return out;
}

Decomposition decompose_dim2(const Ideal& ideal, const DecomposeOptions& options) {
  require_decomposable(ideal);
  auto dim = krull_dimension(ideal);
  if (dim != 2u)
    throw PreconditionError("decompose_dim2 needs dim R/I = 2, got " + (dim ? std::to_string(*dim) : "empty"));
  DecompositionContext context(ideal.ring(), options);
  StarExpression family(ideal);
  Polynomial s = choose_element(family, context);
  Polynomial t = choose_element(family.star1(s), context);
  Ideal a = add_generators(ideal, {s});
  Ideal b = add_generators(ideal, {s * s, s * t});
  Ideal c = add_generators(ideal, {s * s, s * t * t});
  check_identity("dim2", family, 1, context, [&](std::uint64_t q) {
    auto lhs = static_cast<std::int64_t>(context.h0(family, q));
    auto rhs = 2 * static_cast<std::int64_t>(ghk_value(a, q)) - 2 * static_cast<std::int64_t>(ghk_value(b, q)) +
               static_cast<std::int64_t>(ghk_value(c, q));
    return std::make_pair(lhs, rhs);
  });
  Decomposition out{SignedCombination(ideal.ring()), {}, dim};
  out.combination.add(2, dim1_terms(a, context));
  out.combination.add(-2, dim1_terms(b, context));
  out.combination.add(1, dim1_terms(c, context));
  finish(out, ideal, context);
  return out;
}

// ---------------------------------------------------------------------------
// General engine

Decomposition decompose_general(const Ideal& ideal, const DecomposeOptions& options) {
  DecompositionContext context(ideal.ring(), options);
  Decomposition out{SignedCombination(ideal.ring()), {}, krull_dimension(ideal)};
  if (ideal.is_unit()) {
    finish(out, ideal, context);
    return out;
  }
  require_decomposable(ideal);

  struct Pending {
    std::int64_t coefficient;
    StarExpression expression;
  };
  std::deque<std::string> order;
  std::map<std::string, Pending> pending;
  std::map<std::string, std::pair<SignedExpression, SignedExpression>> rewritten;
  auto push = [&](std::int64_t c, const StarExpression& e) {
    auto it = pending.find(e.key());
    if (it != pending.end()) {
      it->second.coefficient += c;
      return;
    }
    pending.emplace(e.key(), Pending{c, e});
    order.push_back(e.key());
  };
  push(1, StarExpression(ideal));

  const std::uint64_t q0 = context.q_list().front();
  std::size_t iterations = 0;
  while (!order.empty()) {
    if (++iterations > 100000) throw InternalError("rewrite engine did not terminate");
    auto node = pending.extract(order.front());
    order.pop_front();
    const std::int64_t c = node.mapped().coefficient;
    const StarExpression e = node.mapped().expression;
    if (c == 0) continue;

    if (auto done = rewritten.find(e.key()); done != rewritten.end()) {
      push(c * done->second.first.sign, done->second.first.expression);
      push(c * done->second.second.sign, done->second.second.expression);
      continue;
    }

    auto dim = krull_dimension(context.evaluate(e, q0));
    if (!dim) {
      for (auto q : context.q_list())
        if (!context.evaluate(e, q).is_unit())
          throw InternalError("expression is the unit ideal only at some q: " + e.to_string());
      continue;
    }
    if (*dim > 0) {
      Polynomial z = choose_element(e, context);
      auto children = split_once(e, z, context);
      context.certificate().steps.back().coefficient = c;
      rewritten.emplace(e.key(), children);
      push(c * children.first.sign, children.first.expression);
      push(c * children.second.sign, children.second.expression);
      continue;
    }
    if (!e.all_epsilon_zero()) {
      auto children = inject_rewrite(e, context);
      context.certificate().steps.back().coefficient = c;
      rewritten.emplace(e.key(), children);
      push(c * children.first.sign, children.first.expression);
      push(c * children.second.sign, children.second.expression);
      continue;
    }
    out.combination.add(c, e.to_fixed_ideal());
  }
  finish(out, ideal, context);
  return out;
}

}  // namespace hkfun
