#include "hkfun/star.hpp"

#include "hkfun/errors.hpp"

namespace hkfun {

std::optional<Ideal> EvaluationCache::find(const std::string& key, std::uint64_t q) const {
  std::lock_guard lock(mutex_);
  auto it = values_.find({key, q});
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void EvaluationCache::store(const std::string& key, std::uint64_t q, const Ideal& value) {
  std::lock_guard lock(mutex_);
  values_.emplace(std::make_pair(key, q), value);
}

std::size_t EvaluationCache::size() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

StarExpression::StarExpression(Ideal base, std::vector<StarStep> steps)
    : base_(std::move(base)), steps_(std::move(steps)) {
  prefix_keys_.push_back("[" + base_.key() + "]");
  for (const auto& step : steps_) {
    require_same_ring(*step.k.ring(), *base_.ring());
    require_same_ring(*step.y.ring(), *base_.ring()->ambient());
    if (step.epsilon != 0 && step.epsilon != 1) throw PreconditionError("star step epsilon must be 0 or 1");
    if (step.y.is_zero()) throw PreconditionError("star step element must be nonzero");
    if (step.epsilon == 1 && !step.k.is_unit()) throw PreconditionError("a colon step carries the unit ideal");
    std::string piece = " *" + std::to_string(step.epsilon) + " " + hkfun::to_string(step.y.monic());
    if (step.epsilon == 0) piece += " [" + step.k.key() + "]";
    prefix_keys_.push_back(prefix_keys_.back() + piece);
  }
}

StarExpression StarExpression::star0(const Polynomial& y, const Ideal& k) const {
  auto steps = steps_;
  steps.push_back({0, y, k});
  return StarExpression(base_, std::move(steps));
}

StarExpression StarExpression::star0(const Polynomial& y) const { return star0(y, Ideal::unit(ring())); }

StarExpression StarExpression::star1(const Polynomial& y) const {
  auto steps = steps_;
  steps.push_back({1, y, Ideal::unit(ring())});
  return StarExpression(base_, std::move(steps));
}

StarExpression StarExpression::prefix(std::size_t count) const {
  if (count > steps_.size()) throw PreconditionError("prefix longer than the expression");
  return StarExpression(base_, {steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(count)});
}

Ideal StarExpression::evaluate(std::uint64_t q, EvaluationCache* cache) const {
  // resume from the longest cached prefix
  std::size_t start = 0;
  std::optional<Ideal> current;
  if (cache != nullptr) {
    for (std::size_t k = steps_.size() + 1; k-- > 0;) {
      if (auto hit = cache->find(prefix_keys_[k], q)) {
        current = std::move(hit);
        start = k;
        break;
      }
    }
  }
  if (!current) {
    current = frobenius_power(base_, q);
    if (cache != nullptr) cache->store(prefix_keys_[0], q, *current);
  }
  for (std::size_t i = start; i < steps_.size(); ++i) {
    const StarStep& step = steps_[i];
    Polynomial yq = step.y.frobenius(q);
    if (step.epsilon == 0) {
      current = ideal_sum(*current, elt_times_ideal(yq, frobenius_power(step.k, q)));
    } else {
      current = add_generators(colon_element(*current, yq), {yq});
    }
    if (cache != nullptr) cache->store(prefix_keys_[i + 1], q, *current);
  }
  return *current;
}

bool StarExpression::all_epsilon_zero() const noexcept { return !last_colon_step().has_value(); }

std::optional<std::size_t> StarExpression::last_colon_step() const noexcept {
  for (std::size_t i = steps_.size(); i-- > 0;)
    if (steps_[i].epsilon == 1) return i;
  return std::nullopt;
}

std::uint64_t StarExpression::measure() const noexcept {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < steps_.size() && i < 63; ++i)
    if (steps_[i].epsilon == 1) n |= std::uint64_t{1} << (62 - i);
  return n;
}

Ideal StarExpression::to_fixed_ideal() const {
  if (!all_epsilon_zero()) throw PreconditionError("fixed ideal of an expression with a colon step");
  std::vector<Polynomial> gens = base_.generators();
  for (const auto& step : steps_)
    for (const auto& g : step.k.generators()) gens.push_back(step.y * g);
  return Ideal(ring(), std::move(gens));
}

const std::string& StarExpression::key() const { return prefix_keys_.back(); }

std::string StarExpression::to_string() const {
  std::string out = "(" + base_.to_string() + ")";
  for (const auto& step : steps_) {
    out += " *" + std::to_string(step.epsilon) + " " + hkfun::to_string(step.y);
    if (step.epsilon == 0 && !step.k.is_unit()) out += "*(" + step.k.to_string() + ")";
  }
  return out;
}

}  // namespace hkfun
