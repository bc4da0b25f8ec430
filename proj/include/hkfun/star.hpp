#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hkfun/ideal.hpp"

namespace hkfun {

/// One step of a star expression. epsilon = 0 adds y*K, epsilon = 1 takes
/// the colon by y and adds y (K is then the unit ideal).
struct StarStep {
  int epsilon = 0;
  Polynomial y;
  Ideal k;
};

/// Memo of evaluated expressions shared by one decomposition run, keyed by
/// expression key and q.
class EvaluationCache {
 public:
  std::optional<Ideal> find(const std::string& key, std::uint64_t q) const;
  void store(const std::string& key, std::uint64_t q, const Ideal& value);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::pair<std::string, std::uint64_t>, Ideal> values_;
};

/// A base ideal J with steps (eps_i, y_i, K_i), evaluated at q from left to
/// right starting from J^[q]:
///   eps = 0:  E -> E + y^q K^[q]
///   eps = 1:  E -> (E : y^q) + (y^q)
class StarExpression {
 public:
  explicit StarExpression(Ideal base, std::vector<StarStep> steps = {});

  const Ideal& base() const noexcept { return base_; }
  const std::vector<StarStep>& steps() const noexcept { return steps_; }
  const RingSpecPtr& ring() const noexcept { return base_.ring(); }

  /// E *_0 y K
  StarExpression star0(const Polynomial& y, const Ideal& k) const;
  /// E *_0 y R
  StarExpression star0(const Polynomial& y) const;
  /// E *_1 y
  StarExpression star1(const Polynomial& y) const;
  /// First `count` steps.
  StarExpression prefix(std::size_t count) const;

  Ideal evaluate(std::uint64_t q, EvaluationCache* cache = nullptr) const;

  bool all_epsilon_zero() const noexcept;
  /// Index of the last step with epsilon = 1.
  std::optional<std::size_t> last_colon_step() const noexcept;
  /// sum eps_i 2^(63 - i) over 1-based positions i; a prefix change at a
  /// step outweighs anything appended after it.
  std::uint64_t measure() const noexcept;

  /// J + y_1 K_1 + ... + y_s K_s; requires every epsilon to be zero.
  Ideal to_fixed_ideal() const;

  /// Canonical text; equal keys mean equal evaluations at every q.
  const std::string& key() const;
  /// Readable form, e.g. "(x^2, x*y) *1 y *0 x*(1)".
  std::string to_string() const;

 private:
  Ideal base_;
  std::vector<StarStep> steps_;
  // prefix_keys_[k] identifies the first k steps
  std::vector<std::string> prefix_keys_;
};

}  // namespace hkfun
