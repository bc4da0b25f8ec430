#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hkfun/hk_engine.hpp"
#include "hkfun/star.hpp"

namespace hkfun {

/// {1, p, p^2}, plus p^3 when p = 2.
std::vector<std::uint64_t> default_q_list(std::uint32_t p);
/// Throws PreconditionError unless every q is a power of p; sorts and dedups.
std::vector<std::uint64_t> normalize_q_list(std::uint32_t p, std::vector<std::uint64_t> q_list);

struct CombinationTerm {
  std::int64_t coefficient = 0;
  Ideal ideal;
};

/// sum c_j f_HK^{R/I_j}, with every I_j m-primary. Equal ideals are merged
/// and zero coefficients dropped; first-insertion order is kept.
class SignedCombination {
 public:
  explicit SignedCombination(RingSpecPtr ring) : ring_(std::move(ring)) {}

  const RingSpecPtr& ring() const noexcept { return ring_; }
  const std::vector<CombinationTerm>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// Throws NotMPrimary unless dim R/ideal = 0. The unit ideal contributes
  /// nothing and is skipped.
  void add(std::int64_t coefficient, const Ideal& ideal);
  void add(std::int64_t scale, const SignedCombination& other);

 private:
  RingSpecPtr ring_;
  std::vector<CombinationTerm> terms_;
};

/// sum c_j l(R/I_j^[q]).
std::int64_t evaluate_combination(const SignedCombination& combination, std::uint64_t q);

struct ElementCheck {
  std::uint64_t q = 1;
  bool colon_is_saturation = false;
  std::size_t dimension_before = 0;
  /// nullopt when E_q + (s^q) is the unit ideal.
  std::optional<std::size_t> dimension_after;
  bool pass = false;
};

struct ElementRecord {
  std::string family;
  std::string element;
  std::string base_form;
  unsigned exponent = 1;
  unsigned degree = 1;
  unsigned attempts = 0;
  std::vector<ElementCheck> checks;
  bool pass() const;
};

struct StepCheck {
  std::uint64_t q = 1;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool pass = false;
};

/// One rewrite applied to an expression: "split", "inject", or a closed-form
/// identity ("dim1", "dim2").
struct StepRecord {
  std::string rule;
  std::string expression;
  std::int64_t coefficient = 1;
  std::vector<StepCheck> checks;
  bool pass() const;
};

struct IdentityCheck {
  std::uint64_t q = 1;
  std::int64_t combination = 0;
  std::int64_t ghk = 0;
  bool pass = false;
};

struct Certificate {
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> q_list;
  std::vector<ElementRecord> elements;
  std::vector<StepRecord> steps;
  std::vector<IdentityCheck> checks;
  /// Every logged check passed for every q.
  bool certified() const;
};

struct DecomposeOptions {
  /// Empty means default_q_list(p).
  std::vector<std::uint64_t> q_list;
  std::uint64_t seed = 1;
  /// Starting degree for random candidates, escalated up to max_degree.
  unsigned degree = 1;
  unsigned max_degree = 4;
  /// Random candidates tried per degree.
  unsigned retries = 8;
  /// Candidates tried, in order, before any random one.
  std::vector<Polynomial> preferred;
};

struct Decomposition {
  SignedCombination combination;
  Certificate certificate;
  std::optional<std::size_t> dimension;
};

/// State shared by the rewrite steps of one decomposition: options, the
/// seeded generator, evaluation memo and the growing certificate.
class DecompositionContext {
 public:
  DecompositionContext(const RingSpecPtr& ring, DecomposeOptions options);

  const DecomposeOptions& options() const noexcept { return options_; }
  const std::vector<std::uint64_t>& q_list() const noexcept { return options_.q_list; }
  std::mt19937_64& rng() noexcept { return rng_; }
  EvaluationCache& cache() noexcept { return cache_; }
  Certificate& certificate() noexcept { return certificate_; }
  Ideal evaluate(const StarExpression& e, std::uint64_t q) { return e.evaluate(q, &cache_); }
  std::uint64_t h0(const StarExpression& e, std::uint64_t q);

 private:
  DecomposeOptions options_;
  std::mt19937_64 rng_;
  EvaluationCache cache_;
  Certificate certificate_;
};

/// Uniform residue in [0, p) from 64-bit draws by rejection.
Coeff sample_coefficient(std::mt19937_64& rng, std::uint32_t p);
/// Random nonzero homogeneous form of the given degree.
Polynomial random_homogeneous_form(const RingSpecPtr& ring, unsigned degree, std::mt19937_64& rng);

/// Smallest n with m^(n q) killing H^0 of every E_q, i.e. max ceil(N_q / q),
/// and at least 1.
unsigned family_lc_exponent(const StarExpression& family, DecompositionContext& context);

/// A homogeneous s = s0^N with (E_q : s^q) = E_q^sat for every q in the
/// list. Records the choice in the certificate. Throws
/// ElementSelectionFailed when every candidate fails.
Polynomial choose_element(const StarExpression& family, DecompositionContext& context);

/// Checks whether s satisfies the split condition for the family at every q.
bool validate_element(const StarExpression& family, const Polynomial& s, DecompositionContext& context,
                      std::vector<ElementCheck>* checks = nullptr, std::uint64_t* failing_q = nullptr);

struct SignedExpression {
  std::int64_t sign;
  StarExpression expression;
};

/// (+1, E *_0 z), (-1, E *_1 z); verifies the length identity at every q.
std::pair<SignedExpression, SignedExpression> split_once(const StarExpression& e, const Polynomial& z,
                                                         DecompositionContext& context);

/// Rewrites a zero-dimensional expression at its last colon step j:
/// (+1, prefix *_0 y_j K'), (-1, prefix *_0 y_j) with
/// K' = (y_j) + y_{j+1} K_{j+1} + ... . Verifies the identity at every q.
std::pair<SignedExpression, SignedExpression> inject_rewrite(const StarExpression& e, DecompositionContext& context);

/// 2 f(I + (s)) - f(I + (s^2)) for dim R/I = 1.
Decomposition decompose_dim1(const Ideal& ideal, const DecomposeOptions& options);
/// 2 f(I+(s)) - 2 f(I+(s^2, s t)) + f(I+(s^2, s t^2)), each expanded by the
/// dimension one formula, for dim R/I = 2.
Decomposition decompose_dim2(const Ideal& ideal, const DecomposeOptions& options);
/// The general rewrite engine for any proper homogeneous ideal.
Decomposition decompose_general(const Ideal& ideal, const DecomposeOptions& options);

/// Compares the combination with f_gHK computed through saturation.
Certificate verify_identity(const Ideal& ideal, const SignedCombination& combination,
                            std::span<const std::uint64_t> q_list);

}  // namespace hkfun
