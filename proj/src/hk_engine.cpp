#include "hkfun/hk_engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hkfun/errors.hpp"

namespace hkfun {

unsigned default_n_max(std::uint32_t p) noexcept { return p <= 3 ? 3 : 2; }

std::vector<std::uint64_t> q_values(std::uint32_t p, unsigned n_max) {
  std::vector<std::uint64_t> qs;
  std::uint64_t q = 1;
  for (unsigned n = 0; n <= n_max; ++n, q *= p) qs.push_back(q);
  return qs;
}

std::string to_string(SeriesKind kind) { return kind == SeriesKind::kClassical ? "classical" : "generalized"; }

std::uint64_t hk_value(const Ideal& ideal, std::uint64_t q) {
  if (ideal.is_unit()) throw PreconditionError("Hilbert-Kunz function of the unit ideal");
  if (krull_dimension(ideal) != 0u) throw NotMPrimary("(" + ideal.to_string() + ")");
  return colength(frobenius_power(ideal, q));
}

std::uint64_t ghk_value(const Ideal& ideal, std::uint64_t q) {
  if (ideal.is_unit()) return 0;
  return h0_length(frobenius_power(ideal, q));
}

HKSeries hk_series(const Ideal& ideal, std::span<const std::uint64_t> q_list) {
  if (ideal.is_unit()) throw PreconditionError("Hilbert-Kunz function of the unit ideal");
  if (krull_dimension(ideal) != 0u) throw NotMPrimary("(" + ideal.to_string() + ")");
  HKSeries series{ideal, SeriesKind::kClassical, {}};
  const PrimeField& field = ideal.ring()->field();
  for (auto q : q_list) {
    auto n = field.log_characteristic(q);
    if (!n) throw PreconditionError(std::to_string(q) + " is not a power of the characteristic");
    series.entries.push_back({*n, q, hk_value(ideal, q)});
  }
  return series;
}

HKSeries hk_series(const Ideal& ideal, unsigned n_max) {
  auto qs = q_values(ideal.ring()->characteristic(), n_max);
  return hk_series(ideal, qs);
}

HKSeries ghk_series(const Ideal& ideal, std::span<const std::uint64_t> q_list) {
  if (ideal.is_unit()) throw PreconditionError("generalized Hilbert-Kunz function of the unit ideal");
  if (!ideal.is_homogeneous()) throw NotHomogeneous("(" + ideal.to_string() + ")");
  HKSeries series{ideal, SeriesKind::kGeneralized, {}};
  const PrimeField& field = ideal.ring()->field();
  for (auto q : q_list) {
    auto n = field.log_characteristic(q);
    if (!n) throw PreconditionError(std::to_string(q) + " is not a power of the characteristic");
    series.entries.push_back({*n, q, ghk_value(ideal, q)});
  }
  return series;
}

HKSeries ghk_series(const Ideal& ideal, unsigned n_max) {
  auto qs = q_values(ideal.ring()->characteristic(), n_max);
  return ghk_series(ideal, qs);
}

Ratio Ratio::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw DivisionByZero();
  std::uint64_t g = std::gcd(num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

std::string Ratio::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::vector<RatioEntry> multiplicity_estimate(const HKSeries& series) {
  if (series.entries.empty()) throw PreconditionError("empty series");
  const std::size_t d = ring_dimension(series.ideal.ring());
  std::vector<RatioEntry> out;
  for (const auto& e : series.entries) {
    std::uint64_t qd = 1;
    for (std::size_t k = 0; k < d; ++k) qd *= e.q;
    out.push_back({e.n, e.q, Ratio::make(e.value, qd)});
  }
  return out;
}

namespace {

// Linearly independent polynomials kept with pairwise distinct leading monomials.
class Echelon {
 public:
  explicit Echelon(std::vector<Polynomial>* storage) : rows_(storage) {}

  /// Adds f if it is independent of the current rows.
  void add(Polynomial f) {
    while (!f.is_zero()) {
      auto it = by_lead_.find(f.leading_monomial());
      if (it == by_lead_.end()) {
        f = f.monic();
        by_lead_.emplace(f.leading_monomial(), rows_->size());
        rows_->push_back(std::move(f));
        return;
      }
      const Polynomial& row = (*rows_)[it->second];
      f -= row.scale(f.leading_coeff());
    }
  }

 private:
  struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
      return false;
    }
  };
  std::vector<Polynomial>* rows_;
  std::map<Monomial, std::size_t, MonomialLess> by_lead_;
};

}  // namespace

unsigned annihilator_exponent(const Ideal& ideal, const Ideal& saturation) {
  const GroebnerBasis& basis = ideal.groebner_basis();
  const std::size_t nv = ideal.ring()->nvars();
  // level k spans the image of m^k * saturation in S/I, in normal form
  std::vector<Polynomial> level;
  Echelon start(&level);
  for (const auto& g : saturation.groebner_basis().elements()) start.add(basis.normal_form(g));
  unsigned n = 0;
  // the quotient sat/I has finite length, so the levels vanish
  const std::uint64_t bound = h0_length(ideal, saturation);
  while (!level.empty()) {
    if (n > bound) throw InternalError("annihilator search did not terminate for (" + ideal.to_string() + ")");
    std::vector<Polynomial> next;
    Echelon grow(&next);
    for (const auto& v : level)
      for (std::size_t x = 0; x < nv; ++x) grow.add(basis.normal_form(v * ideal.ring()->variable(x)));
    level = std::move(next);
    ++n;
  }
  return n;
}

std::string to_string(LCVerdict verdict) {
  return verdict == LCVerdict::kConsistent ? "consistent-with-LC" : "violated-in-range";
}

LCVerdict lc_verdict(std::span<const unsigned> ratios) {
  if (ratios.size() <= 1) return LCVerdict::kConsistent;
  auto first_max = std::max_element(ratios.begin(), ratios.end());
  if (first_max + 1 == ratios.end()) return LCVerdict::kViolatedInRange;
  for (auto it = first_max; it + 1 != ratios.end(); ++it)
    if (*(it + 1) > *it) return LCVerdict::kViolatedInRange;
  return LCVerdict::kConsistent;
}

LCReport lc_probe(const Ideal& ideal, unsigned n_max) {
  auto qs = q_values(ideal.ring()->characteristic(), n_max);
  return lc_probe(ideal, qs);
}

LCReport lc_probe(const Ideal& ideal, std::span<const std::uint64_t> q_list) {
  if (ideal.is_unit()) throw PreconditionError("LC probe of the unit ideal");
  if (!ideal.is_homogeneous()) throw NotHomogeneous("(" + ideal.to_string() + ")");
  LCReport report{ideal, {}, 0, LCVerdict::kConsistent};
  std::vector<unsigned> ratios;
  for (std::uint64_t q : q_list) {
    Ideal e = frobenius_power(ideal, q);
    unsigned nq = annihilator_exponent(e, saturate_m(e));
    auto ratio = static_cast<unsigned>((nq + q - 1) / q);
    report.per_q.push_back({q, nq, ratio});
    ratios.push_back(ratio);
    report.inferred_n = std::max(report.inferred_n, ratio);
  }
  report.verdict = lc_verdict(ratios);
  return report;
}

}  // namespace hkfun
