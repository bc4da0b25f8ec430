#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hkfun/ideal.hpp"

namespace hkfun {

/// Default n range: 0..3 for p = 2, 3 and 0..2 otherwise.
unsigned default_n_max(std::uint32_t p) noexcept;
/// p^0 .. p^n_max.
std::vector<std::uint64_t> q_values(std::uint32_t p, unsigned n_max);

enum class SeriesKind { kClassical, kGeneralized };
std::string to_string(SeriesKind kind);

struct SeriesEntry {
  unsigned n = 0;
  std::uint64_t q = 1;
  std::uint64_t value = 0;
  friend bool operator==(const SeriesEntry&, const SeriesEntry&) = default;
};

struct HKSeries {
  Ideal ideal;
  SeriesKind kind;
  std::vector<SeriesEntry> entries;
};

/// l(R/I^[q]). Requires dim R/I = 0 and I proper.
std::uint64_t hk_value(const Ideal& ideal, std::uint64_t q);
/// l(H^0_m(R/I^[q])); 0 for the unit ideal.
std::uint64_t ghk_value(const Ideal& ideal, std::uint64_t q);

HKSeries hk_series(const Ideal& ideal, unsigned n_max);
HKSeries ghk_series(const Ideal& ideal, unsigned n_max);
/// Same, at the given powers of p.
HKSeries hk_series(const Ideal& ideal, std::span<const std::uint64_t> q_list);
HKSeries ghk_series(const Ideal& ideal, std::span<const std::uint64_t> q_list);

/// Non-negative rational in lowest terms.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  static Ratio make(std::uint64_t num, std::uint64_t den);
  std::string to_string() const;
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct RatioEntry {
  unsigned n = 0;
  std::uint64_t q = 1;
  Ratio ratio;
};

/// f(n) / q^d with d the Krull dimension of the ring.
std::vector<RatioEntry> multiplicity_estimate(const HKSeries& series);

/// Smallest n with m^n * saturation contained in `ideal`; `saturation` must
/// contain `ideal` with finite-length quotient.
unsigned annihilator_exponent(const Ideal& ideal, const Ideal& saturation);

enum class LCVerdict { kConsistent, kViolatedInRange };
std::string to_string(LCVerdict verdict);

struct LCEntry {
  std::uint64_t q = 1;
  unsigned n_q = 0;
  /// ceil(n_q / q)
  unsigned ratio = 0;
};

struct LCReport {
  Ideal ideal;
  std::vector<LCEntry> per_q;
  unsigned inferred_n = 0;
  LCVerdict verdict = LCVerdict::kConsistent;
};

/// Finite-range observation of the uniform annihilator bound over q = p^0..p^n_max.
LCReport lc_probe(const Ideal& ideal, unsigned n_max);
/// Same over an explicit list of q values.
LCReport lc_probe(const Ideal& ideal, std::span<const std::uint64_t> q_list);

/// Verdict rule on the sequence ceil(N_q/q): consistent iff from the first
/// position of its maximum onward the sequence never increases, and that
/// maximum appears before the last observed q (a maximum reached only at the
/// end is still growing).
LCVerdict lc_verdict(std::span<const unsigned> ratios);

}  // namespace hkfun
