#include <gtest/gtest.h>

#include <random>

#include "hkfun/errors.hpp"
#include "hkfun/hk_engine.hpp"
#include "hkfun/parse.hpp"
#include "oracles.hpp"

using namespace hkfun;

namespace {

Ideal make(const RingSpecPtr& ring, const char* text) {
  return Ideal(ring, parse_polynomial_list(text, ring->ambient()));
}

std::vector<std::uint64_t> values(const HKSeries& s) {
  std::vector<std::uint64_t> out;
  for (const auto& e : s.entries) out.push_back(e.value);
  return out;
}

}  // namespace

class HKEngineTest : public ::testing::Test {
 protected:
  RingSpecPtr r2 = RingSpec::create(2, {"x", "y"});
  RingSpecPtr r3 = RingSpec::create(2, {"x", "y", "z"});
};

TEST_F(HKEngineTest, Defaults) {
  EXPECT_EQ(default_n_max(2), 3u);
  EXPECT_EQ(default_n_max(3), 3u);
  EXPECT_EQ(default_n_max(5), 2u);
  EXPECT_EQ(q_values(3, 2), (std::vector<std::uint64_t>{1, 3, 9}));
}

TEST_F(HKEngineTest, ClassicalSeries) {
  auto s = hk_series(make(r2, "x, y"), 2);
  EXPECT_EQ(values(s), (std::vector<std::uint64_t>{1, 4, 16}));
  EXPECT_EQ(s.entries[2].q, 4u);
  EXPECT_EQ(s.kind, SeriesKind::kClassical);
  EXPECT_EQ(hk_series(make(r2, "x^2, y"), 1).entries[1].value, 8u);
  EXPECT_THROW(hk_series(Ideal::unit(r2), 1), PreconditionError);
  EXPECT_THROW(hk_series(make(r2, "x^2, x*y"), 1), NotMPrimary);
}

TEST_F(HKEngineTest, GeneralizedSeries) {
  auto i = make(r2, "x^2, x*y");
  EXPECT_EQ(values(ghk_series(i, 3)), (std::vector<std::uint64_t>{1, 4, 16, 64}));
  EXPECT_EQ(values(ghk_series(make(r2, "x"), 3)), (std::vector<std::uint64_t>{0, 0, 0, 0}));
  EXPECT_THROW(ghk_series(Ideal::unit(r2), 1), PreconditionError);
}

TEST_F(HKEngineTest, GeneralizedAgreesWithMonomialEnumeration) {
  // for monomial ideals the Frobenius power is monomial too
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Monomial> gens;
    for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k) gens.push_back(oracle::random_monomial(3, 1 + rng() % 3, rng));
    std::vector<Polynomial> polys;
    for (const auto& m : gens) polys.push_back(Polynomial::monomial(r3->ambient(), m));
    Ideal i(r3, polys);
    if (i.is_unit()) continue;
    auto s = ghk_series(i, 2);
    for (const auto& e : s.entries) {
      std::vector<Monomial> raised;
      for (const auto& m : gens) raised.push_back(m.pow(static_cast<unsigned>(e.q)));
      EXPECT_EQ(e.value, oracle::monomial_h0_length(3, raised)) << i.to_string() << " q=" << e.q;
    }
  }
}

TEST_F(HKEngineTest, GeneralizedEqualsClassicalForMPrimary) {
  std::mt19937_64 rng(67);
  int seen = 0;
  for (std::uint32_t p : {2u, 3u}) {
    auto ring = RingSpec::create(p, {"x", "y", "z"});
    for (int trial = 0; trial < 40 && seen < 12; ++trial) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 3 + static_cast<int>(rng() % 2); ++k)
        gens.push_back(oracle::random_nonzero_form(ring->ambient(), 1 + rng() % 2, rng, 0.5));
      Ideal i(ring, gens);
      if (i.is_unit() || krull_dimension(i) != 0u) continue;
      ++seen;
      EXPECT_EQ(values(ghk_series(i, 1)), values(hk_series(i, 1))) << i.to_string();
    }
  }
  EXPECT_GT(seen, 4);
}

TEST_F(HKEngineTest, MultiplicityRatios) {
  for (const auto& e : multiplicity_estimate(hk_series(make(r2, "x, y"), 3))) EXPECT_EQ(e.ratio, Ratio::make(1, 1));
  for (const auto& e : multiplicity_estimate(ghk_series(make(r2, "x^2, x*y"), 3))) EXPECT_EQ(e.ratio, Ratio::make(1, 1));
  for (const auto& e : multiplicity_estimate(hk_series(make(r2, "x^2, y^2"), 2))) EXPECT_EQ(e.ratio.num, 4u);
  EXPECT_EQ(Ratio::make(6, 4).to_string(), "3/2");
  // a hypersurface: R = F_2[x,y,z]/(x^2 + y*z) has dimension 2
  auto q = RingSpec::create(2, {"x", "y", "z"}, {"x^2 + y*z"});
  auto s = hk_series(Ideal::maximal(q), 2);
  auto ratios = multiplicity_estimate(s);
  EXPECT_EQ(ratios[0].ratio, Ratio::make(1, 1));
}

TEST_F(HKEngineTest, LCProbeWorkedFamily) {
  auto report = lc_probe(make(r2, "x^2, x*y"), 3);
  ASSERT_EQ(report.per_q.size(), 4u);
  for (const auto& e : report.per_q)
    if (e.q > 1) EXPECT_EQ(e.n_q, 2 * e.q - 1);
  EXPECT_EQ(report.inferred_n, 2u);
  EXPECT_EQ(report.verdict, LCVerdict::kConsistent);
  auto zero = lc_probe(make(r2, "x"), 2);
  for (const auto& e : zero.per_q) EXPECT_EQ(e.n_q, 0u);
  EXPECT_EQ(zero.inferred_n, 0u);
}

TEST_F(HKEngineTest, LCProbeMinimality) {
  std::mt19937_64 rng(71);
  auto check = [](const Ideal& i, std::uint64_t q, unsigned nq) {
    Ideal e = frobenius_power(i, q);
    Ideal sat = saturate_m(e);
    EXPECT_TRUE(e.contains(ideal_product(Ideal::maximal_power(i.ring(), nq), sat)));
    if (nq > 0) EXPECT_FALSE(e.contains(ideal_product(Ideal::maximal_power(i.ring(), nq - 1), sat)));
    EXPECT_EQ(nq == 0, h0_length(e) == 0);
  };
  for (const auto& e : lc_probe(Ideal::maximal_power(r2, 2), 2).per_q) check(Ideal::maximal_power(r2, 2), e.q, e.n_q);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(oracle::random_nonzero_form(r3->ambient(), 1 + rng() % 2, rng, 0.5));
    Ideal i(r3, gens);
    if (i.is_unit()) continue;
    for (const auto& e : lc_probe(i, 1).per_q) check(i, e.q, e.n_q);
  }
}

TEST_F(HKEngineTest, LCVerdictRule) {
  std::vector<unsigned> steady{1, 2, 2, 2}, growing{1, 2, 3, 4}, dip{2, 1, 2}, flat{0, 0};
  EXPECT_EQ(lc_verdict(steady), LCVerdict::kConsistent);
  EXPECT_EQ(lc_verdict(growing), LCVerdict::kViolatedInRange);
  EXPECT_EQ(lc_verdict(dip), LCVerdict::kViolatedInRange);
  EXPECT_EQ(lc_verdict(flat), LCVerdict::kConsistent);
}
