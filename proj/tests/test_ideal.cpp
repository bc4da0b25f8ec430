#include <gtest/gtest.h>

#include <random>

#include "hkfun/errors.hpp"
#include "hkfun/ideal.hpp"
#include "hkfun/parse.hpp"
#include "oracles.hpp"

using namespace hkfun;

namespace {

Ideal make(const RingSpecPtr& ring, const char* text) {
  return Ideal(ring, parse_polynomial_list(text, ring->ambient()));
}

Ideal random_ideal(const RingSpecPtr& ring, std::mt19937_64& rng, unsigned max_degree = 3, int max_gens = 3) {
  std::vector<Polynomial> gens;
  const int ngens = 1 + static_cast<int>(rng() % max_gens);
  for (int k = 0; k < ngens; ++k)
    gens.push_back(oracle::random_nonzero_form(ring->ambient(), 1 + static_cast<unsigned>(rng() % max_degree), rng, 0.5));
  return Ideal(ring, std::move(gens));
}

std::vector<Monomial> random_monomials(std::size_t nv, std::mt19937_64& rng, int count, unsigned max_degree) {
  std::vector<Monomial> out;
  for (int k = 0; k < count; ++k) out.push_back(oracle::random_monomial(nv, 1 + rng() % max_degree, rng));
  return out;
}

}  // namespace

class IdealTest : public ::testing::Test {
 protected:
  RingSpecPtr r2 = RingSpec::create(2, {"x", "y"});
  RingSpecPtr r3 = RingSpec::create(2, {"x", "y", "z"});
};

TEST_F(IdealTest, GeneratorConstructions) {
  EXPECT_TRUE(ideal_sum(make(r2, "x"), make(r2, "y")).equals(make(r2, "x, y")));
  EXPECT_TRUE(elt_times_ideal(r2->parse("x"), make(r2, "x, y")).equals(make(r2, "x^2, x*y")));
  auto i = make(r2, "x^2, x*y");
  EXPECT_TRUE(ideal_sum(i, Ideal::zero(r2)).equals(i));
  EXPECT_TRUE(ideal_product(make(r2, "x, y"), make(r2, "x, y")).equals(Ideal::maximal_power(r2, 2)));
  EXPECT_EQ(Ideal::maximal_power(r3, 2).generators().size(), 6u);
}

TEST_F(IdealTest, Elimination) {
  auto ring = RingSpec::create(3, {"t", "x"});
  auto e = eliminate(Ideal(ring, {ring->parse("t*x"), ring->parse("t") - ring->one()}), 1);
  EXPECT_TRUE(e.equals(make(ring, "x")));
  EXPECT_TRUE(eliminate(make(ring, "t"), 1).is_zero());
  auto i = make(ring, "t^2 + x^2");
  EXPECT_TRUE(eliminate(i, 0).equals(i));
}

TEST_F(IdealTest, Intersection) {
  EXPECT_TRUE(ideal_intersection(make(r2, "x"), make(r2, "y")).equals(make(r2, "x*y")));
  auto i = make(r2, "x^2 + y^2, x*y");
  EXPECT_TRUE(ideal_intersection(i, i).equals(i));
  EXPECT_TRUE(ideal_intersection(make(r2, "x"), Ideal::unit(r2)).equals(make(r2, "x")));
  EXPECT_TRUE(ideal_intersection(make(r2, "x^2, y"), make(r2, "x, y^2")).equals(make(r2, "x^2, x*y, y^2")));
}

TEST_F(IdealTest, IntersectionIsLargestCommonSubideal) {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u}) {
    auto ring = RingSpec::create(p, {"x", "y", "z"});
    for (int trial = 0; trial < 15; ++trial) {
      auto a = random_ideal(ring, rng, 2);
      auto b = random_ideal(ring, rng, 2);
      auto c = ideal_intersection(a, b);
      EXPECT_TRUE(a.contains(c));
      EXPECT_TRUE(b.contains(c));
      EXPECT_TRUE(c.contains(ideal_product(a, b)));
      // an element of both ideals found by linear algebra in one degree
      for (unsigned d = 1; d <= 4; ++d)
        for (const auto& m : oracle::monomials_of_degree(3, d)) {
          auto f = Polynomial::monomial(ring->ambient(), m);
          if (a.contains(f) && b.contains(f)) EXPECT_TRUE(c.contains(f));
        }
    }
  }
}

TEST_F(IdealTest, ColonExamples) {
  auto i = make(r2, "x^2, x*y");
  EXPECT_TRUE(colon_element(i, r2->parse("x")).equals(make(r2, "x, y")));
  EXPECT_TRUE(colon_element(i, r2->one()).equals(i));
  EXPECT_TRUE(colon_element(make(r2, "x"), r2->parse("y")).equals(make(r2, "x")));
  EXPECT_TRUE(colon_ideal(i, Ideal::maximal(r2)).equals(make(r2, "x")));
  EXPECT_TRUE(colon_ideal(i, Ideal::unit(r2)).equals(i));
  EXPECT_TRUE(colon_ideal(Ideal::maximal(r2), Ideal::maximal(r2)).is_unit());
  EXPECT_THROW(colon_element(i, Polynomial(r2->ambient())), PreconditionError);
}

TEST_F(IdealTest, ColonRoutesAgree) {
  std::mt19937_64 rng(23);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto ring = RingSpec::create(p, {"x", "y", "z"});
    for (int trial = 0; trial < 20; ++trial) {
      auto i = random_ideal(ring, rng, 3);
      // a power of a random linear form exercises the coordinate-change path
      auto ell = oracle::random_nonzero_form(ring->ambient(), 1, rng, 0.7);
      unsigned m = 1 + static_cast<unsigned>(rng() % 3);
      auto f = ell.pow(m).scale(static_cast<Coeff>(1 + rng() % (p - 1)));
      auto lp = as_linear_power(f);
      ASSERT_TRUE(lp) << to_string(f);
      EXPECT_EQ(lp->second, m);
      auto fast = colon_element(i, f);
      auto generic = colon_element_by_intersection(i, f);
      EXPECT_TRUE(fast.equals(generic)) << i.to_string() << " : " << to_string(f);
      EXPECT_TRUE(saturate_element(i, ell).equals(saturate_element_by_iteration(i, ell)));
      // the colon is exactly the set killed into I
      for (const auto& g : fast.generators()) EXPECT_TRUE(i.contains(g * f));
    }
  }
}

TEST_F(IdealTest, LinearPowerDetection) {
  auto ring = RingSpec::create(3, {"x", "y", "z"});
  EXPECT_FALSE(as_linear_power(ring->parse("x*y")));
  EXPECT_FALSE(as_linear_power(ring->parse("x^2 + y^2")));  // not a square over F_3
  EXPECT_TRUE(as_linear_power(ring->parse("x^2 + 2*x*y + y^2")));
  EXPECT_TRUE(as_linear_power(ring->parse("x^3 + y^3")));
  EXPECT_FALSE(as_linear_power(ring->parse("x^2 + y")));
  auto lp = as_linear_power(ring->parse("2*z^4"));
  ASSERT_TRUE(lp);
  EXPECT_EQ(to_string(lp->first), "z");
}

TEST_F(IdealTest, SaturationExamples) {
  auto i = make(r2, "x^2, x*y");
  EXPECT_TRUE(saturate_element(i, r2->parse("y")).equals(make(r2, "x")));
  EXPECT_TRUE(saturate_element(i, r2->one()).equals(i));
  auto j = make(r2, "x^8, x^4*y^4");  // x^q (x^q, y^q) at q = 4
  EXPECT_TRUE(saturate_element(j, r2->parse("x")).is_unit());
  EXPECT_TRUE(saturate_element_by_iteration(j, r2->parse("x")).is_unit());
  EXPECT_TRUE(saturate_m(i).equals(make(r2, "x")));
  EXPECT_TRUE(saturate_m(make(r2, "x^2, x*y, y^2")).is_unit());
  EXPECT_TRUE(saturate_m(make(r2, "x")).equals(make(r2, "x")));
}

TEST_F(IdealTest, SaturationProperties) {
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {2u, 3u}) {
    auto ring = RingSpec::create(p, {"x", "y", "z"});
    for (int trial = 0; trial < 20; ++trial) {
      auto i = random_ideal(ring, rng, 3);
      auto sat = saturate_m(i);
      EXPECT_TRUE(sat.contains(i));
      EXPECT_TRUE(saturate_m(Ideal(ring, sat.generators())).equals(sat));
      // some m^N sat lies in I
      bool found = false;
      for (unsigned n = 0; n <= 12 && !found; ++n)
        found = i.contains(ideal_product(Ideal::maximal_power(ring, n), sat));
      EXPECT_TRUE(found) << i.to_string();
      EXPECT_EQ(h0_length(i) == 0, i.contains(sat));
    }
  }
}

TEST_F(IdealTest, FrobeniusPowers) {
  EXPECT_TRUE(frobenius_power(make(r2, "x, y"), 2).equals(make(r2, "x^2, y^2")));
  auto r = RingSpec::create(3, {"x", "y"});
  auto f = frobenius_power(make(r, "x^2 + y^2, x*y"), 3);
  EXPECT_TRUE(f.equals(make(r, "x^6 + y^6, x^3*y^3")));
  EXPECT_THROW(frobenius_power(make(r2, "x"), 6), PreconditionError);
  auto q = RingSpec::create(2, {"x", "y", "z"}, {"x^2 + y*z"});
  auto fq = frobenius_power(Ideal(q, {q->parse("x")}), 2);
  EXPECT_TRUE(fq.contains(q->parse("x^2 + y*z")));
  EXPECT_TRUE(fq.contains(q->parse("y*z")));
}

TEST_F(IdealTest, FrobeniusComposition) {
  std::mt19937_64 rng(41);
  int cases = 0;
  for (std::uint32_t p : {2u, 3u}) {
    auto ring = RingSpec::create(p, {"x", "y", "z"});
    for (int trial = 0; trial < 30; ++trial) {
      auto i = random_ideal(ring, rng, 2);
      auto lhs = frobenius_power(frobenius_power(i, p), p);
      auto rhs = frobenius_power(i, p * p);
      EXPECT_TRUE(lhs.equals(rhs));
      ++cases;
    }
  }
  EXPECT_GE(cases, 50);
}

TEST_F(IdealTest, HilbertSeriesExamples) {
  EXPECT_EQ(hilbert_series(make(r2, "x, y")).numerator, UniPolynomial({1, -2, 1}));
  EXPECT_EQ(hilbert_series(make(r2, "x^2, x*y")).numerator, UniPolynomial({1, 0, -2, 1}));
  EXPECT_TRUE(hilbert_series(Ideal::unit(r2)).numerator.is_zero());
  EXPECT_EQ(krull_dimension(make(r2, "x^2, x*y")), 1u);
  EXPECT_FALSE(krull_dimension(Ideal::unit(r2)));
  EXPECT_EQ(krull_dimension(Ideal::zero(r2)), 2u);
  EXPECT_THROW(hilbert_series(make(r2, "x^2 + y")), NotHomogeneous);
  auto q = RingSpec::create(2, {"x", "y", "z"}, {"x^2 + y*z"});
  EXPECT_EQ(ring_dimension(q), 2u);
}

TEST_F(IdealTest, HilbertSeriesMatchesStandardMonomials) {
  std::mt19937_64 rng(43);
  int cases = 0;
  for (std::size_t nv : {2u, 3u, 4u}) {
    std::vector<std::string> names{"a", "b", "c", "d"};
    names.resize(nv);
    auto ring = RingSpec::create(2, names);
    for (int trial = 0; trial < 25; ++trial) {
      auto gens = random_monomials(nv, rng, 1 + static_cast<int>(rng() % 5), 5);
      unsigned maxdeg = 0;
      std::vector<Polynomial> polys;
      for (const auto& m : gens) {
        maxdeg = std::max(maxdeg, m.degree());
        polys.push_back(Polynomial::monomial(ring->ambient(), m));
      }
      auto series = hilbert_series(Ideal(ring, polys));
      auto expanded = series.expand(2 * maxdeg + 2);
      for (unsigned d = 0; d <= 2 * maxdeg + 2; ++d)
        EXPECT_EQ(expanded[d], oracle::standard_monomial_count(nv, gens, d)) << "degree " << d;
      ++cases;
    }
  }
  EXPECT_GE(cases, 50);
}

TEST_F(IdealTest, HilbertSeriesOfPolynomialIdeals) {
  std::mt19937_64 rng(47);
  for (std::uint32_t p : {2u, 5u}) {
    auto ring = RingSpec::create(p, {"x", "y", "z"});
    for (int trial = 0; trial < 15; ++trial) {
      auto i = random_ideal(ring, rng, 3);
      auto expanded = hilbert_series(i).expand(7);
      // dimension of (S/I)_d by the Macaulay oracle: count degree-d monomials outside the span
      for (unsigned d = 0; d <= 7; ++d) {
        oracle::SpanOracle span(ring->field());
        auto monos = oracle::monomials_of_degree(3, d);
        std::map<Monomial, std::size_t, std::function<bool(const Monomial&, const Monomial&)>> index(
            [](const Monomial& a, const Monomial& b) {
              for (std::size_t k = 0; k < a.size(); ++k)
                if (a[k] != b[k]) return a[k] < b[k];
              return false;
            });
        for (const auto& m : monos) index.emplace(m, index.size());
        for (const auto& g : i.generators()) {
          if (g.degree() > static_cast<int>(d)) continue;
          for (const auto& m : oracle::monomials_of_degree(3, d - static_cast<unsigned>(g.degree()))) {
            std::map<std::size_t, Coeff> row;
            Polynomial multiple = g.mul_term(m, 1);
            for (const auto& t : multiple.terms()) row[index.at(t.monomial)] = t.coeff;
            span.add(std::move(row));
          }
        }
        EXPECT_EQ(expanded[d], static_cast<std::int64_t>(monos.size() - span.rank()));
      }
    }
  }
}

TEST_F(IdealTest, Colength) {
  EXPECT_EQ(colength(make(r2, "x, y")), 1u);
  EXPECT_EQ(colength(make(r2, "x^2, y^2")), 4u);
  EXPECT_EQ(colength(make(r2, "x^4, x^2*y^2, y^4")), 12u);
  EXPECT_EQ(colength(Ideal::unit(r2)), 0u);
  EXPECT_THROW(colength(make(r2, "x^2, x*y")), NotMPrimary);
}

TEST_F(IdealTest, H0Length) {
  EXPECT_EQ(h0_length(make(r2, "x^2, x*y")), 1u);
  EXPECT_EQ(h0_length(make(r2, "x")), 0u);
  EXPECT_EQ(h0_length(Ideal::maximal_power(r2, 2)), 3u);
  EXPECT_EQ(h0_length(Ideal::unit(r2)), 0u);
}

TEST_F(IdealTest, H0LengthMatchesMonomialEnumeration) {
  std::mt19937_64 rng(53);
  for (std::size_t nv : {2u, 3u}) {
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(nv);
    auto ring = RingSpec::create(3, names);
    for (int trial = 0; trial < 40; ++trial) {
      auto gens = random_monomials(nv, rng, 1 + static_cast<int>(rng() % 4), 5);
      std::vector<Polynomial> polys;
      for (const auto& m : gens) polys.push_back(Polynomial::monomial(ring->ambient(), m));
      Ideal i(ring, polys);
      EXPECT_EQ(h0_length(i), oracle::monomial_h0_length(nv, gens)) << i.to_string();
      if (krull_dimension(i) == 0u) {
        EXPECT_EQ(colength(i), oracle::monomial_colength(nv, gens));
        EXPECT_EQ(h0_length(i), colength(i));
      }
    }
  }
}

TEST_F(IdealTest, MPrimaryH0EqualsColength) {
  std::mt19937_64 rng(59);
  int seen = 0;
  for (std::uint32_t p : {2u, 3u}) {
    auto ring = RingSpec::create(p, {"x", "y", "z"});
    for (int trial = 0; trial < 40 && seen < 15; ++trial) {
      auto i = random_ideal(ring, rng, 2, 4);
      if (krull_dimension(i) != 0u) continue;
      ++seen;
      EXPECT_EQ(h0_length(i), colength(i));
    }
  }
  EXPECT_GT(seen, 0);
}

TEST_F(IdealTest, QuotientRing) {
  auto q = RingSpec::create(2, {"x", "y", "z"}, {"x^2 + y*z"});
  auto zero = Ideal::zero(q);
  EXPECT_TRUE(zero.contains(q->parse("x^3 + x*y*z")));
  EXPECT_TRUE(Ideal(q, {q->parse("x^2 + y*z")}).is_zero());
  auto m = Ideal::maximal(q);
  EXPECT_EQ(colength(m), 1u);
  // R/(y, z) = F[x]/(x^2)
  EXPECT_EQ(colength(Ideal(q, {q->parse("y"), q->parse("z")})), 2u);
  auto min = Ideal(q, {q->parse("x"), q->parse("x^2 + y*z + y")}).minimalized();
  for (const auto& g : min.generators()) EXPECT_FALSE(zero.contains(g));
}

TEST_F(IdealTest, KeysIdentifyEqualIdeals) {
  auto a = make(r2, "x^2 + x*y, x*y");
  auto b = make(r2, "x^2, x*y");
  EXPECT_EQ(a.key(), b.key());
  EXPECT_NE(a.key(), make(r2, "x^2").key());
}
