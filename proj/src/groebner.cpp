#include "hkfun/groebner.hpp"

#include <algorithm>

#include "hkfun/errors.hpp"

namespace hkfun {

GroebnerOptions& groebner_options() noexcept {
  thread_local GroebnerOptions options;
  return options;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  require_same_ring(*f.ring(), *ring_);
  return reduce_by(f, elements_);
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) { return basis.normal_form(f); }

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(*f.ring(), *g.ring());
  const auto& field = f.ring()->field();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.mul_term(l / f.leading_monomial(), field.inv(f.leading_coeff()));
  Polynomial b = g.mul_term(l / g.leading_monomial(), field.inv(g.leading_coeff()));
  return a - b;
}

namespace {

struct CriticalPair {
  std::size_t first;
  std::size_t second;
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(const RingPtr& ring) : ring_(ring), order_(ring->order()) {}

  void add_generator(const Polynomial& generator) {
    require_same_ring(*generator.ring(), *ring_);
    if (generator.is_zero()) return;
    Polynomial h = reduce(generator);
    if (!h.is_zero()) insert(h.monic());
  }

  void run() {
    const std::size_t budget = groebner_options().max_pairs;
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (++processed > budget) throw BudgetExceeded(budget);
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const auto& a = pairs_[k].lcm;
        const auto& b = pairs_[best].lcm;
        if (a.degree() < b.degree() || (a.degree() == b.degree() && order_.compare(a, b) < 0)) best = k;
      }
      CriticalPair pair = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      Polynomial h = reduce(s_polynomial(polys_[pair.first], polys_[pair.second]));
      if (!h.is_zero()) insert(h.monic());
    }
  }

  GroebnerBasis reduced_basis() const {
    std::vector<Polynomial> basis;
    for (std::size_t idx : active_) basis.push_back(polys_[idx]);
    // active_ is already minimal: distinct leading monomials, none dividing another
    std::vector<Polynomial> reduced;
    reduced.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      const auto& terms = basis[i].terms();
      Polynomial tail = reduce_by(Polynomial::from_sorted(ring_, {terms.begin() + 1, terms.end()}), others);
      std::vector<Term> out{terms.front()};
      out.insert(out.end(), tail.terms().begin(), tail.terms().end());
      reduced.push_back(Polynomial::from_sorted(ring_, std::move(out)).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order_.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return GroebnerBasis(ring_, std::move(reduced), true);
  }

 private:
  Polynomial reduce(const Polynomial& f) const {
    std::vector<Term> current = f.terms();
    std::vector<Term> remainder;
    std::size_t pos = 0;
    while (pos < current.size()) {
      const Term& lead = current[pos];
      const Polynomial* divisor = nullptr;
      for (std::size_t idx : active_) {
        const auto& g = polys_[idx];
        if (g.leading_monomial().degree() <= lead.monomial.degree() && g.leading_monomial().divides(lead.monomial)) {
          divisor = &g;
          break;
        }
      }
      if (divisor == nullptr) {
        remainder.push_back(lead);
        ++pos;
        continue;
      }
      // basis elements are monic
      Monomial m = lead.monomial / divisor->leading_monomial();
      current = sub_mul_terms(*ring_, std::span<const Term>(current).subspan(pos), lead.coeff, m, divisor->terms());
      pos = 0;
    }
    return Polynomial::from_sorted(ring_, std::move(remainder));
  }

  // Gebauer-Moeller update for a new element h.
  void insert(Polynomial h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial lh = polys_[hi].leading_monomial();

    std::vector<Monomial> lcms;
    lcms.reserve(active_.size());
    for (std::size_t idx : active_) lcms.push_back(lcm(lh, polys_[idx].leading_monomial()));

    std::vector<std::size_t> accepted;
    for (std::size_t a = 0; a < active_.size(); ++a) {
      bool keep = lh.coprime(polys_[active_[a]].leading_monomial());
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < active_.size() && keep; ++b)
          if (lcms[b].divides(lcms[a])) keep = false;
        for (std::size_t d : accepted) {
          if (!keep) break;
          if (lcms[d].divides(lcms[a])) keep = false;
        }
      }
      if (keep) accepted.push_back(a);
    }

    std::erase_if(pairs_, [&](const CriticalPair& p) {
      if (!lh.divides(p.lcm)) return false;
      Monomial l1 = lcm(polys_[p.first].leading_monomial(), lh);
      Monomial l2 = lcm(lh, polys_[p.second].leading_monomial());
      return !(l1 == p.lcm) && !(l2 == p.lcm);
    });

    for (std::size_t a : accepted) {
      std::size_t g = active_[a];
      if (!lh.coprime(polys_[g].leading_monomial())) pairs_.push_back({g, hi, lcms[a]});
    }

    std::erase_if(active_, [&](std::size_t idx) { return lh.divides(polys_[idx].leading_monomial()); });
    active_.push_back(hi);
  }

  RingPtr ring_;
  const MonomialOrder& order_;
  std::vector<Polynomial> polys_;
  std::vector<std::size_t> active_;
  std::vector<CriticalPair> pairs_;
};

}  // namespace

GroebnerBasis groebner_basis(const RingPtr& ring, std::span<const Polynomial> generators) {
  std::vector<Polynomial> sorted(generators.begin(), generators.end());
  std::erase_if(sorted, [](const Polynomial& f) { return f.is_zero(); });
  std::sort(sorted.begin(), sorted.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->order().compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  Buchberger engine(ring);
  for (const auto& g : sorted) {
    if (g.is_constant()) {
      return GroebnerBasis(ring, {Polynomial::constant(ring, 1)}, true);
    }
    engine.add_generator(g);
  }
  engine.run();
  return engine.reduced_basis();
}

}  // namespace hkfun
