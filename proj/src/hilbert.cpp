#include "hkfun/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "hkfun/errors.hpp"

namespace hkfun {

UniPolynomial::UniPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPolynomial UniPolynomial::one_minus_power(unsigned k) {
  if (k == 0) return UniPolynomial();
  std::vector<std::int64_t> c(k + 1, 0);
  c[0] = 1;
  c[k] = -1;
  return UniPolynomial(std::move(c));
}

void UniPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t UniPolynomial::at_one() const noexcept {
  std::int64_t s = 0;
  for (auto c : coeffs_) s += c;
  return s;
}

std::optional<UniPolynomial> UniPolynomial::divide_one_minus_t() const {
  if (coeffs_.empty()) return UniPolynomial();
  // N = (1 - t) Q  <=>  Q_k = sum_{i <= k} N_i, with the full sum zero
  std::vector<std::int64_t> q(coeffs_.size() - 1);
  std::int64_t running = 0;
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
    running += coeffs_[k];
    q[k] = running;
  }
  if (running + coeffs_.back() != 0) return std::nullopt;
  return UniPolynomial(std::move(q));
}

UniPolynomial operator+(const UniPolynomial& a, const UniPolynomial& b) {
  std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UniPolynomial(std::move(c));
}

UniPolynomial operator-(const UniPolynomial& a, const UniPolynomial& b) {
  std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return UniPolynomial(std::move(c));
}

UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return UniPolynomial();
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPolynomial(std::move(c));
}

UniPolynomial UniPolynomial::shift(unsigned k) const {
  if (is_zero()) return *this;
  std::vector<std::int64_t> c(k, 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return UniPolynomial(std::move(c));
}

std::string UniPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    std::int64_t a = c < 0 ? -c : c;
    if (k == 0 || a != 1) out << a;
    if (k > 0) out << (a != 1 ? "*" : "") << "t" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return out.str();
}

std::vector<std::int64_t> HilbertSeries::expand(std::size_t max_degree) const {
  std::vector<std::int64_t> series(max_degree + 1, 0);
  for (std::size_t k = 0; k <= max_degree; ++k) series[k] = numerator[k];
  for (std::size_t r = 0; r < ambient_dim; ++r)
    for (std::size_t k = 1; k <= max_degree; ++k) series[k] += series[k - 1];
  return series;
}

std::optional<std::size_t> HilbertSeries::dimension() const {
  if (numerator.is_zero()) return std::nullopt;
  std::size_t factors = 0;
  UniPolynomial current = numerator;
  while (factors < ambient_dim) {
    auto q = current.divide_one_minus_t();
    if (!q) break;
    current = *q;
    ++factors;
  }
  return ambient_dim - factors;
}

UniPolynomial HilbertSeries::reduced_numerator() const {
  UniPolynomial current = numerator;
  for (std::size_t r = 0; r < ambient_dim; ++r) {
    auto q = current.divide_one_minus_t();
    if (!q) break;
    current = *q;
  }
  return current;
}

void minimalize_monomials(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> kept;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : kept)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(m);
  }
  gens = std::move(kept);
}

namespace {

UniPolynomial numerator_rec(std::vector<Monomial> gens) {
  minimalize_monomials(gens);
  if (gens.empty()) return UniPolynomial::one();
  if (gens.front().is_one()) return UniPolynomial();
  const std::size_t n = gens.front().size();

  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) {
        coprime = false;
        break;
      }
  if (coprime) {
    UniPolynomial result = UniPolynomial::one();
    for (const auto& g : gens) result = result * UniPolynomial::one_minus_power(g.degree());
    return result;
  }

  // pivot variable: the one occurring in the most generators
  std::size_t best_var = 0, best_count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t count = 0;
    for (const auto& g : gens)
      if (g[v] > 0) ++count;
    if (count > best_count) {
      best_count = count;
      best_var = v;
    }
  }
  std::vector<unsigned> exps;
  for (const auto& g : gens)
    if (g[best_var] > 0 && g[best_var] != g.degree()) exps.push_back(g[best_var]);
  if (exps.empty()) throw InternalError("Hilbert pivot selection failed");
  std::nth_element(exps.begin(), exps.begin() + exps.size() / 2, exps.end());
  const unsigned e = exps[exps.size() / 2];
  Monomial pivot(n);
  pivot.set(best_var, e);

  std::vector<Monomial> with_pivot;
  for (const auto& g : gens)
    if (!pivot.divides(g)) with_pivot.push_back(g);
  with_pivot.push_back(pivot);

  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const auto& g : gens) quotient.push_back(g / gcd(g, pivot));

  return numerator_rec(std::move(with_pivot)) + numerator_rec(std::move(quotient)).shift(e);
}

}  // namespace

UniPolynomial monomial_ideal_numerator(std::vector<Monomial> generators) { return numerator_rec(std::move(generators)); }

}  // namespace hkfun
