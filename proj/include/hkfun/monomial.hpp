#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace hkfun {

/// Upper bound on ring variables, including the auxiliary variable used by
/// intersections. User rings may therefore have at most kMaxVariables - 1.
inline constexpr std::size_t kMaxVariables = 8;

/// Dense exponent vector with cached total degree.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  std::size_t size() const noexcept { return size_; }
  unsigned operator[](std::size_t i) const noexcept { return exp_[i]; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, unsigned e);

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < size_; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < size_; ++i)
      if (exp_[i] != 0 && other.exp_[i] != 0) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  Monomial pow(unsigned k) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  void check_degree(std::uint64_t degree) const;

  std::array<Exponent, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
  std::uint8_t size_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Graded reverse lexicographic, lexicographic, or a two-block elimination
/// order whose first block is the first `block` variables (grevlex inside each
/// block). Any monomial touching the first block beats every monomial that
/// does not.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { kGrevlex, kLex, kBlockElimination };

  static MonomialOrder grevlex() noexcept { return MonomialOrder(Kind::kGrevlex, 0); }
  static MonomialOrder lex() noexcept { return MonomialOrder(Kind::kLex, 0); }
  static MonomialOrder elimination(std::size_t block) noexcept {
    return block == 0 ? grevlex() : MonomialOrder(Kind::kBlockElimination, block);
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }

  /// Positive if a > b, negative if a < b, zero if equal.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) noexcept : kind_(kind), block_(block) {}

  Kind kind_ = Kind::kGrevlex;
  std::size_t block_ = 0;
};

}  // namespace hkfun
