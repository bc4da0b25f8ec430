#include "hkfun/parse.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "hkfun/errors.hpp"

namespace hkfun {

bool is_identifier(std::string_view name) noexcept {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name[0]);
  if (!std::isalpha(head) && head != '_') return false;
  for (char ch : name) {
    auto c = static_cast<unsigned char>(ch);
    if (!std::isalnum(c) && c != '_') return false;
  }
  return true;
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const RingPtr& ring, std::size_t offset)
      : text_(text), ring_(ring), offset_(offset) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty input");
    Polynomial result(ring_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    while (true) {
      Polynomial term = parse_term();
      result = negate ? result - term : result + term;
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected character '") + peek() + "'");
      negate = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(offset_ + pos_, message); }

  // Natural number; reduced mod `modulus` when nonzero, else range-checked.
  std::uint64_t parse_nat(std::uint64_t modulus) {
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (modulus != 0) {
        value %= modulus;
      } else if (value > std::numeric_limits<std::uint16_t>::max()) {
        fail("exponent too large");
      }
      ++pos_;
    }
    return value;
  }

  Polynomial parse_term() {
    skip_space();
    const std::size_t start = pos_;
    Coeff coeff = 1;
    bool have_something = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = static_cast<Coeff>(parse_nat(ring_->field().characteristic()));
      have_something = true;
    }
    std::vector<unsigned> exps(ring_->nvars(), 0);
    while (true) {
      skip_space();
      if (at_end()) break;
      std::size_t save = pos_;
      if (peek() == '*') {
        if (!have_something) fail("'*' without a left operand");
        ++pos_;
        skip_space();
        if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
          fail("expected a variable after '*'");
      }
      if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
        pos_ = save;
        break;
      }
      const std::size_t name_start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string_view name = text_.substr(name_start, pos_ - name_start);
      auto index = ring_->index_of(name);
      if (!index) {
        pos_ = name_start;
        fail("unknown variable " + std::string(name));
      }
      unsigned exponent = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed exponent");
        exponent = static_cast<unsigned>(parse_nat(0));
      }
      exps[*index] += exponent;
      have_something = true;
    }
    if (!have_something) {
      pos_ = start;
      fail("expected a term");
    }
    return Polynomial::monomial(ring_, Monomial(std::span<const unsigned>(exps)), coeff);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return PolynomialParser(text, ring, 0).parse();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring, char separator) {
  std::vector<Polynomial> result;
  std::size_t begin = 0;
  while (true) {
    std::size_t end = text.find(separator, begin);
    std::string_view piece = text.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin);
    result.push_back(PolynomialParser(piece, ring, begin).parse());
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return result;
}

}  // namespace hkfun
