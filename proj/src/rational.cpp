#include "epichain/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "epichain/error.hpp"

namespace epichain {

  Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) {
      throw std::invalid_argument("rational with zero denominator");
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    auto const g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  namespace {
    std::int64_t parse_int(std::string_view text, std::string_view whole) {
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("bad rational '" + std::string(whole) + "'");
      }
      return value;
    }
  }  // namespace

  Rational Rational::parse(std::string_view text) {
    auto const slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_int(text, text));
    }
    auto const den = parse_int(text.substr(slash + 1), text);
    if (den == 0) {
      throw ParseError("rational '" + std::string(text) + "' has zero denominator");
    }
    return Rational(parse_int(text.substr(0, slash), text), den);
  }

  std::string Rational::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator+(Rational const& a, Rational const& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  Rational operator-(Rational const& a, Rational const& b) {
    return a + (-b);
  }

  Rational operator-(Rational const& a) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }

  std::strong_ordering operator<=>(Rational const& a, Rational const& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  std::uint64_t stern_diatomic(std::uint64_t n) {
    std::uint64_t a = 1, b = 0;
    while (n > 0) {
      if (n & 1U) {
        b += a;
      } else {
        a += b;
      }
      n >>= 1U;
    }
    return b;
  }

  Rational calkin_wilf(std::uint64_t k) {
    if (k == 0) {
      throw std::invalid_argument("Calkin-Wilf positions start at 1");
    }
    return Rational(static_cast<std::int64_t>(stern_diatomic(k)),
                    static_cast<std::int64_t>(stern_diatomic(k + 1)));
  }

  Rational rational_of_nat(std::uint64_t n) {
    if (n == 0) {
      return Rational(0);
    }
    auto const k = (n + 1) / 2;
    auto const q = calkin_wilf(k);
    return (n % 2 == 1) ? q : -q;
  }

}  // namespace epichain
