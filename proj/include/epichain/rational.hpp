#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace epichain {

  // A rational number in lowest terms with a positive denominator. Used as
  // the index set of word families and variety parameters.
  class Rational {
   public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    // "p/q" or "p"; throws ParseError.
    static Rational parse(std::string_view text);

    std::int64_t num() const noexcept {
      return num_;
    }
    std::int64_t den() const noexcept {
      return den_;
    }

    // Always "p/q", including "0/1" and "3/1".
    std::string to_string() const;

    friend Rational operator+(Rational const& a, Rational const& b);
    friend Rational operator-(Rational const& a, Rational const& b);
    friend Rational operator-(Rational const& a);

    friend bool operator==(Rational const&, Rational const&) = default;
    friend std::strong_ordering operator<=>(Rational const& a, Rational const& b);

   private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
  };

  // Stern's diatomic sequence: fusc(0) = 0, fusc(1) = 1, fusc(2n) = fusc(n),
  // fusc(2n+1) = fusc(n) + fusc(n+1).
  std::uint64_t stern_diatomic(std::uint64_t n);

  // k-th positive rational (k >= 1) in Calkin-Wilf order: fusc(k)/fusc(k+1).
  Rational calkin_wilf(std::uint64_t k);

  // Bijection N -> Q: 0 -> 0, 2k-1 -> calkin_wilf(k), 2k -> -calkin_wilf(k).
  Rational rational_of_nat(std::uint64_t n);

}  // namespace epichain
