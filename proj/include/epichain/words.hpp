#pragma once

// Words over a countable alphabet, substitutions (endomorphisms of the free
// semigroup) and the applicability quasi-order u <= v iff v = a s(u) b.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epichain/error.hpp"

namespace epichain {

  struct Letter {
    std::uint32_t id = 0;

    friend auto operator<=>(Letter, Letter) = default;
  };

  // Letters with id < 26 print as 'a' + id.
  constexpr std::uint32_t kNamedLetters = 26;

  std::optional<char> display_name(Letter x);

  class Word {
   public:
    using value_type     = Letter;
    using const_iterator = std::vector<Letter>::const_iterator;

    // Throws std::invalid_argument on an empty sequence; the free semigroup
    // has no empty word.
    explicit Word(std::vector<Letter> letters);
    Word(std::initializer_list<std::uint32_t> ids);

    // "abcab" (named letters) or "0,1,0" (raw ids). Throws ParseError.
    static Word parse(std::string_view text);

    // Named form when every letter has a display name, id list otherwise.
    std::string to_string() const;

    std::size_t size() const noexcept {
      return letters_.size();
    }
    Letter operator[](std::size_t i) const noexcept {
      return letters_[i];
    }
    Letter front() const noexcept {
      return letters_.front();
    }
    const_iterator begin() const noexcept {
      return letters_.begin();
    }
    const_iterator end() const noexcept {
      return letters_.end();
    }
    std::span<const Letter> letters() const noexcept {
      return letters_;
    }

    // Distinct letters in order of first occurrence.
    std::vector<Letter> content() const;

    // Factor [start, end); throws std::out_of_range on an empty or
    // out-of-bounds range.
    Word factor(std::size_t start, std::size_t end) const;

    friend Word operator+(Word const& lhs, Word const& rhs);
    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::vector<Letter> letters_;
  };

  // x^k for k >= 1.
  Word power(Letter x, std::size_t k);
  Word power(Word const& w, std::size_t k);

  // Shorter words first, ties broken lexicographically.
  bool length_lex_less(Word const& lhs, Word const& rhs);

  class MissingLetterError : public Error {
   public:
    explicit MissingLetterError(Letter x);
    Letter letter() const noexcept {
      return letter_;
    }

   private:
    Letter letter_;
  };

  class Substitution {
   public:
    Substitution() = default;

    void set(Letter x, Word image);
    Word const* find(Letter x) const;
    std::size_t size() const noexcept {
      return images_.size();
    }
    auto begin() const noexcept {
      return images_.begin();
    }
    auto end() const noexcept {
      return images_.end();
    }

    // The identity on the letters of w.
    static Substitution identity_on(Word const& w);

    friend bool operator==(Substitution const&, Substitution const&) = default;

   private:
    std::map<Letter, Word> images_;
  };

  // Throws MissingLetterError if some letter of u has no image.
  Word apply_substitution(Substitution const& s, Word const& u);

  bool is_factor(Word const& u, Word const& v);

  struct ApplicabilityWitness {
    Substitution substitution;
    std::size_t  start = 0;
    std::size_t  end   = 0;  // exclusive
  };

  struct ApplicabilityOptions {
    // Maximum number of search nodes; unlimited when empty.
    std::optional<std::uint64_t> node_budget;
  };

  // Thrown when a node budget runs out. Never a "not applicable" answer.
  class BudgetExceeded : public Error {
   public:
    explicit BudgetExceeded(std::uint64_t budget);
  };

  // Exact decision: a witness iff some substitution with non-empty images
  // maps u onto a factor of v. Leftmost start, shortest images first.
  std::optional<ApplicabilityWitness>
  is_applicable(Word const& u, Word const& v, ApplicabilityOptions const& opts = {});

  struct SquareOccurrence {
    std::size_t position = 0;
    Word        root;
  };

  // Leftmost occurrence of a factor tt, shortest root at that position.
  std::optional<SquareOccurrence> contains_square(Word const& w);

  // True iff w ends with a factor tt.
  bool has_square_suffix(std::span<const Letter> w);

  // Square-free words over letters 0..k-1 of length len+1, in lexicographic
  // order, given those of length len in lexicographic order.
  std::vector<Word> extend_square_free(std::span<const Word> level, std::size_t k);

  // Square-free words over the first k letters of length <= max_length, in
  // length-then-lexicographic order. Stops early when visit returns false.
  void for_each_square_free(std::size_t                              k,
                            std::size_t                              max_length,
                            std::function<bool(Word const&)> const& visit);

  std::vector<Word> enumerate_square_free(std::size_t k, std::size_t max_length);

  // Every word over the first k letters of length <= max_length in
  // length-then-lexicographic order. Stops early when visit returns false.
  void for_each_word(std::size_t                              k,
                     std::size_t                              max_length,
                     std::function<bool(Word const&)> const& visit);

}  // namespace epichain
