#pragma once

// Finite samples of an infinite family of square-free words that are
// pairwise non-applicable, indexed by rationals.

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "epichain/error.hpp"
#include "epichain/rational.hpp"
#include "epichain/words.hpp"

namespace epichain {

  class IndexedWord {
   public:
    IndexedWord(Rational index, Word word)
        : index_(index), word_(std::move(word)), first_letter_(word_.front()) {}

    Rational const& index() const noexcept {
      return index_;
    }
    Word const& word() const noexcept {
      return word_;
    }
    Letter first_letter() const noexcept {
      return first_letter_;
    }

    friend bool operator==(IndexedWord const&, IndexedWord const&) = default;

   private:
    Rational index_;
    Word     word_;
    Letter   first_letter_;
  };

  struct AntichainCertificate {
    std::vector<IndexedWord> members;
    std::size_t              checked_pairs      = 0;
    std::size_t              squarefree_checked = 0;
  };

  // members[pattern] is applicable to members[target].
  struct ApplicablePair {
    std::size_t          pattern = 0;
    std::size_t          target  = 0;
    ApplicabilityWitness witness;
  };

  struct SquareMember {
    std::size_t      member = 0;
    SquareOccurrence square;
  };

  using AntichainCounterexample = std::variant<ApplicablePair, SquareMember>;
  using AntichainVerdict        = std::variant<AntichainCertificate, AntichainCounterexample>;

  // Square checks come first (in member order), then ordered pairs (i, j),
  // i != j, in lexicographic order; the first failure is reported.
  AntichainVerdict verify_antichain(std::span<const IndexedWord> words);

  struct FamilyOptions {
    std::size_t alphabet_size = 3;
    // Shorter candidates are skipped. The greedy search admits one word per
    // renaming class at this length and none longer, so this bounds the
    // family size: 76 members over 3 letters at length 14.
    std::size_t min_length = 14;
    // Candidates longer than this are never generated.
    std::size_t max_length = 24;
  };

  class GenerationExhausted : public Error {
   public:
    GenerationExhausted(std::size_t found, std::size_t wanted, std::size_t max_length);
  };

  // Greedy search over square-free words in length-lex order: a candidate is
  // admitted iff it and every admitted member are mutually non-applicable.
  // Member i is indexed by rational_of_nat(i). The result is verified before
  // it is returned; throws GenerationExhausted at the length ceiling.
  std::vector<IndexedWord> generate_family(std::size_t count, FamilyOptions const& opts = {});

  // As generate_family, but member i is indexed by indices[i].
  std::vector<IndexedWord> generate_family_for(std::span<const Rational> indices,
                                               FamilyOptions const&     opts = {});

  // Looks up the member with the given index.
  IndexedWord const* find_member(std::span<const IndexedWord> family, Rational const& index);

}  // namespace epichain
