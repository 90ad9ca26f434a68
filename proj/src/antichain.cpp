#include "epichain/antichain.hpp"

#include <stdexcept>
#include <string>

namespace epichain {

  AntichainVerdict verify_antichain(std::span<const IndexedWord> words) {
    AntichainCertificate cert;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (auto sq = contains_square(words[i].word())) {
        return AntichainCounterexample{SquareMember{i, std::move(*sq)}};
      }
      ++cert.squarefree_checked;
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (i == j) {
          continue;
        }
        if (auto w = is_applicable(words[i].word(), words[j].word())) {
          return AntichainCounterexample{ApplicablePair{i, j, std::move(*w)}};
        }
        ++cert.checked_pairs;
      }
    }
    cert.members.assign(words.begin(), words.end());
    return cert;
  }

  GenerationExhausted::GenerationExhausted(std::size_t found,
                                           std::size_t wanted,
                                           std::size_t max_length)
      : Error("found only " + std::to_string(found) + " of " + std::to_string(wanted)
              + " family members with words of length <= " + std::to_string(max_length)
              + "; raise the length ceiling") {}

  namespace {

    std::vector<Word> greedy_words(std::size_t count, FamilyOptions const& opts) {
      if (opts.alphabet_size < 3) {
        throw std::invalid_argument("family generation needs an alphabet of at least 3 letters");
      }
      std::vector<Word> admitted;
      if (count == 0) {
        return admitted;
      }
      for_each_square_free(opts.alphabet_size, opts.max_length, [&](Word const& w) {
        if (w.size() < opts.min_length) {
          return true;
        }
        for (auto const& m : admitted) {
          if (is_applicable(m, w) || is_applicable(w, m)) {
            return true;
          }
        }
        admitted.push_back(w);
        return admitted.size() < count;
      });
      if (admitted.size() < count) {
        throw GenerationExhausted(admitted.size(), count, opts.max_length);
      }
      return admitted;
    }

    std::vector<IndexedWord> certified(std::vector<IndexedWord> family) {
      if (!std::holds_alternative<AntichainCertificate>(verify_antichain(family))) {
        throw std::logic_error("greedy family failed verification");
      }
      return family;
    }

  }  // namespace

  std::vector<IndexedWord> generate_family(std::size_t count, FamilyOptions const& opts) {
    auto                     words = greedy_words(count, opts);
    std::vector<IndexedWord> family;
    family.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      family.emplace_back(rational_of_nat(i), std::move(words[i]));
    }
    return certified(std::move(family));
  }

  std::vector<IndexedWord> generate_family_for(std::span<const Rational> indices,
                                               FamilyOptions const&     opts) {
    auto                     words = greedy_words(indices.size(), opts);
    std::vector<IndexedWord> family;
    family.reserve(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
      family.emplace_back(indices[i], std::move(words[i]));
    }
    return certified(std::move(family));
  }

  IndexedWord const* find_member(std::span<const IndexedWord> family, Rational const& index) {
    for (auto const& m : family) {
      if (m.index() == index) {
        return &m;
      }
    }
    return nullptr;
  }

}  // namespace epichain
