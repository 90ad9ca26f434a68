#pragma once

// 0-reduced nil-varieties of (epi)semigroups. A system {w = 0} presents the
// variety whose fully invariant congruence has a single non-singleton class:
// the words to which some generator is applicable. Every question about
// inclusion therefore reduces to applicability tests.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "epichain/antichain.hpp"
#include "epichain/error.hpp"
#include "epichain/rational.hpp"
#include "epichain/words.hpp"

namespace epichain {

  // Letter of the power word x^m.
  constexpr Letter kPowerLetter{23};

  class ZeroReducedSystem {
   public:
    // nil_exponent >= 2 is the m in x^m = 0. Extra generators keep their
    // first-occurrence order; duplicates and copies of x^m are dropped.
    ZeroReducedSystem(std::size_t nil_exponent, std::vector<Word> extra, std::string label = {});

    std::size_t nil_exponent() const noexcept {
      return nil_exponent_;
    }
    Word power_word() const {
      return power(kPowerLetter, nil_exponent_);
    }
    std::vector<Word> const& extra_generators() const noexcept {
      return extra_;
    }
    // x^m followed by the extra generators.
    std::vector<Word> generators() const;

    std::string const& label() const noexcept {
      return label_;
    }
    void set_label(std::string label) {
      label_ = std::move(label);
    }

    // Same nil exponent and the same generator set, order ignored.
    bool same_presentation(ZeroReducedSystem const& other) const;

   private:
    std::size_t       nil_exponent_;
    std::vector<Word> extra_;
    std::string       label_;
  };

  struct Consequence {
    bool                                holds = false;
    std::optional<Word>                 generator;  // the applicable generator
    std::optional<ApplicabilityWitness> witness;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // u = 0 follows from the system iff some generator (x^m first, then the
  // extras in order) is applicable to u.
  Consequence is_zero_consequence(ZeroReducedSystem const&    sys,
                                  Word const&                 u,
                                  ApplicabilityOptions const& opts = {});

  enum class VarietyKind { chain, antichain };  // C and A

  struct VarietySpec {
    VarietyKind           kind = VarietyKind::chain;
    std::size_t           n    = 1;
    Rational              xi;
    std::vector<Rational> pool;
  };

  // C: alpha >= xi.  A: xi - 1 < alpha < xi + 1.
  bool in_range(VarietyKind kind, Rational const& xi, Rational const& alpha);

  // The pool members selected by the spec, ascending and deduplicated.
  std::vector<Rational> selected_indices(VarietySpec const& spec);

  class MissingFamilyMember : public Error {
   public:
    explicit MissingFamilyMember(Rational const& index);
    Rational const& index() const noexcept {
      return index_;
    }

   private:
    Rational index_;
  };

  // x_alpha^(n-1) Z_alpha, where x_alpha is the first letter of Z_alpha; the
  // prefix is empty for n = 1.
  Word prefixed_generator(IndexedWord const& z, std::size_t n);

  // nil exponent n + 1 and one prefixed generator per selected alpha, in
  // ascending alpha. Throws MissingFamilyMember.
  ZeroReducedSystem build_variety(VarietySpec const& spec, std::span<const IndexedWord> family);

  std::string variety_label(VarietySpec const& spec);

  struct GeneratorTrace {
    Word        generator;
    Consequence consequence;
  };

  struct InclusionReport {
    bool                        included = false;
    std::optional<Word>         witness;  // a generator of sup not implied by sub
    std::vector<GeneratorTrace> trace;
  };

  // Is var(sub) contained in var(sup)? Holds iff sub's system implies every
  // generator of sup's system: more identities means a smaller variety.
  InclusionReport includes(ZeroReducedSystem const&    sub,
                           ZeroReducedSystem const&    sup,
                           ApplicabilityOptions const& opts = {});

  enum class Order { equal, a_below, b_below, incomparable };

  std::string to_string(Order o);

  struct Comparison {
    Order order = Order::equal;
    // A generator of a that fails in var(b): witnesses var(b) not inside var(a).
    std::optional<Word> a_only;
    // A generator of b that fails in var(a): witnesses var(a) not inside var(b).
    std::optional<Word> b_only;
  };

  Comparison compare(ZeroReducedSystem const&    a,
                     ZeroReducedSystem const&    b,
                     ApplicabilityOptions const& opts = {});

  // Meet of varieties: union of the systems, smaller nil exponent.
  ZeroReducedSystem meet(ZeroReducedSystem const& a, ZeroReducedSystem const& b);

  // u = 0 holds in var(a) v var(b) iff it holds in both.
  bool join_satisfies(ZeroReducedSystem const&    a,
                      ZeroReducedSystem const&    b,
                      Word const&                 u,
                      ApplicabilityOptions const& opts = {});

  // Nonzero elements of the relatively free object on k generators, up to
  // length max_length, in length-lex order.
  std::vector<Word> free_object_enumerate(ZeroReducedSystem const& sys,
                                          std::size_t              k,
                                          std::size_t              max_length);

}  // namespace epichain
