#pragma once

// Finite lattices given by their order relation, partition (equivalence)
// lattices, and brute-force checks of lower-/upper-modularity.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "epichain/error.hpp"

namespace epichain {

  class NotALattice : public Error {
   public:
    using Error::Error;
  };

  class FiniteLattice {
   public:
    using Element = std::size_t;

    // leq[i * size + j] != 0 iff i <= j. Throws NotALattice unless leq is a
    // partial order in which every pair has a join and a meet.
    FiniteLattice(std::size_t size, std::vector<char> leq);

    // Reflexive-transitive closure of the given pairs (i, j) meaning i <= j.
    static FiniteLattice from_relation(std::size_t                                     size,
                                       std::span<const std::pair<Element, Element>> pairs);

    std::size_t size() const noexcept {
      return size_;
    }
    bool leq(Element x, Element y) const noexcept {
      return leq_[x * size_ + y] != 0;
    }
    Element join(Element x, Element y) const noexcept {
      return join_[x * size_ + y];
    }
    Element meet(Element x, Element y) const noexcept {
      return meet_[x * size_ + y];
    }
    Element bottom() const noexcept {
      return bottom_;
    }
    Element top() const noexcept {
      return top_;
    }

    // The same carrier with the order reversed.
    FiniteLattice dual() const;

    // Pairs (x, y) with x < y and nothing strictly between.
    std::vector<std::pair<Element, Element>> covers() const;

    std::vector<char> const& relation() const noexcept {
      return leq_;
    }

    friend bool operator==(FiniteLattice const& a, FiniteLattice const& b) {
      return a.size_ == b.size_ && a.leq_ == b.leq_;
    }

   private:
    std::size_t          size_;
    std::vector<char>    leq_;
    std::vector<Element> join_;
    std::vector<Element> meet_;
    Element              bottom_ = 0;
    Element              top_    = 0;
  };

  // Small named lattices. Pentagon elements are 0, a, b, c, 1 (ids 0..4)
  // with 0 < a < c < 1 and 0 < b < 1; diamond has atoms 1, 2, 3.
  FiniteLattice chain_lattice(std::size_t m);
  FiniteLattice pentagon();
  FiniteLattice diamond();

  // All lattices on the labeled set {0..m-1}, each exactly once. m <= 6.
  void for_each_lattice(std::size_t m, std::function<void(FiniteLattice const&)> const& visit);

  ////////////////////////////////////////////////////////////////////////
  // Modularity
  ////////////////////////////////////////////////////////////////////////

  struct ModularityCheck {
    bool holds = true;
    // (y, z) violating the defining equation.
    std::optional<std::pair<FiniteLattice::Element, FiniteLattice::Element>> counterexample;
  };

  struct ModularityReport {
    FiniteLattice::Element element = 0;
    ModularityCheck        lower;
    ModularityCheck        upper;
  };

  // x <= y  implies  (z v x) ^ y = (z ^ y) v x.
  bool lower_modular_at(FiniteLattice const& L,
                        FiniteLattice::Element x,
                        FiniteLattice::Element y,
                        FiniteLattice::Element z);
  // y <= x  implies  (z ^ x) v y = (z v y) ^ x.
  bool upper_modular_at(FiniteLattice const& L,
                        FiniteLattice::Element x,
                        FiniteLattice::Element y,
                        FiniteLattice::Element z);

  // Exhaustive over y and z; the first violating pair in (y, z) order.
  ModularityCheck  is_lower_modular(FiniteLattice const& L, FiniteLattice::Element x);
  ModularityCheck  is_upper_modular(FiniteLattice const& L, FiniteLattice::Element x);
  ModularityReport analyze_element(FiniteLattice const& L, FiniteLattice::Element x);

  ////////////////////////////////////////////////////////////////////////
  // Partitions
  ////////////////////////////////////////////////////////////////////////

  class Partition {
   public:
    // block_of[i] is any label; relabeled so blocks are numbered by least
    // element.
    explicit Partition(std::vector<std::size_t> block_of);
    static Partition from_blocks(std::size_t carrier, std::vector<std::vector<std::size_t>> const& blocks);
    static Partition discrete(std::size_t carrier);

    std::size_t size() const noexcept {
      return block_of_.size();
    }
    std::size_t block_of(std::size_t i) const noexcept {
      return block_of_[i];
    }
    std::size_t num_blocks() const noexcept {
      return num_blocks_;
    }
    std::vector<std::vector<std::size_t>> blocks() const;

    // "{{0,1},{2}}"
    std::string to_string() const;

    friend bool operator==(Partition const&, Partition const&) = default;
    friend auto operator<=>(Partition const&, Partition const&) = default;

   private:
    std::vector<std::size_t> block_of_;
    std::size_t              num_blocks_ = 0;
  };

  // a refines b: every block of a lies inside a block of b.
  bool refines(Partition const& a, Partition const& b);
  Partition partition_join(Partition const& a, Partition const& b);
  Partition partition_meet(Partition const& a, Partition const& b);

  std::size_t nonsingleton_class_count(Partition const& p);

  // All partitions of {0..s-1} in restricted-growth-string order.
  std::vector<Partition> all_partitions(std::size_t s);

  constexpr std::size_t kMaxEquivalenceCarrier = 6;

  struct EquivalenceLattice {
    FiniteLattice          lattice;
    std::vector<Partition> partitions;  // element i is partitions[i]

    FiniteLattice::Element index_of(Partition const& p) const;
  };

  // Partitions of an s-set ordered by refinement. Throws SizeGuardError for
  // s outside [1, 6].
  EquivalenceLattice equivalence_lattice(std::size_t s);

  struct PropositionResult {
    bool                     holds = true;
    std::size_t              partitions_checked = 0;
    std::optional<Partition> violation;
  };

  // For every partition of an s-set: upper-modular in Eq(s) iff at most one
  // block has two or more elements.
  PropositionResult verify_vv_proposition(std::size_t s);

  ////////////////////////////////////////////////////////////////////////
  // Separation lemmas
  ////////////////////////////////////////////////////////////////////////

  struct Triple {
    FiniteLattice::Element first = 0, second = 0, third = 0;
    friend bool operator==(Triple const&, Triple const&) = default;
  };

  struct SeparationResult {
    bool                  holds = true;
    std::optional<Triple> violation;
  };

  // (c1, c2, e): c1 lower-modular, c1 <= c2, e ^ c2 <= c1 and e v c1 = e v c2
  // force c1 = c2.
  SeparationResult chain_separation_check(FiniteLattice const& L);

  // (a1, a2, e): a1 lower-modular, e ^ (a1 v a2) <= a1 and a2 <= e v a1
  // force a2 <= a1.
  SeparationResult antichain_separation_check(FiniteLattice const& L);

  // A triple meeting the chain-separation hypotheses except that c1 is not
  // lower-modular, with c1 != c2. First in (c1, c2, e) order.
  std::optional<Triple> separation_mutation_witness(FiniteLattice const& L);

  ////////////////////////////////////////////////////////////////////////
  // Output
  ////////////////////////////////////////////////////////////////////////

  // Covering relation as a DOT digraph drawn bottom to top. Missing labels
  // fall back to element ids.
  std::string hasse_dot(FiniteLattice const& L, std::span<const std::string> labels = {});

}  // namespace epichain
