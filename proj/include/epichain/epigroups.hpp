#pragma once

// Finite semigroups viewed as epigroups: every element has a power in a
// subgroup, which makes pseudo-inversion a total unary operation.

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epichain/error.hpp"

namespace epichain {

  class NotAssociative : public Error {
   public:
    NotAssociative(std::size_t x, std::size_t y, std::size_t z);
    std::array<std::size_t, 3> const& triple() const noexcept {
      return triple_;
    }

   private:
    std::array<std::size_t, 3> triple_;
  };

  class FiniteSemigroup {
   public:
    using Element = std::size_t;

    // table[x * order + y] = xy. Throws std::invalid_argument on a malformed
    // table and NotAssociative on the first failing (x, y, z).
    FiniteSemigroup(std::size_t order, std::vector<Element> table);
    FiniteSemigroup(std::vector<std::vector<Element>> const& rows);

    std::size_t order() const noexcept {
      return order_;
    }
    Element mul(Element x, Element y) const noexcept {
      return table_[x * order_ + y];
    }
    // x^k for k >= 1.
    Element pow(Element x, std::size_t k) const;

    std::vector<Element> const& table() const noexcept {
      return table_;
    }

    friend bool operator==(FiniteSemigroup const&, FiniteSemigroup const&) = default;

   private:
    std::size_t          order_;
    std::vector<Element> table_;
  };

  // The monogenic subsemigroup <a> = {a, a^2, ...}: a^index = a^(index+period)
  // with index and period least.
  struct MonogenicShape {
    std::size_t index  = 1;
    std::size_t period = 1;
  };

  MonogenicShape monogenic_shape(FiniteSemigroup const& S, FiniteSemigroup::Element a);

  struct EpigroupStructure {
    FiniteSemigroup                       base;
    std::vector<FiniteSemigroup::Element> unit_of;         // e_a
    std::vector<FiniteSemigroup::Element> pseudo_inverse;  // the inverse of a e_a
    std::vector<std::size_t>              element_index;   // least n with a^n in a subgroup
    std::size_t                           index = 1;
  };

  EpigroupStructure analyze(FiniteSemigroup const& S);

  // Least n such that every a^n lies in a subgroup.
  std::size_t epigroup_index(FiniteSemigroup const& S);

  struct IdentityCheckReport {
    std::string                        identity;
    bool                               holds = true;
    std::map<std::string, std::size_t> counterexample;  // variable -> element
  };

  // The four identities defining E_n, evaluated with the computed
  // pseudo-inverse: associativity, x x' = x' x, x x'^2 = x', x^(n+1) x' = x^n.
  std::vector<IdentityCheckReport> check_E_n(FiniteSemigroup const& S, std::size_t n);

  // As above with a caller-supplied unary operation in place of the
  // pseudo-inverse.
  std::vector<IdentityCheckReport> check_E_n(FiniteSemigroup const&                       S,
                                             std::vector<FiniteSemigroup::Element> const& unary,
                                             std::size_t                                  n);

  bool all_hold(std::vector<IdentityCheckReport> const& reports);

  constexpr std::size_t kMaxEnumeratedOrder = 3;

  // Every associative table on {0..m-1}, labeled (no isomorphism
  // reduction), in lexicographic table order. Throws SizeGuardError for m > 3.
  void for_each_semigroup(std::size_t m, std::function<void(FiniteSemigroup const&)> const& visit);

  std::vector<FiniteSemigroup> enumerate_semigroups(std::size_t m);

}  // namespace epichain
