#include "epichain/varieties.hpp"

#include <algorithm>
#include <stdexcept>

namespace epichain {

  ZeroReducedSystem::ZeroReducedSystem(std::size_t       nil_exponent,
                                       std::vector<Word> extra,
                                       std::string       label)
      : nil_exponent_(nil_exponent), extra_(), label_(std::move(label)) {
    if (nil_exponent_ < 2) {
      throw std::invalid_argument("nil exponent must be at least 2");
    }
    auto const x = power_word();
    for (auto& w : extra) {
      if (w != x && std::find(extra_.begin(), extra_.end(), w) == extra_.end()) {
        extra_.push_back(std::move(w));
      }
    }
  }

  std::vector<Word> ZeroReducedSystem::generators() const {
    std::vector<Word> out;
    out.reserve(extra_.size() + 1);
    out.push_back(power_word());
    out.insert(out.end(), extra_.begin(), extra_.end());
    return out;
  }

  bool ZeroReducedSystem::same_presentation(ZeroReducedSystem const& other) const {
    if (nil_exponent_ != other.nil_exponent_ || extra_.size() != other.extra_.size()) {
      return false;
    }
    auto lhs = extra_;
    auto rhs = other.extra_;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
  }

  Consequence is_zero_consequence(ZeroReducedSystem const&    sys,
                                  Word const&                 u,
                                  ApplicabilityOptions const& opts) {
    for (auto const& g : sys.generators()) {
      if (auto w = is_applicable(g, u, opts)) {
        return Consequence{true, g, std::move(w)};
      }
    }
    return Consequence{};
  }

  bool in_range(VarietyKind kind, Rational const& xi, Rational const& alpha) {
    if (kind == VarietyKind::chain) {
      return alpha >= xi;
    }
    return xi - Rational(1) < alpha && alpha < xi + Rational(1);
  }

  std::vector<Rational> selected_indices(VarietySpec const& spec) {
    std::vector<Rational> out;
    for (auto const& a : spec.pool) {
      if (in_range(spec.kind, spec.xi, a)) {
        out.push_back(a);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  MissingFamilyMember::MissingFamilyMember(Rational const& index)
      : Error("the word family has no member with index " + index.to_string()),
        index_(index) {}

  Word prefixed_generator(IndexedWord const& z, std::size_t n) {
    if (n == 0) {
      throw std::invalid_argument("variety parameter n must be positive");
    }
    if (n == 1) {
      return z.word();
    }
    return power(z.first_letter(), n - 1) + z.word();
  }

  std::string variety_label(VarietySpec const& spec) {
    return std::string(spec.kind == VarietyKind::chain ? "C" : "A") + "^"
           + std::to_string(spec.n) + "_" + spec.xi.to_string();
  }

  ZeroReducedSystem build_variety(VarietySpec const& spec, std::span<const IndexedWord> family) {
    if (spec.n == 0) {
      throw std::invalid_argument("variety parameter n must be positive");
    }
    std::vector<Word> extra;
    for (auto const& alpha : selected_indices(spec)) {
      auto const* z = find_member(family, alpha);
      if (z == nullptr) {
        throw MissingFamilyMember(alpha);
      }
      extra.push_back(prefixed_generator(*z, spec.n));
    }
    return ZeroReducedSystem(spec.n + 1, std::move(extra), variety_label(spec));
  }

  InclusionReport includes(ZeroReducedSystem const&    sub,
                           ZeroReducedSystem const&    sup,
                           ApplicabilityOptions const& opts) {
    InclusionReport report;
    report.included = true;
    for (auto const& g : sup.generators()) {
      auto c = is_zero_consequence(sub, g, opts);
      if (!c && report.included) {
        report.included = false;
        report.witness  = g;
      }
      report.trace.push_back(GeneratorTrace{g, std::move(c)});
    }
    return report;
  }

  std::string to_string(Order o) {
    switch (o) {
      case Order::equal:
        return "equal";
      case Order::a_below:
        return "a-strictly-below";
      case Order::b_below:
        return "b-strictly-below";
      case Order::incomparable:
        return "incomparable";
    }
    return "?";
  }

  Comparison compare(ZeroReducedSystem const&    a,
                     ZeroReducedSystem const&    b,
                     ApplicabilityOptions const& opts) {
    auto const a_in_b = includes(a, b, opts);
    auto const b_in_a = includes(b, a, opts);
    Comparison out;
    out.a_only = b_in_a.witness;
    out.b_only = a_in_b.witness;
    if (a_in_b.included && b_in_a.included) {
      out.order = Order::equal;
    } else if (a_in_b.included) {
      out.order = Order::a_below;
    } else if (b_in_a.included) {
      out.order = Order::b_below;
    } else {
      out.order = Order::incomparable;
    }
    return out;
  }

  ZeroReducedSystem meet(ZeroReducedSystem const& a, ZeroReducedSystem const& b) {
    auto extra = a.extra_generators();
    extra.insert(extra.end(), b.extra_generators().begin(), b.extra_generators().end());
    std::string label;
    if (!a.label().empty() && !b.label().empty()) {
      label = "(" + a.label() + " meet " + b.label() + ")";
    }
    // x^m = 0 implies x^m' = 0 for m' >= m, so the larger power word is dropped.
    return ZeroReducedSystem(
        std::min(a.nil_exponent(), b.nil_exponent()), std::move(extra), std::move(label));
  }

  bool join_satisfies(ZeroReducedSystem const&    a,
                      ZeroReducedSystem const&    b,
                      Word const&                 u,
                      ApplicabilityOptions const& opts) {
    return is_zero_consequence(a, u, opts).holds && is_zero_consequence(b, u, opts).holds;
  }

  std::vector<Word> free_object_enumerate(ZeroReducedSystem const& sys,
                                          std::size_t              k,
                                          std::size_t              max_length) {
    if (k == 0 || max_length == 0) {
      throw std::invalid_argument("free object needs k >= 1 and max_length >= 1");
    }
    std::vector<Word> out;
    for_each_word(k, max_length, [&](Word const& w) {
      if (!is_zero_consequence(sys, w)) {
        out.push_back(w);
      }
      return true;
    });
    return out;
  }

}  // namespace epichain
