#include "epichain/epigroups.hpp"

#include <algorithm>
#include <stdexcept>

namespace epichain {

  using Element = FiniteSemigroup::Element;

  NotAssociative::NotAssociative(std::size_t x, std::size_t y, std::size_t z)
      : Error("table is not associative: (xy)z != x(yz) at x=" + std::to_string(x)
              + ", y=" + std::to_string(y) + ", z=" + std::to_string(z)),
        triple_{x, y, z} {}

  namespace {
    std::optional<std::array<std::size_t, 3>>
    associativity_violation(std::size_t m, std::vector<Element> const& t) {
      for (Element x = 0; x < m; ++x) {
        for (Element y = 0; y < m; ++y) {
          for (Element z = 0; z < m; ++z) {
            if (t[t[x * m + y] * m + z] != t[x * m + t[y * m + z]]) {
              return std::array<std::size_t, 3>{x, y, z};
            }
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  FiniteSemigroup::FiniteSemigroup(std::size_t order, std::vector<Element> table)
      : order_(order), table_(std::move(table)) {
    if (order_ == 0) {
      throw std::invalid_argument("a semigroup needs at least one element");
    }
    if (table_.size() != order_ * order_) {
      throw std::invalid_argument("Cayley table must have order^2 entries");
    }
    for (auto v : table_) {
      if (v >= order_) {
        throw std::invalid_argument("Cayley table entry " + std::to_string(v) + " out of range");
      }
    }
    if (auto bad = associativity_violation(order_, table_)) {
      throw NotAssociative((*bad)[0], (*bad)[1], (*bad)[2]);
    }
  }

  namespace {
    std::vector<Element> flatten(std::vector<std::vector<Element>> const& rows) {
      std::vector<Element> out;
      for (auto const& r : rows) {
        if (r.size() != rows.size()) {
          throw std::invalid_argument("Cayley table must be square");
        }
        out.insert(out.end(), r.begin(), r.end());
      }
      return out;
    }
  }  // namespace

  FiniteSemigroup::FiniteSemigroup(std::vector<std::vector<Element>> const& rows)
      : FiniteSemigroup(rows.size(), flatten(rows)) {}

  Element FiniteSemigroup::pow(Element x, std::size_t k) const {
    if (k == 0) {
      throw std::invalid_argument("semigroup powers start at 1");
    }
    Element r = x;
    for (std::size_t i = 1; i < k; ++i) {
      r = mul(r, x);
    }
    return r;
  }

  MonogenicShape monogenic_shape(FiniteSemigroup const& S, Element a) {
    // first_seen[v] = the exponent at which v first appeared as a power of a
    std::vector<std::size_t> first_seen(S.order(), 0);
    Element                  p = a;
    for (std::size_t k = 1;; ++k) {
      if (first_seen[p] != 0) {
        return MonogenicShape{first_seen[p], k - first_seen[p]};
      }
      first_seen[p] = k;
      p             = S.mul(p, a);
    }
  }

  EpigroupStructure analyze(FiniteSemigroup const& S) {
    std::size_t const m = S.order();
    EpigroupStructure out{S, std::vector<Element>(m), std::vector<Element>(m),
                          std::vector<std::size_t>(m), 1};
    for (Element a = 0; a < m; ++a) {
      auto const shape = monogenic_shape(S, a);
      // The cycle {a^index, ..., a^(index+period-1)} is a cyclic group; its
      // identity is the power whose exponent is a multiple of the period.
      std::size_t k = shape.period;
      while (k < shape.index) {
        k += shape.period;
      }
      Element const e  = S.pow(a, k);
      Element const ae = S.mul(a, e);
      // Least t with (ae)^t = e; the inverse of ae is (ae)^(t-1), read as e
      // when t = 1.
      Element     g = ae;
      std::size_t t = 1;
      while (g != e) {
        g = S.mul(g, ae);
        ++t;
      }
      Element inv = e;
      for (std::size_t i = 1; i < t; ++i) {
        inv = S.mul(inv, ae);
      }
      out.unit_of[a]        = e;
      out.pseudo_inverse[a] = inv;
      out.element_index[a]  = shape.index;
      out.index             = std::max(out.index, shape.index);
    }
    return out;
  }

  std::size_t epigroup_index(FiniteSemigroup const& S) {
    std::size_t n = 1;
    for (Element a = 0; a < S.order(); ++a) {
      n = std::max(n, monogenic_shape(S, a).index);
    }
    return n;
  }

  std::vector<IdentityCheckReport> check_E_n(FiniteSemigroup const&      S,
                                             std::vector<Element> const& unary,
                                             std::size_t                 n) {
    if (n == 0) {
      throw std::invalid_argument("E_n needs n >= 1");
    }
    std::size_t const m = S.order();
    if (unary.size() != m
        || std::any_of(unary.begin(), unary.end(), [m](Element v) { return v >= m; })) {
      throw std::invalid_argument("unary operation must map each element into the carrier");
    }
    std::vector<IdentityCheckReport> reports(4);
    reports[0].identity = "(xy)z=x(yz)";
    reports[1].identity = "x x'=x' x";
    reports[2].identity = "x x'^2=x'";
    reports[3].identity = "x^" + std::to_string(n + 1) + " x'=x^" + std::to_string(n);

    auto fail = [](IdentityCheckReport& r, std::map<std::string, std::size_t> assignment) {
      if (r.holds) {
        r.holds          = false;
        r.counterexample = std::move(assignment);
      }
    };
    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        for (Element z = 0; z < m; ++z) {
          if (S.mul(S.mul(x, y), z) != S.mul(x, S.mul(y, z))) {
            fail(reports[0], {{"x", x}, {"y", y}, {"z", z}});
          }
        }
      }
      Element const xb = unary[x];
      if (S.mul(x, xb) != S.mul(xb, x)) {
        fail(reports[1], {{"x", x}});
      }
      if (S.mul(x, S.mul(xb, xb)) != xb) {
        fail(reports[2], {{"x", x}});
      }
      if (S.mul(S.pow(x, n + 1), xb) != S.pow(x, n)) {
        fail(reports[3], {{"x", x}});
      }
    }
    return reports;
  }

  std::vector<IdentityCheckReport> check_E_n(FiniteSemigroup const& S, std::size_t n) {
    return check_E_n(S, analyze(S).pseudo_inverse, n);
  }

  bool all_hold(std::vector<IdentityCheckReport> const& reports) {
    return std::all_of(reports.begin(), reports.end(), [](auto const& r) { return r.holds; });
  }

  void for_each_semigroup(std::size_t m, std::function<void(FiniteSemigroup const&)> const& visit) {
    if (m == 0) {
      return;
    }
    if (m > kMaxEnumeratedOrder) {
      throw SizeGuardError("semigroup enumeration is limited to order "
                           + std::to_string(kMaxEnumeratedOrder));
    }
    std::vector<Element> table(m * m, 0);
    while (true) {
      if (!associativity_violation(m, table)) {
        visit(FiniteSemigroup(m, table));
      }
      std::size_t i = table.size();
      while (i > 0 && table[i - 1] + 1 == m) {
        table[--i] = 0;
      }
      if (i == 0) {
        return;
      }
      ++table[i - 1];
    }
  }

  std::vector<FiniteSemigroup> enumerate_semigroups(std::size_t m) {
    std::vector<FiniteSemigroup> out;
    for_each_semigroup(m, [&out](FiniteSemigroup const& S) { out.push_back(S); });
    return out;
  }

}  // namespace epichain
