#include <doctest.h>

#include "epichain/epigroups.hpp"

using namespace epichain;

namespace {
  FiniteSemigroup cyclic3() {
    return FiniteSemigroup({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  }
  // {0, n}: every product is 0.
  FiniteSemigroup null2() {
    return FiniteSemigroup({{0, 0}, {0, 0}});
  }
  FiniteSemigroup semilattice2() {
    return FiniteSemigroup({{0, 0}, {0, 1}});
  }
  // {0, n, n^2} with n^3 = 0; ids 0 -> 0, 1 -> n, 2 -> n^2.
  FiniteSemigroup nil3() {
    return FiniteSemigroup({{0, 0, 0}, {0, 2, 0}, {0, 0, 0}});
  }

  bool is_group(FiniteSemigroup const& S, std::size_t& identity) {
    for (std::size_t e = 0; e < S.order(); ++e) {
      bool unit = true;
      for (std::size_t x = 0; x < S.order() && unit; ++x) {
        unit = S.mul(e, x) == x && S.mul(x, e) == x;
      }
      if (!unit) {
        continue;
      }
      for (std::size_t x = 0; x < S.order(); ++x) {
        bool has_inverse = false;
        for (std::size_t y = 0; y < S.order() && !has_inverse; ++y) {
          has_inverse = S.mul(x, y) == e && S.mul(y, x) == e;
        }
        if (!has_inverse) {
          return false;
        }
      }
      identity = e;
      return true;
    }
    return false;
  }
}  // namespace

TEST_CASE("construction validates the table") {
  CHECK_THROWS_AS(FiniteSemigroup({{0, 1}, {1, 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteSemigroup(2, {0, 2, 0, 0}), std::invalid_argument);
  // Left-zero in row 0 but a right-zero row 1 breaks associativity.
  try {
    FiniteSemigroup({{1, 0}, {0, 0}});
    FAIL("expected NotAssociative");
  } catch (NotAssociative const& e) {
    auto [x, y, z] = e.triple();
    FiniteSemigroup::Element const t[2][2] = {{1, 0}, {0, 0}};
    CHECK(t[t[x][y]][z] != t[x][t[y][z]]);
  }
}

TEST_CASE("analyze examples") {
  SUBCASE("cyclic group of order 3") {
    auto e = analyze(cyclic3());
    CHECK(e.index == 1);
    CHECK(e.pseudo_inverse[1] == 2);
    CHECK(e.pseudo_inverse[2] == 1);
    CHECK(e.pseudo_inverse[0] == 0);
    CHECK(e.unit_of == std::vector<std::size_t>{0, 0, 0});
  }
  SUBCASE("null semigroup of order 2") {
    auto e = analyze(null2());
    CHECK(e.unit_of[1] == 0);
    CHECK(e.pseudo_inverse[1] == 0);
    CHECK(e.index == 2);
  }
  SUBCASE("two-element semilattice") {
    auto e = analyze(semilattice2());
    CHECK(e.pseudo_inverse == std::vector<std::size_t>{0, 1});
    CHECK(e.index == 1);
  }
}

TEST_CASE("epigroup_index") {
  CHECK(epigroup_index(cyclic3()) == 1);
  CHECK(epigroup_index(null2()) == 2);
  CHECK(epigroup_index(nil3()) == 3);
  auto const shape = monogenic_shape(nil3(), 1);
  CHECK(shape.index == 3);
  CHECK(shape.period == 1);
}

TEST_CASE("check_E_n") {
  CHECK(all_hold(check_E_n(cyclic3(), 1)));

  auto r1 = check_E_n(null2(), 1);
  REQUIRE(r1.size() == 4);
  CHECK(r1[0].holds);
  CHECK(r1[1].holds);
  CHECK(r1[2].holds);
  CHECK_FALSE(r1[3].holds);
  CHECK(r1[3].identity == "x^2 x'=x^1");
  CHECK(r1[3].counterexample.at("x") == 1);

  CHECK(all_hold(check_E_n(null2(), 2)));

  SUBCASE("caller-supplied unary operation") {
    // The identity map is not the pseudo-inverse of the null semigroup.
    auto r = check_E_n(null2(), {0, 1}, 2);
    CHECK_FALSE(r[2].holds);
    CHECK_THROWS_AS(check_E_n(null2(), {0, 2}, 2), std::invalid_argument);
  }
}

TEST_CASE("enumerate_semigroups") {
  CHECK(enumerate_semigroups(1).size() == 1);
  CHECK(enumerate_semigroups(2).size() == 8);
  // Labeled semigroups of order 3 (exhaustive filter of 3^9 tables).
  CHECK(enumerate_semigroups(3).size() == 113);
  CHECK_THROWS_AS(enumerate_semigroups(4), SizeGuardError);
}

TEST_CASE("structure invariants over every semigroup of order <= 3") {
  std::size_t groups = 0;
  for (std::size_t m = 1; m <= 3; ++m) {
    for_each_semigroup(m, [&](FiniteSemigroup const& S) {
      auto const e = analyze(S);
      CHECK(e.index == epigroup_index(S));
      CHECK(e.index <= S.order());
      for (std::size_t a = 0; a < m; ++a) {
        auto const u   = e.unit_of[a];
        auto const inv = e.pseudo_inverse[a];
        auto const ae  = S.mul(a, u);
        REQUIRE(S.mul(u, u) == u);
        REQUIRE(ae == S.mul(u, a));
        REQUIRE(S.mul(inv, ae) == u);
        REQUIRE(S.mul(ae, inv) == u);
        REQUIRE(S.mul(inv, u) == inv);
        if (S.mul(a, a) == a) {
          REQUIRE(u == a);
          REQUIRE(inv == a);
        }
      }
      for (std::size_t n = e.index; n <= e.index + 2; ++n) {
        CHECK(all_hold(check_E_n(S, n)));
      }
      if (e.index >= 2) {
        auto r = check_E_n(S, e.index - 1);
        CHECK(r[0].holds);
        CHECK(r[1].holds);
        CHECK(r[2].holds);
        REQUIRE_FALSE(r[3].holds);
        auto const x = r[3].counterexample.at("x");
        CHECK(S.mul(S.pow(x, e.index), e.pseudo_inverse[x]) != S.pow(x, e.index - 1));
      }
      std::size_t id = 0;
      if (is_group(S, id)) {
        ++groups;
        for (std::size_t a = 0; a < m; ++a) {
          CHECK(S.mul(a, e.pseudo_inverse[a]) == id);
        }
      }
    });
  }
  CHECK(groups > 0);
}
