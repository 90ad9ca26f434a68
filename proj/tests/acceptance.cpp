// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "epichain/antichain.hpp"
#include "epichain/epigroups.hpp"
#include "epichain/lattice.hpp"
#include "epichain/varieties.hpp"
#include "epichain/words.hpp"
#include "oracles.hpp"

using namespace epichain;

namespace {

  struct Verdict {
    bool        pass = true;
    std::string detail;
  };

  // Fails the verdict with the first message only.
  void expect(Verdict& v, bool ok, std::string const& message) {
    if (!ok && v.pass) {
      v.pass   = false;
      v.detail = message;
    }
  }

  // Patterns over x, y, z: the ternary words shifted onto those letters.
  Word over_xyz(Word const& w) {
    std::vector<Letter> out;
    for (auto x : w) {
      out.push_back(Letter{x.id + 23});
    }
    return Word(std::move(out));
  }

  bool witness_ok(Word const& u, Word const& v, ApplicabilityWitness const& w) {
    return w.start < w.end && w.end <= v.size()
           && apply_substitution(w.substitution, u) == v.factor(w.start, w.end);
  }

  // No generator of sys is applicable to u, by the brute-force oracle.
  bool oracle_nonzero(ZeroReducedSystem const& sys, Word const& u) {
    for (auto const& g : sys.generators()) {
      if (oracle::applicable(g, u)) {
        return false;
      }
    }
    return true;
  }

  std::vector<Rational> quarter_pool() {
    std::vector<Rational> pool;
    for (std::int64_t k = -8; k <= 8; ++k) {
      pool.emplace_back(k, 4);
    }
    return pool;
  }

  // Smallest n with every pool member among the first n of the verified family.
  std::vector<IndexedWord> family_covering(std::vector<Rational> const& pool) {
    std::size_t need = 0;
    for (auto const& a : pool) {
      std::size_t i = 0;
      while (!(rational_of_nat(i) == a)) {
        ++i;
      }
      need = std::max(need, i + 1);
    }
    return generate_family(need);
  }

  // ------------------------------------------------------------------ 1

  Verdict applicability_oracle() {
    Verdict           v;
    std::vector<Word> patterns;
    for_each_word(3, 4, [&](Word const& w) {
      patterns.push_back(over_xyz(w));
      return true;
    });
    std::size_t pairs = 0, positives = 0;
    for (auto const& u : patterns) {
      for_each_word(3, 7, [&](Word const& t) {
        ++pairs;
        auto fast = is_applicable(u, t);
        auto slow = oracle::applicable(u, t);
        if (fast.has_value() != slow.has_value()) {
          expect(v, false, "disagreement on " + u.to_string() + " -> " + t.to_string());
          return false;
        }
        if (fast) {
          ++positives;
          expect(v, witness_ok(u, t, *fast), "bad witness for " + u.to_string() + " -> " + t.to_string());
        }
        return true;
      });
    }
    expect(v, patterns.size() == 120, "expected 120 patterns");
    if (v.pass) {
      v.detail = std::to_string(patterns.size()) + " patterns x 3279 targets = " + std::to_string(pairs)
                 + " pairs, " + std::to_string(positives) + " applicable, 0 disagreements";
    }
    return v;
  }

  // ------------------------------------------------------------------ 2

  Verdict square_criterion() {
    Verdict     v;
    Word const  xx = Word::parse("xx");
    std::size_t words = 0, squares = 0;
    for_each_word(3, 12, [&](Word const& t) {
      ++words;
      bool const a = contains_square(t).has_value();
      bool const b = is_applicable(xx, t).has_value();
      squares += a;
      if (a != b) {
        expect(v, false, "disagreement on " + t.to_string());
        return false;
      }
      return true;
    });
    if (v.pass) {
      v.detail = std::to_string(words) + " ternary words, " + std::to_string(squares) + " with squares, 0 disagreements";
    }
    return v;
  }

  // ------------------------------------------------------------------ 3

  Verdict binary_census() {
    Verdict                 v;
    std::vector<Word> const expected{Word::parse("a"),  Word::parse("b"),   Word::parse("ab"),
                                     Word::parse("ba"), Word::parse("aba"), Word::parse("bab")};
    auto const              words = enumerate_square_free(2, 10);
    expect(v, words == expected, "enumeration differs from {a, b, ab, ba, aba, bab}");
    expect(v, oracle::square_free_by_filter(2, 10) == expected, "filter oracle differs");
    if (v.pass) {
      v.detail = "6 words, longest 3, filter over 2046 words agrees";
    }
    return v;
  }

  // ------------------------------------------------------------------ 4

  Verdict antichain_certificate() {
    Verdict    v;
    auto const fam     = generate_family(12);
    auto const verdict = verify_antichain(fam);
    auto const cert    = std::get_if<AntichainCertificate>(&verdict);
    expect(v, cert != nullptr, "verify_antichain rejected the family");
    if (!cert) {
      return v;
    }
    expect(v, cert->checked_pairs == 132, "checked_pairs != 132");
    expect(v, cert->squarefree_checked == 12, "squarefree_checked != 12");
    for (std::size_t i = 0; i < fam.size(); ++i) {
      expect(v, !oracle::has_square(fam[i].word()), "oracle finds a square in member " + std::to_string(i));
      for (std::size_t j = 0; j < fam.size(); ++j) {
        if (i != j) {
          expect(v, !oracle::applicable(fam[i].word(), fam[j].word()),
                 "oracle finds member " + std::to_string(i) + " applicable to " + std::to_string(j));
        }
      }
    }
    if (v.pass) {
      v.detail = "12 members of length " + std::to_string(fam.front().word().size())
                 + ", 132 pairs and 12 square-free checks, oracle agrees";
    }
    return v;
  }

  // ------------------------------------------------------------------ 5

  Verdict chain_theorem() {
    Verdict    v;
    auto const pool = quarter_pool();
    auto const fam  = family_covering(pool);
    expect(v, std::holds_alternative<AntichainCertificate>(verify_antichain(fam)), "family not certified");
    std::size_t pairs = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<ZeroReducedSystem> sys;
      for (auto const& xi : pool) {
        sys.push_back(build_variety(VarietySpec{VarietyKind::chain, n, xi, pool}, fam));
      }
      for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
          ++pairs;
          auto const  cmp  = compare(sys[i], sys[j]);
          std::string what = sys[i].label() + " vs " + sys[j].label();
          expect(v, cmp.order == Order::a_below, what + ": " + to_string(cmp.order));
          expect(v, cmp.a_only.has_value() && !cmp.b_only, what + ": witness shape");
          if (!cmp.a_only) {
            continue;
          }
          bool in_range = false;
          for (std::size_t k = i; k < j; ++k) {
            in_range = in_range || *cmp.a_only == prefixed_generator(*find_member(fam, pool[k]), n);
          }
          expect(v, in_range, what + ": witness is not x^(n-1) Z_alpha with alpha in [xi1, xi2)");
          expect(v, oracle_nonzero(sys[j], *cmp.a_only), what + ": oracle finds the witness zero in the larger variety");
        }
      }
    }
    if (v.pass) {
      v.detail = std::to_string(pairs) + " pairs (n = 1..3, 17-point pool), all a-strictly-below with witnesses";
    }
    return v;
  }

  // ------------------------------------------------------------------ 6

  Verdict antichain_theorem() {
    Verdict    v;
    auto const pool = quarter_pool();
    auto const fam  = family_covering(pool);
    std::size_t two_sided = 0, one_sided = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<ZeroReducedSystem> sys;
      for (auto const& xi : pool) {
        sys.push_back(build_variety(VarietySpec{VarietyKind::antichain, n, xi, pool}, fam));
      }
      for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = 0; j < pool.size(); ++j) {
          if (i == j) {
            continue;
          }
          // Pool points in (xi1 - 1, xi1 + 1) only, and in (xi2 - 1, xi2 + 1) only.
          std::vector<Word> only_a, only_b;
          for (auto const& alpha : pool) {
            bool const ina = in_range(VarietyKind::antichain, pool[i], alpha);
            bool const inb = in_range(VarietyKind::antichain, pool[j], alpha);
            auto const g   = prefixed_generator(*find_member(fam, alpha), n);
            if (ina && !inb) {
              only_a.push_back(g);
            }
            if (inb && !ina) {
              only_b.push_back(g);
            }
          }
          auto const  cmp  = compare(sys[i], sys[j]);
          std::string what = sys[i].label() + " vs " + sys[j].label();
          auto const  in   = [](std::vector<Word> const& ws, std::optional<Word> const& w) {
            return w && std::find(ws.begin(), ws.end(), *w) != ws.end();
          };
          if (!only_a.empty() && !only_b.empty()) {
            ++two_sided;
            expect(v, cmp.order == Order::incomparable, what + ": " + to_string(cmp.order));
            expect(v, in(only_a, cmp.a_only) && in(only_b, cmp.b_only), what + ": witnesses outside the differences");
            if (cmp.a_only && cmp.b_only) {
              expect(v, oracle_nonzero(sys[j], *cmp.a_only) && oracle_nonzero(sys[i], *cmp.b_only),
                     what + ": oracle rejects a witness");
            }
          } else {
            // The pool truncates one side: the variety with fewer generators is strictly larger.
            ++one_sided;
            auto const expected = only_a.empty() ? Order::b_below : Order::a_below;
            expect(v, !only_a.empty() || !only_b.empty(), what + ": empty symmetric difference");
            expect(v, cmp.order == expected, what + ": one-sided pair is " + to_string(cmp.order));
          }
        }
      }
    }
    if (v.pass) {
      v.detail = std::to_string(two_sided) + " ordered pairs with pool points on both sides incomparable with two "
                 + "witnesses; " + std::to_string(one_sided) + " pool-truncated pairs strictly comparable as predicted";
    }
    return v;
  }

  // ------------------------------------------------------------------ 7

  Verdict vv_proposition() {
    Verdict v;
    for (std::size_t s = 1; s <= 5; ++s) {
      auto const r = verify_vv_proposition(s);
      expect(v, r.holds, "proposition fails for s = " + std::to_string(s));
      expect(v, r.partitions_checked == oracle::bell(s), "partition count for s = " + std::to_string(s));
      // Independent check on relations as bit matrices.
      auto const R = oracle::relation_lattice(s);
      expect(v, R.relations.size() == oracle::bell(s), "relation oracle count for s = " + std::to_string(s));
      for (auto x : R.relations) {
        expect(v, oracle::upper_modular_relation(R, x) == (oracle::nonsingleton_classes(R, x) <= 1),
               "relation oracle disagrees for s = " + std::to_string(s));
      }
    }
    auto const eq    = equivalence_lattice(4);
    auto const one   = Partition::from_blocks(4, {{0, 1}, {2}, {3}});
    auto const pairs = Partition::from_blocks(4, {{0, 1}, {2, 3}});
    expect(v, is_upper_modular(eq.lattice, eq.index_of(one)).holds, "{{1,2},{3},{4}} not upper-modular");
    expect(v, !is_upper_modular(eq.lattice, eq.index_of(pairs)).holds, "{{1,2},{3,4}} upper-modular");
    if (v.pass) {
      v.detail = "s = 1..5 (1+2+5+15+52 partitions), relation oracle agrees; {{1,2},{3},{4}} upper-modular, "
                 "{{1,2},{3,4}} not";
    }
    return v;
  }

  // ------------------------------------------------------------------ 8

  Verdict separation_lemmas() {
    Verdict     v;
    std::size_t corpus = 0;
    auto        check  = [&](FiniteLattice const& L, std::string const& name) {
      ++corpus;
      expect(v, chain_separation_check(L).holds, "chain separation fails on " + name);
      expect(v, antichain_separation_check(L).holds, "anti-chain separation fails on " + name);
    };
    for (std::size_t m = 1; m <= 6; ++m) {
      std::size_t i = 0;
      for_each_lattice(m, [&](FiniteLattice const& L) { check(L, std::to_string(m) + "-element lattice #" + std::to_string(i++)); });
    }
    check(equivalence_lattice(3).lattice, "Eq(3)");
    check(equivalence_lattice(4).lattice, "Eq(4)");
    check(pentagon(), "N5");
    check(diamond(), "M3");
    auto const t = separation_mutation_witness(pentagon());
    // Pentagon ids: 0, a = 1, b = 2, c = 3, 1 = 4.
    expect(v, t && *t == Triple{1, 3, 2}, "mutation witness on N5 is not (a, c, b)");
    if (v.pass) {
      v.detail = std::to_string(corpus) + " lattices (6815 labeled on <= 6 points, Eq(3), Eq(4), N5, M3); "
                 "N5 mutation witness (a, c, b)";
    }
    return v;
  }

  // ------------------------------------------------------------------ 9

  Verdict epigroup_suite() {
    Verdict     v;
    std::size_t count = 0, deep = 0;
    for (std::size_t m = 1; m <= 3; ++m) {
      for_each_semigroup(m, [&](FiniteSemigroup const& S) {
        ++count;
        auto const  e    = analyze(S);
        std::string what = "order " + std::to_string(m) + " table #" + std::to_string(count);
        expect(v, e.index == epigroup_index(S), what + ": index mismatch");
        std::size_t max_element_index = 1;
        for (std::size_t a = 0; a < m; ++a) {
          auto const u = e.unit_of[a], inv = e.pseudo_inverse[a], ae = S.mul(a, u);
          auto const shape = monogenic_shape(S, a);
          // e_a is the idempotent of <a>.
          bool in_cycle = false;
          for (std::size_t k = 1; k <= m + 1; ++k) {
            in_cycle = in_cycle || S.pow(a, k) == u;
          }
          expect(v, S.mul(u, u) == u && in_cycle, what + ": e_a is not the idempotent power");
          expect(v, ae == S.mul(u, a), what + ": a e_a != e_a a");
          expect(v, S.mul(inv, ae) == u && S.mul(ae, inv) == u && S.mul(inv, u) == inv,
                 what + ": pseudo-inverse is not the group inverse of a e_a");
          expect(v, e.element_index[a] == shape.index, what + ": element index differs from <a>");
          max_element_index = std::max(max_element_index, shape.index);
        }
        expect(v, e.index == max_element_index, what + ": index is not the maximum element index");
        expect(v, all_hold(check_E_n(S, e.index)), what + ": E_n fails at n = index");
        if (e.index >= 2) {
          ++deep;
          auto const r = check_E_n(S, e.index - 1);
          expect(v, !r[3].holds, what + ": x^{n+1} x' = x^n holds below the index");
        }
      });
    }
    expect(v, count == 122, "expected 1 + 8 + 113 semigroups");
    if (v.pass) {
      v.detail = std::to_string(count) + " semigroups of order <= 3, " + std::to_string(deep)
                 + " with index >= 2 fail just below it";
    }
    return v;
  }

  struct Criterion {
    int                      id;
    char const*              name;
    double                   limit_seconds;  // 0 when untimed
    std::function<Verdict()> run;
  };

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "applicability oracle equivalence", 300, applicability_oracle},
      {2, "square criterion", 0, square_criterion},
      {3, "two-letter square-free census", 0, binary_census},
      {4, "anti-chain certificate", 600, antichain_certificate},
      {5, "chain of C varieties", 0, chain_theorem},
      {6, "anti-chain of A varieties", 0, antichain_theorem},
      {7, "upper-modular partitions", 0, vv_proposition},
      {8, "separation lemmas", 0, separation_lemmas},
      {9, "epigroup suite", 60, epigroup_suite},
  };
  int failures = 0;
  for (auto const& c : criteria) {
    auto const t0      = std::chrono::steady_clock::now();
    Verdict    verdict = c.run();
    double const secs  = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      expect(verdict, false, "took " + std::to_string(secs) + " s");
    }
    failures += !verdict.pass;
    std::printf("[%s] %d %s (%.2f s): %s\n", verdict.pass ? "PASS" : "FAIL", c.id, c.name, secs, verdict.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
