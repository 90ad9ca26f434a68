// Command-line front end. JSON results go to stdout, one-line summaries to
// stderr. Exit codes: 0 ok/positive, 1 negative verdict, 2 input error,
// 3 budget or generation ceiling reached.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "epichain/antichain.hpp"
#include "epichain/epigroups.hpp"
#include "epichain/io.hpp"
#include "epichain/lattice.hpp"
#include "epichain/varieties.hpp"
#include "epichain/words.hpp"

using namespace epichain;
using io::json;

namespace {

  constexpr char const* kToolVersion = "epichain 0.1.0";

  enum Exit : int { kOk = 0, kNegative = 1, kInputError = 2, kCeiling = 3 };

  struct Outcome {
    int         code = kOk;
    json        body;
    std::string text;  // emitted instead of the JSON body when non-empty
  };

  std::string fnv1a64(std::string const& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  // Records every file read and written for the run manifest.
  struct Run {
    std::vector<std::string> argv;
    std::string              subcommand;
    json                     inputs  = json::array();
    std::vector<std::string> outputs;
    std::optional<std::uint64_t> budget;

    json load(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw ParseError("cannot open '" + path + "'");
      }
      std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      inputs.push_back({{"path", path}, {"fnv1a64", fnv1a64(bytes)}});
      try {
        return json::parse(bytes);
      } catch (nlohmann::json::exception const& e) {
        throw ParseError("'" + path + "': " + e.what());
      }
    }

    void save(std::string const& path, std::string const& content) {
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        throw ParseError("cannot write '" + path + "'");
      }
      out << content;
      outputs.push_back(path);
    }

    ApplicabilityOptions applicability() const {
      return ApplicabilityOptions{budget};
    }
  };

  // "a..b/d" is every k/d in [a, b]; otherwise a comma list of rationals.
  std::vector<Rational> parse_pool(std::string const& text) {
    static std::regex const range(R"(^\s*(-?\d+)\.\.(-?\d+)(?:/(\d+))?\s*$)");
    std::smatch             m;
    std::vector<Rational>   out;
    if (std::regex_match(text, m, range)) {
      auto const a = std::stoll(m[1]);
      auto const b = std::stoll(m[2]);
      auto const d = m[3].matched ? std::stoll(m[3]) : 1LL;
      if (d == 0 || a > b) {
        throw ParseError("bad pool range '" + text + "'");
      }
      for (auto k = a * d; k <= b * d; ++k) {
        out.emplace_back(k, d);
      }
      return out;
    }
    std::stringstream ss(text);
    std::string       item;
    while (std::getline(ss, item, ',')) {
      out.push_back(Rational::parse(item));
    }
    if (out.empty()) {
      throw ParseError("empty pool");
    }
    return out;
  }

  json words_json(std::span<const Word> words) {
    json out = json::array();
    for (auto const& w : words) {
      out.push_back(w.to_string());
    }
    return out;
  }

  std::vector<std::string> element_names(FiniteLattice const& L, std::vector<std::string> labels) {
    if (labels.empty()) {
      for (std::size_t x = 0; x < L.size(); ++x) {
        labels.push_back(std::to_string(x));
      }
    }
    return labels;
  }

  // ---------------------------------------------------------------- applicable

  struct ApplicableArgs {
    std::string pattern, target;
  };

  Outcome cmd_applicable(Run& run, ApplicableArgs const& a) {
    auto const u   = Word::parse(a.pattern);
    auto const v   = Word::parse(a.target);
    auto const wit = is_applicable(u, v, run.applicability());
    std::cerr << a.pattern << (wit ? " is" : " is not") << " applicable to " << a.target << '\n';
    if (!wit) {
      return {kNegative, json{{"applicable", false}}, {}};
    }
    return {kOk, io::to_json(*wit), {}};
  }

  // ---------------------------------------------------------------- squarefree

  struct SquarefreeArgs {
    std::string word;
    std::size_t alphabet = 3;
    std::size_t max_len  = 8;
  };

  Outcome cmd_squarefree_check(SquarefreeArgs const& a) {
    auto const w  = Word::parse(a.word);
    auto const sq = contains_square(w);
    if (sq) {
      std::cerr << a.word << " contains the square " << sq->root.to_string() << sq->root.to_string() << '\n';
      return {kNegative, json{{"squarefree", false}, {"square", io::to_json(*sq)}}, {}};
    }
    std::cerr << a.word << " is square-free\n";
    return {kOk, json{{"squarefree", true}}, {}};
  }

  Outcome cmd_squarefree_list(SquarefreeArgs const& a) {
    auto const words = enumerate_square_free(a.alphabet, a.max_len);
    std::cerr << words.size() << " square-free words\n";
    return {kOk,
            json{{"alphabet", a.alphabet}, {"max_len", a.max_len}, {"count", words.size()}, {"words", words_json(words)}},
            {}};
  }

  // ---------------------------------------------------------------- family

  struct FamilyArgs {
    std::optional<std::size_t> count;
    std::optional<std::string> pool;
    std::optional<std::string> out;
    std::string                file;
    FamilyOptions              opts;
  };

  Outcome cmd_family_generate(Run& run, FamilyArgs const& a) {
    std::vector<IndexedWord> fam;
    if (a.pool) {
      auto const indices = parse_pool(*a.pool);
      fam                = generate_family_for(indices, a.opts);
    } else if (a.count) {
      fam = generate_family(*a.count, a.opts);
    } else {
      throw ParseError("family generate needs a count or --pool");
    }
    // generate_family verifies before returning; the certificate is re-derived for output.
    auto const cert = std::get<AntichainCertificate>(verify_antichain(fam));
    json       body{{"family", io::family_to_json(fam)}, {"certificate", io::to_json(cert)}};
    if (a.out) {
      run.save(*a.out, body.dump(2) + "\n");
    }
    std::cerr << "generated " << fam.size() << " members, " << cert.checked_pairs << " pairs checked\n";
    return {kOk, body, {}};
  }

  Outcome cmd_family_verify(Run& run, FamilyArgs const& a) {
    auto const fam     = io::family_from_json(run.load(a.file));
    auto const verdict = verify_antichain(fam);
    if (auto const* cert = std::get_if<AntichainCertificate>(&verdict)) {
      std::cerr << "anti-chain certified: " << cert->checked_pairs << " pairs, " << cert->squarefree_checked
                << " square-free checks\n";
      return {kOk, io::to_json(*cert), {}};
    }
    std::cerr << "not an anti-chain\n";
    return {kNegative, io::to_json(std::get<AntichainCounterexample>(verdict), fam), {}};
  }

  // ---------------------------------------------------------------- variety

  struct VarietyArgs {
    std::vector<std::string>   specs;
    std::optional<std::string> pool;
    std::optional<std::string> family;
    std::vector<std::string>   gens;
    std::optional<std::size_t> nil;
    std::size_t                alphabet = 2;
    std::size_t                max_len  = 6;
    FamilyOptions              opts;
  };

  // A spec is a JSON file or "kind:n:xi" with the pool taken from --pool.
  VarietySpec parse_spec(Run& run, std::string const& text, std::optional<std::string> const& pool) {
    if (text.ends_with(".json")) {
      auto j = run.load(text);
      if (!j.contains("pool") && pool) {
        auto p    = parse_pool(*pool);
        j["pool"] = json::array();
        for (auto const& r : p) {
          j["pool"].push_back(r.to_string());
        }
      }
      return io::variety_spec_from_json(j);
    }
    auto const first  = text.find(':');
    auto const second = first == std::string::npos ? first : text.find(':', first + 1);
    if (second == std::string::npos) {
      throw ParseError("variety spec must be kind:n:xi or a .json file, got '" + text + "'");
    }
    if (!pool) {
      throw ParseError("--pool is required with a kind:n:xi spec");
    }
    VarietySpec spec;
    spec.kind = io::parse_kind(text.substr(0, first));
    try {
      spec.n = std::stoul(text.substr(first + 1, second - first - 1));
    } catch (std::exception const&) {
      throw ParseError("bad n in '" + text + "'");
    }
    if (spec.n == 0) {
      throw ParseError("variety parameter n must be positive");
    }
    spec.xi   = Rational::parse(text.substr(second + 1));
    spec.pool = parse_pool(*pool);
    return spec;
  }

  // The family file if given, else members generated for exactly the pooled indices.
  std::vector<IndexedWord> family_for(Run& run, VarietyArgs const& a, std::span<const VarietySpec> specs) {
    if (a.family) {
      return io::family_from_json(run.load(*a.family));
    }
    std::vector<Rational> indices;
    for (auto const& s : specs) {
      for (auto const& r : s.pool) {
        if (std::find(indices.begin(), indices.end(), r) == indices.end()) {
          indices.push_back(r);
        }
      }
    }
    return generate_family_for(indices, a.opts);
  }

  Outcome cmd_variety_build(Run& run, VarietyArgs const& a) {
    std::vector<VarietySpec> specs{parse_spec(run, a.specs.at(0), a.pool)};
    auto const               fam = family_for(run, a, specs);
    auto const               sys = build_variety(specs[0], fam);
    std::cerr << sys.label() << ": " << sys.generators().size() << " generators\n";
    return {kOk, json{{"spec", io::to_json(specs[0])}, {"system", io::to_json(sys)}}, {}};
  }

  Outcome cmd_variety_compare(Run& run, VarietyArgs const& a) {
    if (a.specs.size() != 2) {
      throw ParseError("variety compare needs two specs");
    }
    std::vector<VarietySpec> specs{parse_spec(run, a.specs[0], a.pool), parse_spec(run, a.specs[1], a.pool)};
    auto const               fam = family_for(run, a, specs);
    auto const               sa  = build_variety(specs[0], fam);
    auto const               sb  = build_variety(specs[1], fam);
    auto const               cmp = compare(sa, sb, run.applicability());
    std::cerr << sa.label() << " vs " << sb.label() << ": " << to_string(cmp.order) << '\n';
    return {kOk, io::to_json(cmp, sa, sb), {}};
  }

  Outcome cmd_variety_free_object(Run& run, VarietyArgs const& a) {
    std::optional<ZeroReducedSystem> sys;
    if (!a.specs.empty()) {
      std::vector<VarietySpec> specs{parse_spec(run, a.specs[0], a.pool)};
      sys.emplace(build_variety(specs[0], family_for(run, a, specs)));
    } else {
      std::vector<Word> gens;
      for (auto const& g : a.gens) {
        gens.push_back(Word::parse(g));
      }
      // Without --nil, x^m = 0 is placed beyond the enumeration length so it never fires.
      sys.emplace(a.nil.value_or(a.max_len + 1), std::move(gens));
    }
    auto const words = free_object_enumerate(*sys, a.alphabet, a.max_len);
    std::cerr << words.size() << " nonzero words up to length " << a.max_len << '\n';
    return {kOk,
            json{{"system", io::to_json(*sys)},
                 {"alphabet", a.alphabet},
                 {"max_len", a.max_len},
                 {"count", words.size()},
                 {"words", words_json(words)}},
            {}};
  }

  // ---------------------------------------------------------------- lattice

  struct LatticeArgs {
    std::string                file;
    std::optional<std::size_t> eq;
    std::optional<std::string> out;
  };

  io::LabeledLattice load_lattice(Run& run, LatticeArgs const& a) {
    if (a.eq) {
      auto                     eq = equivalence_lattice(*a.eq);
      std::vector<std::string> labels;
      for (auto const& p : eq.partitions) {
        labels.push_back(p.to_string());
      }
      return io::LabeledLattice{std::move(eq.lattice), std::move(labels)};
    }
    if (a.file.empty()) {
      throw ParseError("give a lattice file or --eq s");
    }
    return io::lattice_from_json(run.load(a.file));
  }

  json triple_json(std::optional<Triple> const& t, std::span<const std::string> names) {
    if (!t) {
      return nullptr;
    }
    return json::array({names[t->first], names[t->second], names[t->third]});
  }

  Outcome cmd_lattice_analyze(Run& run, LatticeArgs const& a) {
    auto const ll    = load_lattice(run, a);
    auto const names = element_names(ll.lattice, ll.labels);
    json       elements = json::array();
    json       lower    = json::array();
    json       upper    = json::array();
    for (std::size_t x = 0; x < ll.lattice.size(); ++x) {
      auto const r = analyze_element(ll.lattice, x);
      elements.push_back(io::to_json(r, names));
      if (r.lower.holds) {
        lower.push_back(names[x]);
      }
      if (r.upper.holds) {
        upper.push_back(names[x]);
      }
    }
    std::cerr << "lower-modular: " << lower.dump() << ", upper-modular: " << upper.dump() << '\n';
    return {kOk,
            json{{"size", ll.lattice.size()},
                 {"lower_modular", lower},
                 {"upper_modular", upper},
                 {"elements", elements}},
            {}};
  }

  Outcome cmd_lattice_eqlattice(Run& run, LatticeArgs const& a) {
    auto const ll = load_lattice(run, a);
    std::cerr << "Eq(" << *a.eq << ") has " << ll.lattice.size() << " elements\n";
    return {kOk, io::lattice_to_json(ll.lattice, ll.labels), {}};
  }

  Outcome cmd_lattice_check_lemmas(Run& run, LatticeArgs const& a) {
    auto const ll    = load_lattice(run, a);
    auto const names = element_names(ll.lattice, ll.labels);
    auto const chain = chain_separation_check(ll.lattice);
    auto const anti  = antichain_separation_check(ll.lattice);
    bool       ok    = chain.holds && anti.holds;
    json       body{
        {"chain_separation", {{"holds", chain.holds}, {"violation", triple_json(chain.violation, names)}}},
        {"antichain_separation", {{"holds", anti.holds}, {"violation", triple_json(anti.violation, names)}}},
        {"mutation_witness", triple_json(separation_mutation_witness(ll.lattice), names)}};
    if (a.eq) {
      auto const vv = verify_vv_proposition(*a.eq);
      ok            = ok && vv.holds;
      body["vv_proposition"]
          = {{"s", *a.eq},
             {"holds", vv.holds},
             {"partitions_checked", vv.partitions_checked},
             {"violation", vv.violation ? json(vv.violation->to_string()) : json(nullptr)}};
    }
    body["all_pass"] = ok;
    std::cerr << (ok ? "all checks pass\n" : "a check failed\n");
    return {ok ? kOk : kNegative, body, {}};
  }

  Outcome cmd_lattice_dot(Run& run, LatticeArgs const& a) {
    auto const ll  = load_lattice(run, a);
    auto const dot = hasse_dot(ll.lattice, ll.labels);
    if (a.out) {
      run.save(*a.out, dot);
      return {kOk, json{{"dot", *a.out}}, {}};
    }
    return {kOk, json{{"dot", dot}}, dot};
  }

  // ---------------------------------------------------------------- epigroup

  struct EpigroupArgs {
    std::string                file;
    std::optional<std::size_t> n;
    std::optional<std::string> unary;
    std::size_t                max_order = 3;
  };

  json reports_json(std::vector<IdentityCheckReport> const& reports) {
    json out = json::array();
    for (auto const& r : reports) {
      out.push_back(io::to_json(r));
    }
    return out;
  }

  std::vector<FiniteSemigroup::Element> parse_unary(std::string const& text) {
    std::vector<FiniteSemigroup::Element> out;
    std::stringstream                     ss(text);
    std::string                           item;
    while (std::getline(ss, item, ',')) {
      try {
        out.push_back(std::stoul(item));
      } catch (std::exception const&) {
        throw ParseError("bad unary table entry '" + item + "'");
      }
    }
    return out;
  }

  Outcome cmd_epigroup_analyze(Run& run, EpigroupArgs const& a) {
    auto const S = io::semigroup_from_json(run.load(a.file));
    auto const e = analyze(S);
    json       body{{"semigroup", io::to_json(S)}, {"structure", io::to_json(e)}};
    json       levels = json::array();
    auto const top    = std::max(e.index, a.n.value_or(0));
    for (std::size_t n = 1; n <= top; ++n) {
      auto const reports = check_E_n(S, n);
      levels.push_back({{"n", n}, {"holds", all_hold(reports)}, {"identities", reports_json(reports)}});
    }
    body["E_n"] = levels;
    int code    = kOk;
    if (a.n) {
      auto const reports = a.unary ? check_E_n(S, parse_unary(*a.unary), *a.n) : check_E_n(S, *a.n);
      bool const holds   = all_hold(reports);
      body["requested"]  = {{"n", *a.n},
                            {"unary", a.unary ? "supplied" : "pseudo-inverse"},
                            {"holds", holds},
                            {"identities", reports_json(reports)}};
      code               = holds ? kOk : kNegative;
    }
    std::cerr << "order " << S.order() << ", index " << e.index << '\n';
    return {code, body, {}};
  }

  Outcome cmd_epigroup_scan(EpigroupArgs const& a) {
    json        per_order = json::array();
    std::size_t failures  = 0;
    for (std::size_t m = 1; m <= a.max_order; ++m) {
      std::size_t count = 0;
      std::vector<std::size_t> by_index(m + 1, 0);
      for_each_semigroup(m, [&](FiniteSemigroup const& S) {
        ++count;
        auto const e = analyze(S);
        ++by_index[e.index];
        bool ok = all_hold(check_E_n(S, e.index));
        for (std::size_t x = 0; x < m; ++x) {
          auto const u = e.unit_of[x], inv = e.pseudo_inverse[x], xe = S.mul(x, u);
          ok = ok && S.mul(u, u) == u && xe == S.mul(u, x) && S.mul(inv, xe) == u && S.mul(xe, inv) == u
               && S.mul(inv, u) == inv;
        }
        if (e.index >= 2) {
          ok = ok && !check_E_n(S, e.index - 1)[3].holds;
        }
        failures += !ok;
      });
      json idx = json::object();
      for (std::size_t i = 1; i <= m; ++i) {
        idx[std::to_string(i)] = by_index[i];
      }
      per_order.push_back({{"order", m}, {"semigroups", count}, {"by_index", idx}});
    }
    std::cerr << (failures == 0 ? "all invariants hold\n" : "invariant failures found\n");
    return {failures == 0 ? kOk : kNegative, json{{"orders", per_order}, {"failures", failures}}, {}};
  }

  // ---------------------------------------------------------------- errors

  Outcome error_outcome(int code, std::string const& kind, std::string const& message, json extra = {}) {
    std::cerr << "error: " << message << '\n';
    json body{{"error", kind}, {"message", message}};
    if (extra.is_object()) {
      body.update(extra);
    }
    return {code, body, {}};
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word applicability, anti-chain families, 0-reduced varieties, lattices and epigroups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);

  Run                        run;
  std::optional<std::string> json_out;
  std::uint64_t              budget = 0;
  bool                       seed_free = false;
  app.add_option("--json-out", json_out, "Also write the JSON result here, plus <path>.manifest.json");
  app.add_flag("--seed-free", seed_free, "Accepted for scripts; every command is deterministic");
  app.add_option("--budget", budget, "Node budget for each applicability search (0 = unlimited)");

  auto add_family_opts = [](CLI::App* sub, FamilyOptions& o) {
    sub->add_option("--alphabet", o.alphabet_size, "Alphabet size (>= 3)");
    sub->add_option("--min-length", o.min_length, "Shortest member length");
    sub->add_option("--max-length", o.max_length, "Longest candidate length searched");
  };

  ApplicableArgs aa;
  auto*          app_applicable = app.add_subcommand("applicable", "Is PATTERN applicable to TARGET?");
  app_applicable->add_option("pattern", aa.pattern)->required();
  app_applicable->add_option("target", aa.target)->required();

  SquarefreeArgs sa;
  auto*          app_sq = app.add_subcommand("squarefree", "Square detection and enumeration");
  app_sq->require_subcommand(1);
  auto* sq_check = app_sq->add_subcommand("check", "Report the leftmost square of WORD");
  sq_check->add_option("word", sa.word)->required();
  auto* sq_list = app_sq->add_subcommand("list", "All square-free words in length-lex order");
  sq_list->add_option("--alphabet", sa.alphabet);
  sq_list->add_option("--max-len", sa.max_len);

  FamilyArgs fa;
  auto*      app_family = app.add_subcommand("family", "Anti-chain word families");
  app_family->require_subcommand(1);
  auto* fam_gen = app_family->add_subcommand("generate", "Greedy family of K members with a certificate");
  fam_gen->add_option("count", fa.count);
  fam_gen->add_option("--pool", fa.pool, "Index the members by these rationals instead");
  fam_gen->add_option("--out", fa.out, "Write family and certificate to this file");
  add_family_opts(fam_gen, fa.opts);
  auto* fam_verify = app_family->add_subcommand("verify", "Certify or refute a family file");
  fam_verify->add_option("file", fa.file)->required();

  VarietyArgs va;
  auto*       app_variety = app.add_subcommand("variety", "0-reduced varieties C and A");
  app_variety->require_subcommand(1);
  auto* var_build   = app_variety->add_subcommand("build", "Generators of one variety");
  auto* var_compare = app_variety->add_subcommand("compare", "Inclusion order of two varieties");
  auto* var_free    = app_variety->add_subcommand("free-object", "Nonzero words of the relatively free object");
  for (auto* sub : {var_build, var_compare, var_free}) {
    sub->add_option("--pool", va.pool, "a..b/d or a comma list of rationals");
    sub->add_option("--family", va.family, "Family file covering the pool");
  }
  add_family_opts(var_build, va.opts);
  add_family_opts(var_compare, va.opts);
  var_build->add_option("spec", va.specs, "kind:n:xi or spec.json")->required()->expected(1);
  var_compare->add_option("specs", va.specs, "two specs")->required()->expected(2);
  var_free->add_option("spec", va.specs, "kind:n:xi or spec.json")->expected(0, 1);
  var_free->add_option("--gens", va.gens, "Extra generators (repeatable)");
  var_free->add_option("--nil", va.nil, "Nil exponent m of x^m = 0");
  var_free->add_option("--alphabet", va.alphabet);
  var_free->add_option("--max-len", va.max_len);

  LatticeArgs la;
  auto*       app_lattice = app.add_subcommand("lattice", "Finite lattices");
  app_lattice->require_subcommand(1);
  auto* lat_analyze = app_lattice->add_subcommand("analyze", "Lower- and upper-modular elements");
  auto* lat_eq      = app_lattice->add_subcommand("eqlattice", "Emit Eq(s) as lattice JSON");
  auto* lat_lemmas  = app_lattice->add_subcommand("check-lemmas", "Separation checks and, with --eq, the partition check");
  auto* lat_dot     = app_lattice->add_subcommand("dot", "Hasse diagram in DOT");
  for (auto* sub : {lat_analyze, lat_lemmas, lat_dot}) {
    sub->add_option("file", la.file, "Lattice JSON");
    sub->add_option("--eq", la.eq, "Use Eq(s) instead of a file");
  }
  lat_eq->add_option("s", la.eq)->required();
  lat_dot->add_option("--out", la.out, "Write DOT to this file");

  EpigroupArgs ea;
  auto*        app_epi = app.add_subcommand("epigroup", "Finite epigroups");
  app_epi->require_subcommand(1);
  auto* epi_analyze = app_epi->add_subcommand("analyze", "Pseudo-inverse, index and E_n reports");
  epi_analyze->add_option("file", ea.file)->required();
  epi_analyze->add_option("--n", ea.n, "Check E_n for this n and set the exit code from it");
  epi_analyze->add_option("--pseudo-inverse", ea.unary, "Check E_n against this unary table, e.g. 0,2,1");
  auto* epi_scan = app_epi->add_subcommand("scan", "Invariant suite over all semigroups of small order");
  epi_scan->add_option("--max-order", ea.max_order);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  for (int i = 1; i < argc; ++i) {
    run.argv.emplace_back(argv[i]);
  }
  if (budget > 0) {
    run.budget = budget;
  }

  Outcome result;
  try {
    if (app_applicable->parsed()) {
      run.subcommand = "applicable";
      result         = cmd_applicable(run, aa);
    } else if (sq_check->parsed()) {
      run.subcommand = "squarefree check";
      result         = cmd_squarefree_check(sa);
    } else if (sq_list->parsed()) {
      run.subcommand = "squarefree list";
      result         = cmd_squarefree_list(sa);
    } else if (fam_gen->parsed()) {
      run.subcommand = "family generate";
      result         = cmd_family_generate(run, fa);
    } else if (fam_verify->parsed()) {
      run.subcommand = "family verify";
      result         = cmd_family_verify(run, fa);
    } else if (var_build->parsed()) {
      run.subcommand = "variety build";
      result         = cmd_variety_build(run, va);
    } else if (var_compare->parsed()) {
      run.subcommand = "variety compare";
      result         = cmd_variety_compare(run, va);
    } else if (var_free->parsed()) {
      run.subcommand = "variety free-object";
      result         = cmd_variety_free_object(run, va);
    } else if (lat_analyze->parsed()) {
      run.subcommand = "lattice analyze";
      result         = cmd_lattice_analyze(run, la);
    } else if (lat_eq->parsed()) {
      run.subcommand = "lattice eqlattice";
      result         = cmd_lattice_eqlattice(run, la);
    } else if (lat_lemmas->parsed()) {
      run.subcommand = "lattice check-lemmas";
      result         = cmd_lattice_check_lemmas(run, la);
    } else if (lat_dot->parsed()) {
      run.subcommand = "lattice dot";
      result         = cmd_lattice_dot(run, la);
    } else if (epi_analyze->parsed()) {
      run.subcommand = "epigroup analyze";
      result         = cmd_epigroup_analyze(run, ea);
    } else if (epi_scan->parsed()) {
      run.subcommand = "epigroup scan";
      result         = cmd_epigroup_scan(ea);
    }
  } catch (BudgetExceeded const& e) {
    result = error_outcome(kCeiling, "budget-exceeded", e.what());
  } catch (GenerationExhausted const& e) {
    result = error_outcome(kCeiling, "generation-exhausted", e.what());
  } catch (NotAssociative const& e) {
    result = error_outcome(kInputError, "not-associative", e.what(), json{{"triple", e.triple()}});
  } catch (NotALattice const& e) {
    result = error_outcome(kInputError, "not-a-lattice", e.what());
  } catch (MissingFamilyMember const& e) {
    result = error_outcome(kInputError, "missing-family-member", e.what(), json{{"index", e.index().to_string()}});
  } catch (Error const& e) {
    result = error_outcome(kInputError, "input-error", e.what());
  } catch (std::invalid_argument const& e) {
    result = error_outcome(kInputError, "input-error", e.what());
  } catch (std::out_of_range const& e) {
    result = error_outcome(kInputError, "input-error", e.what());
  }

  if (result.text.empty()) {
    std::cout << result.body.dump(2) << '\n';
  } else {
    std::cout << result.text;
  }

  if (json_out) {
    try {
      run.save(*json_out, result.body.dump(2) + "\n");
      json manifest{{"subcommand", run.subcommand},
                    {"parameters", run.argv},
                    {"inputs", run.inputs},
                    {"tool_version", kToolVersion},
                    {"outputs", run.outputs},
                    {"exit_code", result.code}};
      std::ofstream out(*json_out + ".manifest.json", std::ios::binary);
      out << manifest.dump(2) << '\n';
    } catch (Error const& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kInputError;
    }
  }
  return result.code;
}
