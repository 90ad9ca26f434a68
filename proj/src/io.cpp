#include "epichain/io.hpp"

#include <fstream>

namespace epichain::io {

  namespace {

    json word_or_null(std::optional<Word> const& w) {
      return w ? json(w->to_string()) : json(nullptr);
    }

    json member_json(IndexedWord const& m) {
      return json{{"index", m.index().to_string()}, {"word", m.word().to_string()}};
    }

    template <typename T>
    T field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
      }
      try {
        return j.at(key).get<T>();
      } catch (nlohmann::json::exception const& e) {
        throw ParseError(std::string("bad field '") + key + "': " + e.what());
      }
    }

  }  // namespace

  std::string letter_text(Letter x) {
    if (auto c = display_name(x)) {
      return std::string(1, *c);
    }
    return std::to_string(x.id);
  }

  json to_json(ApplicabilityWitness const& w) {
    json sub = json::object();
    for (auto const& [x, image] : w.substitution) {
      sub[letter_text(x)] = image.to_string();
    }
    return json{{"applicable", true}, {"substitution", sub}, {"start", w.start}, {"end", w.end}};
  }

  json to_json(SquareOccurrence const& s) {
    return json{{"position", s.position}, {"root", s.root.to_string()}};
  }

  json family_to_json(std::span<const IndexedWord> family) {
    json out = json::array();
    for (auto const& m : family) {
      out.push_back(member_json(m));
    }
    return out;
  }

  std::vector<IndexedWord> family_from_json(json const& j) {
    json const& arr = j.is_object() && j.contains("family") ? j.at("family") : j;
    if (!arr.is_array()) {
      throw ParseError("a family must be a JSON array of {index, word}");
    }
    std::vector<IndexedWord> out;
    for (auto const& item : arr) {
      out.emplace_back(Rational::parse(field<std::string>(item, "index")),
                       Word::parse(field<std::string>(item, "word")));
    }
    return out;
  }

  json to_json(AntichainCertificate const& cert) {
    json flags = json::array();
    for (auto const& m : cert.members) {
      auto entry          = member_json(m);
      entry["squarefree"] = true;
      flags.push_back(std::move(entry));
    }
    return json{{"valid", true},
                {"members", cert.members.size()},
                {"checked_pairs", cert.checked_pairs},
                {"squarefree_checked", cert.squarefree_checked},
                {"squarefree", flags}};
  }

  json to_json(AntichainCounterexample const& cex, std::span<const IndexedWord> family) {
    if (auto const* p = std::get_if<ApplicablePair>(&cex)) {
      return json{{"valid", false},
                  {"kind", "applicable"},
                  {"pattern", member_json(family[p->pattern])},
                  {"target", member_json(family[p->target])},
                  {"witness", to_json(p->witness)}};
    }
    auto const& s = std::get<SquareMember>(cex);
    return json{{"valid", false},
                {"kind", "square"},
                {"member", member_json(family[s.member])},
                {"square", to_json(s.square)}};
  }

  VarietyKind parse_kind(std::string const& text) {
    if (text == "C" || text == "c") {
      return VarietyKind::chain;
    }
    if (text == "A" || text == "a") {
      return VarietyKind::antichain;
    }
    throw ParseError("variety kind must be C or A, got '" + text + "'");
  }

  json to_json(VarietySpec const& spec) {
    json pool = json::array();
    for (auto const& a : spec.pool) {
      pool.push_back(a.to_string());
    }
    return json{{"kind", spec.kind == VarietyKind::chain ? "C" : "A"},
                {"n", spec.n},
                {"xi", spec.xi.to_string()},
                {"pool", pool}};
  }

  VarietySpec variety_spec_from_json(json const& j) {
    VarietySpec spec;
    spec.kind = parse_kind(field<std::string>(j, "kind"));
    spec.n    = field<std::size_t>(j, "n");
    if (spec.n == 0) {
      throw ParseError("variety parameter n must be positive");
    }
    spec.xi = Rational::parse(field<std::string>(j, "xi"));
    for (auto const& a : field<std::vector<std::string>>(j, "pool")) {
      spec.pool.push_back(Rational::parse(a));
    }
    return spec;
  }

  json to_json(ZeroReducedSystem const& sys) {
    json gens = json::array();
    for (auto const& g : sys.generators()) {
      gens.push_back(g.to_string());
    }
    return json{{"label", sys.label()}, {"nil_exponent", sys.nil_exponent()}, {"generators", gens}};
  }

  json to_json(InclusionReport const& report) {
    json trace = json::array();
    for (auto const& t : report.trace) {
      trace.push_back(json{{"generator", t.generator.to_string()},
                           {"consequence", t.consequence.holds},
                           {"via", word_or_null(t.consequence.generator)}});
    }
    return json{
        {"included", report.included}, {"witness", word_or_null(report.witness)}, {"trace", trace}};
  }

  json to_json(Comparison const& cmp, ZeroReducedSystem const& a, ZeroReducedSystem const& b) {
    return json{{"verdict", to_string(cmp.order)},
                {"a", a.label()},
                {"b", b.label()},
                {"witnesses", {{"a_only", word_or_null(cmp.a_only)}, {"b_only", word_or_null(cmp.b_only)}}}};
  }

  LabeledLattice lattice_from_json(json const& j) {
    auto const size  = field<std::size_t>(j, "size");
    auto const pairs = field<std::vector<std::pair<std::size_t, std::size_t>>>(j, "leq");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = field<std::vector<std::string>>(j, "labels");
      if (labels.size() != size) {
        throw ParseError("lattice labels must have one entry per element");
      }
    }
    return LabeledLattice{FiniteLattice::from_relation(size, pairs), std::move(labels)};
  }

  json lattice_to_json(FiniteLattice const& L, std::span<const std::string> labels) {
    json leq = json::array();
    for (auto [x, y] : L.covers()) {
      leq.push_back(json::array({x, y}));
    }
    json out{{"size", L.size()}, {"leq", leq}};
    if (!labels.empty()) {
      out["labels"] = std::vector<std::string>(labels.begin(), labels.end());
    }
    return out;
  }

  json to_json(ModularityReport const& r, std::span<const std::string> labels) {
    auto name  = [&](std::size_t x) { return x < labels.size() ? labels[x] : std::to_string(x); };
    auto check = [&](ModularityCheck const& c) {
      json out{{"holds", c.holds}};
      if (c.counterexample) {
        out["counterexample"] = {{"y", name(c.counterexample->first)},
                                 {"z", name(c.counterexample->second)}};
      }
      return out;
    };
    return json{{"element", name(r.element)},
                {"lower_modular", check(r.lower)},
                {"upper_modular", check(r.upper)}};
  }

  FiniteSemigroup semigroup_from_json(json const& j) {
    auto const order = field<std::size_t>(j, "order");
    auto const rows  = field<std::vector<std::vector<std::size_t>>>(j, "table");
    if (rows.size() != order) {
      throw ParseError("Cayley table must have 'order' rows");
    }
    try {
      return FiniteSemigroup(rows);
    } catch (std::invalid_argument const& e) {
      throw ParseError(e.what());
    }
  }

  json to_json(FiniteSemigroup const& S) {
    json rows = json::array();
    for (std::size_t x = 0; x < S.order(); ++x) {
      json row = json::array();
      for (std::size_t y = 0; y < S.order(); ++y) {
        row.push_back(S.mul(x, y));
      }
      rows.push_back(row);
    }
    return json{{"order", S.order()}, {"table", rows}};
  }

  json to_json(EpigroupStructure const& e) {
    return json{{"order", e.base.order()},
                {"index", e.index},
                {"unit_of", e.unit_of},
                {"pseudo_inverse", e.pseudo_inverse},
                {"element_index", e.element_index}};
  }

  json to_json(IdentityCheckReport const& r) {
    json out{{"identity", r.identity}, {"holds", r.holds}};
    if (!r.holds) {
      out["counterexample"] = r.counterexample;
    }
    return out;
  }

  json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open '" + path + "'");
    }
    try {
      return json::parse(in);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError("'" + path + "': " + e.what());
    }
  }

}  // namespace epichain::io
