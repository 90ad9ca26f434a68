#pragma once

// JSON forms of the library types. Words are always in their text form.

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "epichain/antichain.hpp"
#include "epichain/epigroups.hpp"
#include "epichain/lattice.hpp"
#include "epichain/varieties.hpp"
#include "epichain/words.hpp"

namespace epichain::io {

  using json = nlohmann::ordered_json;

  std::string letter_text(Letter x);

  json to_json(ApplicabilityWitness const& w);
  json to_json(SquareOccurrence const& s);

  // [{"index": "p/q", "word": "..."}, ...]
  json family_to_json(std::span<const IndexedWord> family);
  // Accepts the array form or an object with a "family" array. Throws ParseError.
  std::vector<IndexedWord> family_from_json(json const& j);

  json to_json(AntichainCertificate const& cert);
  json to_json(AntichainCounterexample const& cex, std::span<const IndexedWord> family);

  // {"kind": "C"|"A", "n": 1, "xi": "p/q", "pool": ["p/q", ...]}
  json          to_json(VarietySpec const& spec);
  VarietySpec   variety_spec_from_json(json const& j);
  VarietyKind   parse_kind(std::string const& text);

  json to_json(ZeroReducedSystem const& sys);
  json to_json(InclusionReport const& report);
  json to_json(Comparison const& cmp, ZeroReducedSystem const& a, ZeroReducedSystem const& b);

  // {"size": m, "leq": [[i, j], ...], "labels": [...]} with leq closed
  // reflexively and transitively on read. Throws ParseError / NotALattice.
  struct LabeledLattice {
    FiniteLattice            lattice;
    std::vector<std::string> labels;
  };
  LabeledLattice lattice_from_json(json const& j);
  json           lattice_to_json(FiniteLattice const& L, std::span<const std::string> labels = {});
  json           to_json(ModularityReport const& r, std::span<const std::string> labels = {});

  // {"order": m, "table": [[...], ...]}; throws ParseError / NotAssociative.
  FiniteSemigroup semigroup_from_json(json const& j);
  json            to_json(FiniteSemigroup const& S);
  json            to_json(EpigroupStructure const& e);
  json            to_json(IdentityCheckReport const& r);

  // Reads a whole file; throws ParseError if it cannot be opened or parsed.
  json read_json_file(std::string const& path);

}  // namespace epichain::io
