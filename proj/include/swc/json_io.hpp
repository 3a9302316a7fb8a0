// JSON forms of words, moves, complexes, specs, scripts and reports.
//
//   word     {"system": "A2", "letters": [1, 2, 1]}
//   moves    [{"op": "hecke_nil" | "double" | "braid", "pos": 1,
//              "pair": [i, j]  (braid only)}, ...]
//   complex  {"vertices": ["p1", ...], "facets": [["p1", "p2"], ...]}
//            "facets": [[]] is EMPTY, "facets": [] is VOID
//   spec     {"system": "A2", "word": [...], "rho_word": [...]}
//   script   {"start": spec, "steps": moves}
//
// Objects are written with sorted keys and arrays in canonical order, so
// equal values serialize to identical bytes.

#ifndef SWC_JSON_IO_HPP_
#define SWC_JSON_IO_HPP_

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "swc/coxeter.hpp"
#include "swc/simplicial.hpp"
#include "swc/subword.hpp"
#include "swc/transforms.hpp"
#include "swc/words.hpp"

namespace swc::json_io {

  using json = nlohmann::json;

  // Parse errors throw InputError.

  json to_json(CoxeterSystem const& sys, Word const& w);
  std::pair<CoxeterSystem, Word> word_from_json(json const& j);

  json to_json(Move const& m);
  json to_json(std::vector<Move> const& moves);
  Move              move_from_json(json const& j);
  std::vector<Move> moves_from_json(json const& j);

  json              to_json(SimplicialComplex const& X);
  SimplicialComplex complex_from_json(json const& j);

  json to_json(FVector const& f);

  // rho is written as its lex-first reduced word.
  json to_json(CoxeterSystem const& sys, SubwordSpec const& spec);

  struct ParsedSpec {
    CoxeterSystem sys;
    SubwordSpec   spec;
  };
  // rho_word may be any word, reduced or not; it is evaluated in the group.
  ParsedSpec spec_from_json(json const& j);

  json to_json(CoxeterSystem const& sys, TransformScript const& script);

  struct ParsedScript {
    CoxeterSystem   sys;
    TransformScript script;
  };
  ParsedScript script_from_json(json const& j);

  json to_json(ComplexCheck const& c);
  json to_json(NilCaseReport const& r);
  json to_json(NilSweepSummary const& s);
  json to_json(PipelineResult const& r);
  json to_json(PolytopeCounts const& c);
  json to_json(DualStatementReport const& r);

  // Canonical serialization, the one used for hashing and for files.
  std::string canonical_dump(json const& j);

  json parse_text(std::string const& text);
  json read_file(std::string const& path);

}  // namespace swc::json_io

#endif  // SWC_JSON_IO_HPP_
