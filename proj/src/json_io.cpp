#include "swc/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "swc/errors.hpp"

namespace swc::json_io {

  namespace {
    template <typename T>
    T get(json const& j, char const* key, char const* what) {
      if (!j.is_object() || !j.contains(key)) {
        throw InputError(std::string(what) + ": missing key \"" + key + "\"");
      }
      try {
        return j.at(key).get<T>();
      } catch (json::exception const& e) {
        throw InputError(std::string(what) + ": bad value for \"" + key
                         + "\": " + e.what());
      }
    }

    Word letters(json const& j, char const* key, char const* what) {
      return get<Word>(j, key, what);
    }

    json relabelling_to_json(Relabelling const& r) {
      json out = json::object();
      for (auto const& [from, to] : r) {
        out[from] = to;
      }
      return out;
    }
  }  // namespace

  json to_json(CoxeterSystem const& sys, Word const& w) {
    return {{"system", sys.descriptor()}, {"letters", w}};
  }

  std::pair<CoxeterSystem, Word> word_from_json(json const& j) {
    auto sys = CoxeterSystem::parse(get<std::string>(j, "system", "word"));
    Word w   = letters(j, "letters", "word");
    sys.check_word(w);
    return {std::move(sys), std::move(w)};
  }

  json to_json(Move const& m) {
    json out{{"pos", m.pos}};
    switch (m.kind) {
      case Move::Kind::hecke_nil: out["op"] = "hecke_nil"; break;
      case Move::Kind::double_letter: out["op"] = "double"; break;
      case Move::Kind::braid:
        out["op"]   = "braid";
        out["pair"] = {m.first, m.second};
        break;
    }
    return out;
  }

  json to_json(std::vector<Move> const& moves) {
    json out = json::array();
    for (auto const& m : moves) {
      out.push_back(to_json(m));
    }
    return out;
  }

  Move move_from_json(json const& j) {
    auto const op  = get<std::string>(j, "op", "move");
    auto const pos = get<std::size_t>(j, "pos", "move");
    if (op == "hecke_nil") {
      return Move::hecke_nil(pos);
    }
    if (op == "double") {
      return Move::double_letter(pos);
    }
    if (op == "braid") {
      auto const pair = get<std::vector<Letter>>(j, "pair", "braid move");
      if (pair.size() != 2) {
        throw InputError("braid move: \"pair\" needs two letters");
      }
      return Move::braid(pos, pair[0], pair[1]);
    }
    throw InputError("move: unknown op \"" + op + "\"");
  }

  std::vector<Move> moves_from_json(json const& j) {
    if (!j.is_array()) {
      throw InputError("moves: expected an array");
    }
    std::vector<Move> out;
    for (auto const& m : j) {
      out.push_back(move_from_json(m));
    }
    return out;
  }

  json to_json(SimplicialComplex const& X) {
    json facets = json::array();
    for (auto const& f : X.facets()) {
      facets.push_back(f);
    }
    return {{"vertices", X.vertices()}, {"facets", facets}};
  }

  SimplicialComplex complex_from_json(json const& j) {
    auto const vertices = get<std::vector<Label>>(j, "vertices", "complex");
    auto       facets   = get<std::vector<Face>>(j, "facets", "complex");
    auto       X        = SimplicialComplex::from_faces(std::move(facets));
    auto const listed   = std::set<Label>(vertices.begin(), vertices.end());
    auto const actual   = X.vertices();
    if (listed.size() != vertices.size()
        || listed != std::set<Label>(actual.begin(), actual.end())) {
      throw InputError(
          "complex: \"vertices\" must list each vertex of a facet exactly "
          "once");
    }
    return X;
  }

  json to_json(FVector const& f) {
    return f.counts;
  }

  json to_json(CoxeterSystem const& sys, SubwordSpec const& spec) {
    return {{"system", sys.descriptor()},
            {"word", spec.word},
            {"rho_word", sys.reduced_word(spec.rho)}};
  }

  ParsedSpec spec_from_json(json const& j) {
    auto sys = CoxeterSystem::parse(get<std::string>(j, "system", "spec"));
    Word q   = letters(j, "word", "spec");
    Word r   = letters(j, "rho_word", "spec");
    sys.check_word(q);
    sys.check_word(r);
    auto rho = sys.element_of_word(r);
    return {std::move(sys), SubwordSpec(std::move(q), std::move(rho))};
  }

  json to_json(CoxeterSystem const& sys, TransformScript const& script) {
    return {{"start", to_json(sys, script.start)},
            {"steps", to_json(script.steps)}};
  }

  ParsedScript script_from_json(json const& j) {
    if (!j.is_object() || !j.contains("start")) {
      throw InputError("script: missing key \"start\"");
    }
    auto parsed = spec_from_json(j.at("start"));
    auto steps  = moves_from_json(
        j.contains("steps") ? j.at("steps") : json::array());
    for (auto const& m : steps) {
      if (m.kind == Move::Kind::hecke_nil) {
        throw InputError("script: steps must be \"double\" or \"braid\"");
      }
    }
    return {std::move(parsed.sys),
            TransformScript{std::move(parsed.spec), std::move(steps)}};
  }

  json to_json(ComplexCheck const& c) {
    json out{{"passed", c.passed}, {"exact", c.exact}};
    if (c.witness) {
      out["witness"] = relabelling_to_json(*c.witness);
    }
    if (!c.detail.empty()) {
      out["detail"] = c.detail;
    }
    return out;
  }

  json to_json(NilCaseReport const& r) {
    json checks{{"matches_direct", to_json(r.matches_direct)},
                {"case_structure", to_json(r.case_structure)},
                {"link_q1", to_json(r.link_q1)},
                {"link_q2", to_json(r.link_q2)}};
    if (r.nil_case == NilCase::inverse_edge_subdivision) {
      checks["contraction"] = to_json(r.contraction);
    }
    return {{"word", r.word},
            {"doubled_word", r.doubled_word},
            {"rho_word", r.rho_word},
            {"position", r.position},
            {"case", to_string(r.nil_case)},
            {"labels", {{"q0", r.q0}, {"q1", r.q1}, {"q2", r.q2}}},
            {"q0_is_vertex", r.q0_is_vertex},
            {"original", to_json(r.original)},
            {"transformed", to_json(r.transformed)},
            {"checks", checks},
            {"passed", r.passed()}};
  }

  json to_json(NilSweepSummary const& s) {
    json failures = json::array();
    for (auto const& f : s.failures) {
      failures.push_back(to_json(f));
    }
    return {{"system", s.descriptor},
            {"max_length", s.max_length},
            {"cases", s.cases},
            {"passed", s.passed},
            {"failed", s.cases - s.passed},
            {"suspension_cases", s.suspension_cases},
            {"inverse_edge_subdivision_cases", s.subdivision_cases},
            {"failures", failures}};
  }

  json to_json(PipelineResult const& r) {
    json steps = json::array();
    for (auto const& s : r.steps) {
      json step{{"step", to_json(s.step)},
                {"word", s.word},
                {"f_vector_before", to_json(s.before)},
                {"f_vector_after", to_json(s.after)}};
      if (s.checked) {
        step["check"] = to_json(s.check);
      }
      steps.push_back(std::move(step));
    }
    json out{{"start_complex", to_json(r.start_complex)},
             {"complex", to_json(r.complex)},
             {"word", r.word},
             {"steps", steps},
             {"passed", r.passed()}};
    if (r.start_checked) {
      out["start_check"] = to_json(r.start_check);
    }
    if (r.failed_step) {
      out["failed_step"] = *r.failed_step + 1;
    }
    return out;
  }

  json to_json(PolytopeCounts const& c) {
    return {{"dimension", c.dimension},
            {"vertices", c.vertices},
            {"edges", c.edges},
            {"facets", c.facets}};
  }

  json to_json(DualStatementReport const& r) {
    json out{{"nil", to_json(r.nil)},
             {"dual_case", r.dual_case},
             {"base", to_json(r.base)},
             {"prism", to_json(r.prism)},
             {"doubled", to_json(r.doubled)},
             {"facet_label", r.facet_label},
             {"counts_consistent", r.counts_consistent},
             {"passed", r.passed()}};
    if (!r.truncated_face.empty()) {
      out["truncated_face_dual_edge"] = r.truncated_face;
      out["prism_is_truncation_of_doubled"] = r.prism_is_truncation;
    }
    return out;
  }

  std::string canonical_dump(json const& j) {
    return j.dump(2) + "\n";
  }

  json parse_text(std::string const& text) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      throw InputError(std::string("invalid JSON: ") + e.what());
    }
  }

  json read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
  }

}  // namespace swc::json_io
