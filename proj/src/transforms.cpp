#include "swc/transforms.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "swc/errors.hpp"

namespace swc {

  namespace {
    // Positions of Q into positions of Q' when p is doubled; position p
    // itself goes to `at_p`.
    Relabelling doubling_relabelling(std::size_t length,
                                     std::size_t p,
                                     Label const& at_p) {
      Relabelling map;
      for (std::size_t i = 1; i <= length; ++i) {
        if (i == p) {
          map.emplace(position_label(i), at_p);
        } else {
          map.emplace(position_label(i), position_label(i < p ? i : i + 1));
        }
      }
      return map;
    }

    Relabelling identity_on(SimplicialComplex const& X) {
      Relabelling out;
      for (auto const& v : X.vertices()) {
        out.emplace(v, v);
      }
      return out;
    }
  }  // namespace

  SimplicialComplex nil_double_transform(SimplicialComplex const& delta,
                                         std::size_t              length,
                                         std::size_t              p) {
    if (p < 1 || p > length) {
      throw InputError("nil_double_transform: position " + std::to_string(p)
                       + " out of range 1.." + std::to_string(length));
    }
    Label const q0 = position_label(p);
    Label const q1 = position_label(p);
    Label const q2 = position_label(p + 1);
    auto const  shift = doubling_relabelling(length, p, q0);

    std::vector<Face> facets;
    for (auto const& f : delta.facets()) {
      Face g;
      bool has_q0 = false;
      for (auto const& v : f) {
        auto const it = shift.find(v);
        if (it == shift.end()) {
          throw InputError("nil_double_transform: vertex " + v
                           + " is not a position label of the word");
        }
        if (v == q0) {
          has_q0 = true;
        } else {
          g.push_back(it->second);
        }
      }
      if (has_q0) {
        g.push_back(q1);
        g.push_back(q2);
        facets.push_back(std::move(g));
      } else {
        Face h = g;
        g.push_back(q1);
        h.push_back(q2);
        facets.push_back(std::move(g));
        facets.push_back(std::move(h));
      }
    }
    return SimplicialComplex::from_faces(std::move(facets));
  }

  ComplexCheck compare_complexes(SimplicialComplex const& got,
                                 SimplicialComplex const& want) {
    ComplexCheck c;
    if (got == want) {
      c.passed  = true;
      c.exact   = true;
      c.witness = identity_on(got);
      return c;
    }
    c.witness = are_isomorphic(got, want);
    c.passed  = c.witness.has_value();
    c.detail  = c.passed ? "isomorphic but not equal under the expected labels"
                         : "not isomorphic: got " + to_string(got) + ", want "
                               + to_string(want);
    return c;
  }

  std::string to_string(NilCase c) {
    return c == NilCase::suspension ? "Suspension" : "InverseEdgeSubdivision";
  }

  bool NilCaseReport::passed() const {
    bool const structure
        = case_structure.passed
          && (nil_case == NilCase::suspension || contraction.passed);
    return matches_direct.passed && structure && link_q1.passed
           && link_q2.passed;
  }

  NilCaseReport verify_nil_theorem(CoxeterSystem const& sys,
                                   Word const&          q,
                                   GroupElement const&  rho,
                                   std::size_t          p) {
    sys.check_word(q);
    if (p < 1 || p > q.size()) {
      throw InputError("verify_nil_theorem: position " + std::to_string(p)
                       + " out of range 1.." + std::to_string(q.size()));
    }
    NilCaseReport rep;
    rep.word         = q;
    rep.doubled_word = apply_move(sys, q, Move::double_letter(p));
    rep.rho_word     = sys.reduced_word(rho);
    rep.position     = p;
    rep.q0           = position_label(p);
    rep.q1           = position_label(p);
    rep.q2           = position_label(p + 1);

    rep.original     = subword_complex(sys, SubwordSpec(q, rho));
    rep.q0_is_vertex = rep.original.has_vertex(rep.q0);
    rep.nil_case     = rep.q0_is_vertex ? NilCase::inverse_edge_subdivision
                                        : NilCase::suspension;
    rep.transformed  = nil_double_transform(rep.original, q.size(), p);

    auto const direct = subword_complex(sys, SubwordSpec(rep.doubled_word, rho));
    rep.matches_direct = compare_complexes(rep.transformed, direct);

    // Delta(Q) in Q' labels, the old position p renamed to q0.
    auto const moved = relabel(
        rep.original, doubling_relabelling(q.size(), p, kMergedLabel));
    auto const susp = suspension(moved, rep.q1, rep.q2);
    if (rep.nil_case == NilCase::suspension) {
      rep.case_structure = compare_complexes(rep.transformed, susp);
    } else {
      auto const sub = edge_subdivision(rep.transformed, {rep.q1, rep.q2}, kMergedLabel);
      rep.case_structure = compare_complexes(sub, susp);
      auto const back
          = inverse_edge_subdivision(susp, kMergedLabel, {rep.q1, rep.q2});
      if (back) {
        rep.contraction = compare_complexes(back->complex, rep.transformed);
      } else {
        rep.contraction.detail = "merging " + kMergedLabel + " into {"
                                 + rep.q1 + "," + rep.q2
                                 + "} is not an inverse edge subdivision";
      }
    }

    if (rep.original.is_void()) {
      // No faces at all, so no links; both sides must stay void.
      for (auto* c : {&rep.link_q1, &rep.link_q2}) {
        c->passed = c->exact = rep.transformed.is_void();
        c->detail = "void complex";
      }
    } else {
      auto const as_q2 = relabel(rep.original,
                                 doubling_relabelling(q.size(), p, rep.q2));
      auto const as_q1 = relabel(rep.original,
                                 doubling_relabelling(q.size(), p, rep.q1));
      rep.link_q1 = compare_complexes(link(rep.transformed, {rep.q1}), as_q2);
      rep.link_q2 = compare_complexes(link(rep.transformed, {rep.q2}), as_q1);
    }
    return rep;
  }

  std::vector<Word> all_words(std::size_t rank, std::size_t max_length) {
    std::vector<Word> out{Word{}};
    std::size_t       begin = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::size_t const end = out.size();
      for (std::size_t k = begin; k < end; ++k) {
        for (std::size_t s = 1; s <= rank; ++s) {
          Word w = out[k];
          w.push_back(static_cast<Letter>(s));
          out.push_back(std::move(w));
        }
      }
      begin = end;
    }
    return out;
  }

  NilSweepSummary sweep_nil_theorem(CoxeterSystem const&   sys,
                                    NilSweepOptions const& opts) {
    NilSweepSummary summary;
    summary.descriptor = sys.descriptor();
    summary.max_length = opts.max_length;

    // Count before enumerating anything large.
    double cases = 0;
    double words_of_length = 1;
    for (std::size_t len = 1; len <= opts.max_length; ++len) {
      words_of_length *= static_cast<double>(sys.rank());
      cases += words_of_length * static_cast<double>(len)
               * static_cast<double>(sys.order());
    }
    if (cases > static_cast<double>(opts.case_budget)) {
      throw ResourceError("sweep over " + sys.descriptor() + " up to length "
                          + std::to_string(opts.max_length) + " exceeds "
                          + std::to_string(opts.case_budget) + " cases");
    }

    auto const words    = all_words(sys.rank(), opts.max_length);
    auto const elements = sys.elements();

    std::atomic<std::size_t> next{0};
    // Per word index, so failures can be reported in canonical order.
    std::vector<std::vector<NilCaseReport>> failed(words.size());
    std::atomic<std::size_t> total{0}, good{0}, susp{0}, sub{0};

    auto worker = [&]() {
      for (std::size_t k; (k = next.fetch_add(1)) < words.size();) {
        auto const& q = words[k];
        for (auto const& rho : elements) {
          for (std::size_t p = 1; p <= q.size(); ++p) {
            auto rep = verify_nil_theorem(sys, q, rho, p);
            ++total;
            (rep.nil_case == NilCase::suspension ? susp : sub)++;
            if (rep.passed()) {
              ++good;
            } else if (failed[k].size() < opts.keep_failures) {
              failed[k].push_back(std::move(rep));
            }
          }
        }
      }
    };
    unsigned const jobs = std::max(1u, opts.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back(worker);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    summary.cases             = total;
    summary.passed            = good;
    summary.suspension_cases  = susp;
    summary.subdivision_cases = sub;
    for (auto& v : failed) {
      for (auto& rep : v) {
        if (summary.failures.size() < opts.keep_failures) {
          summary.failures.push_back(std::move(rep));
        }
      }
    }
    return summary;
  }

  TransformScript build_pipeline(CoxeterSystem const&      sys,
                                 Word const&               q,
                                 GroupElement const&       rho,
                                 HeckeReduceOptions const& opts) {
    auto const reduction = hecke_reduce(sys, q, opts);
    auto const inverse   = invert_sequence(sys, reduction);
    return TransformScript{SubwordSpec(inverse.start, rho), inverse.moves};
  }

  Word script_target(CoxeterSystem const& sys, TransformScript const& script) {
    return replay(sys, MoveSequence{script.start.word, script.steps});
  }

  PipelineResult run_pipeline(CoxeterSystem const&   sys,
                              TransformScript const& script,
                              PipelineMode           mode,
                              BraidHook const&       on_braid) {
    if (!script.start.canonical_labels()) {
      throw InputError("run_pipeline: start spec must use labels p1..pm");
    }
    bool const     verify = mode == PipelineMode::verified;
    PipelineResult res;
    res.word          = script.start.word;
    res.start_complex = subword_complex(sys, script.start);
    res.complex       = res.start_complex;
    GroupElement const& rho = script.start.rho;

    for (std::size_t k = 0; k < script.steps.size(); ++k) {
      Move const& step = script.steps[k];
      StepReport  rep;
      rep.step   = step;
      rep.before = f_vector(res.complex);
      switch (step.kind) {
        case Move::Kind::double_letter:
          // validates the position
          res.word    = apply_move(sys, res.word, step);
          res.complex = nil_double_transform(res.complex, res.word.size() - 1, step.pos);
          break;
        case Move::Kind::braid:
          res.word    = apply_move(sys, res.word, step);
          res.complex = subword_complex(sys, SubwordSpec(res.word, rho));
          break;
        case Move::Kind::hecke_nil:
          throw InputError("run_pipeline: step " + std::to_string(k + 1)
                           + " is a nil-move; scripts only grow the word");
      }
      rep.word  = res.word;
      rep.after = f_vector(res.complex);
      if (verify) {
        rep.checked = true;
        rep.check   = compare_complexes(
            res.complex, subword_complex(sys, SubwordSpec(res.word, rho)));
        if (!rep.check.passed && !res.failed_step) {
          res.failed_step = k;
        }
      }
      res.steps.push_back(rep);
      if (step.kind == Move::Kind::braid && on_braid) {
        on_braid(res.steps.back());
      }
    }
    if (verify && script.steps.empty()) {
      res.start_checked = true;
      res.start_check   = compare_complexes(
          res.complex, subword_complex(sys, SubwordSpec(res.word, rho)));
    }
    return res;
  }

  PolytopeCounts dual_polytope_counts(SimplicialComplex const& nerve) {
    auto const     fv = f_vector(nerve);
    PolytopeCounts c;
    c.dimension = nerve.dimension() + 1;
    int const d = c.dimension;
    c.vertices  = fv.f(d - 1);
    c.edges     = d >= 1 ? fv.f(d - 2) : 0;
    c.facets    = d >= 1 ? fv.f(0) : 0;
    return c;
  }

  DualStatementReport dual_statement_check(CoxeterSystem const& sys,
                                           Word const&          q,
                                           GroupElement const&  rho,
                                           std::size_t          p) {
    if (!is_spherical(sys, SubwordSpec(q, rho))) {
      throw InputError("dual_statement_check: Delta([" + word_to_string(q)
                       + "]; rho) is not spherical, so there is no dual polytope");
    }
    DualStatementReport rep;
    rep.nil = verify_nil_theorem(sys, q, rho, p);
    rep.base    = dual_polytope_counts(rep.nil.original);
    rep.doubled = dual_polytope_counts(rep.nil.transformed);
    rep.prism   = dual_polytope_counts(suspension(rep.nil.original, "a", "b"));
    rep.facet_label = rep.nil.q1;

    PolytopeCounts const formula{rep.base.dimension + 1,
                                 2 * rep.base.vertices,
                                 2 * rep.base.edges + rep.base.vertices,
                                 rep.base.facets + 2};
    bool const prism_ok = formula == rep.prism;
    if (rep.nil.nil_case == NilCase::suspension) {
      rep.dual_case         = "prism";
      rep.counts_consistent = prism_ok && rep.doubled == rep.prism;
    } else {
      rep.dual_case           = "inverse_2_truncation";
      rep.truncated_face      = make_face({rep.nil.q1, rep.nil.q2});
      rep.prism_is_truncation = rep.doubled.facets < rep.prism.facets;
      rep.counts_consistent   = prism_ok
                              && rep.doubled.dimension == rep.prism.dimension
                              && rep.doubled.facets + 1 == rep.prism.facets;
    }
    return rep;
  }

}  // namespace swc
