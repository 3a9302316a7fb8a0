// How subword complexes change when a letter of the word is doubled, and the
// replay of a whole reduction sequence as complex transformations.
//
// Doubling position p of Q = q_1 ... q_m gives Q' = q_1 ... q_p q_p ... q_m.
// With q0 the position p of Q and q1, q2 the positions p, p+1 of Q', every
// facet F of Delta(Q; rho) gives
//   F + q1 and F + q2           if q0 is not in F,
//   (F - q0) + {q1, q2}         if q0 is in F,
// and these are exactly the facets of Delta(Q'; rho). Consequently Delta(Q')
// is the suspension of Delta(Q) when q0 is not a vertex, and otherwise it
// is the suspension with the vertex q0 merged into the edge {q1, q2}; the
// links of q1 and of q2 are copies of Delta(Q).

#ifndef SWC_TRANSFORMS_HPP_
#define SWC_TRANSFORMS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "swc/coxeter.hpp"
#include "swc/simplicial.hpp"
#include "swc/subword.hpp"
#include "swc/words.hpp"

namespace swc {

  // Label that stands for the original position inside Q' labelling.
  inline Label const kMergedLabel = "q0";

  // delta must be labelled p1..p{length}; the result is labelled by the
  // positions of the doubled word. Throws InputError if p is not in
  // 1..length.
  SimplicialComplex nil_double_transform(SimplicialComplex const& delta,
                                         std::size_t              length,
                                         std::size_t              p);

  // Outcome of comparing two complexes: exact facet equality under the
  // expected labelling, or failing that an isomorphism found by search.
  struct ComplexCheck {
    bool                       passed = false;
    bool                       exact  = false;
    std::optional<Relabelling> witness;
    std::string                detail;
  };

  ComplexCheck compare_complexes(SimplicialComplex const& got,
                                 SimplicialComplex const& want);

  enum class NilCase { suspension, inverse_edge_subdivision };

  std::string to_string(NilCase c);

  struct NilCaseReport {
    Word        word;
    Word        doubled_word;
    Word        rho_word;
    std::size_t position = 0;
    NilCase     nil_case = NilCase::suspension;
    // q0 in Q labelling, q1 and q2 in Q' labelling.
    Label q0, q1, q2;
    bool  q0_is_vertex = false;

    SimplicialComplex original;
    SimplicialComplex transformed;

    // transformed vs the direct construction of Delta(Q'; rho)
    ComplexCheck matches_direct;
    // suspension case: transformed vs suspension(Delta(Q));
    // otherwise: subdividing {q1, q2} of transformed vs suspension(Delta(Q))
    ComplexCheck case_structure;
    // otherwise only: merging q0 of the suspension into {q1, q2} gives back
    // the transformed complex
    ComplexCheck contraction;
    // links of q1 and q2 in transformed vs Delta(Q)
    ComplexCheck link_q1;
    ComplexCheck link_q2;

    bool passed() const;
  };

  NilCaseReport verify_nil_theorem(CoxeterSystem const& sys,
                                   Word const&          q,
                                   GroupElement const&  rho,
                                   std::size_t          p);

  struct NilSweepOptions {
    std::size_t max_length = 6;
    unsigned    jobs       = 1;
    // Refuse sweeps with more (word, rho, position) cases than this.
    std::size_t case_budget = 10'000'000;
    // Keep at most this many failing reports.
    std::size_t keep_failures = 20;
  };

  struct NilSweepSummary {
    std::string                descriptor;
    std::size_t                max_length = 0;
    std::size_t                cases      = 0;
    std::size_t                passed     = 0;
    std::size_t                suspension_cases = 0;
    std::size_t                subdivision_cases = 0;
    std::vector<NilCaseReport> failures;
  };

  // Every word up to max_length, every element rho, every position. Throws
  // ResourceError if the case count exceeds the budget.
  NilSweepSummary sweep_nil_theorem(CoxeterSystem const&   sys,
                                    NilSweepOptions const& opts);

  // Every word over 1..rank of length at most max_length, by length then
  // lexicographically.
  std::vector<Word> all_words(std::size_t rank, std::size_t max_length);

  struct TransformScript {
    // A reduced word for the Demazure product of the target and rho.
    SubwordSpec start;
    // double_letter and braid moves only.
    std::vector<Move> steps;
  };

  // Reverses hecke_reduce(q). Throws ResourceError on budget exhaustion.
  TransformScript build_pipeline(CoxeterSystem const&      sys,
                                 Word const&               q,
                                 GroupElement const&       rho,
                                 HeckeReduceOptions const& opts = {});

  // Throws InputError if a step does not apply.
  Word script_target(CoxeterSystem const& sys, TransformScript const& script);

  enum class PipelineMode { fast, verified };

  struct StepReport {
    Move    step;
    Word    word;  // after the step
    FVector before;
    FVector after;
    // verified mode only
    bool         checked = false;
    ComplexCheck check;
  };

  struct PipelineResult {
    SimplicialComplex start_complex;
    SimplicialComplex complex;
    Word              word;
    std::vector<StepReport> steps;
    bool                    start_checked = false;
    ComplexCheck            start_check;
    // Index into steps of the first failed verification.
    std::optional<std::size_t> failed_step;

    bool passed() const {
      return !failed_step.has_value() && (!start_checked || start_check.passed);
    }
  };

  // Called after every braid step with its report.
  using BraidHook = std::function<void(StepReport const&)>;

  // Doubling steps go through nil_double_transform; braid steps recompute the
  // complex of the new word directly.
  PipelineResult run_pipeline(CoxeterSystem const&   sys,
                              TransformScript const& script,
                              PipelineMode           mode,
                              BraidHook const&       on_braid = {});

  // Combinatorial type counts of the simple polytope whose nerve is a
  // simplicial sphere of dimension d - 1.
  struct PolytopeCounts {
    int           dimension = 0;
    std::uint64_t vertices  = 0;
    std::uint64_t edges     = 0;
    std::uint64_t facets    = 0;

    bool operator==(PolytopeCounts const&) const = default;
  };

  PolytopeCounts dual_polytope_counts(SimplicialComplex const& nerve);

  struct DualStatementReport {
    NilCaseReport nil;
    // "prism": B(Q') = B(Q) x I; "inverse_2_truncation": B(Q) x I is the
    // 2-truncation of B(Q') at the codimension-2 face dual to {q1, q2}.
    std::string    dual_case;
    PolytopeCounts base;     // B(Q; rho)
    PolytopeCounts prism;    // B(Q; rho) x I
    PolytopeCounts doubled;  // B(Q'; rho)
    // Facet of B(Q') that is a copy of B(Q).
    Label facet_label;
    // Codimension-2 face of B(Q') cut off by the truncation, when there is
    // one, named by its dual edge.
    Face truncated_face;
    // The prism counts match both the prism formulas (2V, 2E + V, F + 2) and
    // the nerve suspension(Delta(Q)); B(Q') equals the prism in the prism
    // case and has exactly one facet fewer in the truncation case.
    bool counts_consistent = false;
    // In the truncation case the doubled polytope has fewer facets than the
    // prism: the prism is the truncated one, not the other way round.
    bool prism_is_truncation = false;

    bool passed() const {
      return nil.passed() && counts_consistent;
    }
  };

  // Throws InputError unless Delta(Q; rho) is spherical.
  DualStatementReport dual_statement_check(CoxeterSystem const& sys,
                                           Word const&          q,
                                           GroupElement const&  rho,
                                           std::size_t          p);

}  // namespace swc

#endif  // SWC_TRANSFORMS_HPP_
