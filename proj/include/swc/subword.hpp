// Subword complexes Delta(Q; rho).
//
// The vertices are positions of Q, not letters: a word with repeated letters
// still has one vertex per position. Facets are complements of the position
// sets that spell a reduced word for rho.

#ifndef SWC_SUBWORD_HPP_
#define SWC_SUBWORD_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "swc/coxeter.hpp"
#include "swc/simplicial.hpp"
#include "swc/words.hpp"

namespace swc {

  // "p1", "p2", ...
  Label position_label(std::size_t pos);
  std::vector<Label> position_labels(std::size_t count);

  struct SubwordSpec {
    Word         word;
    GroupElement rho;
    // One label per position of word.
    std::vector<Label> labels;

    // Labels p1..pm.
    SubwordSpec(Word q, GroupElement r);
    // Throws InputError unless there is one distinct label per letter.
    SubwordSpec(Word q, GroupElement r, std::vector<Label> position_labels);

    // Whether labels are exactly p1..pm.
    bool canonical_labels() const;
  };

  SimplicialComplex subword_complex(CoxeterSystem const& sys,
                                    SubwordSpec const&   spec);

  // The Demazure product of the word equals rho.
  bool is_spherical(CoxeterSystem const& sys, SubwordSpec const& spec);

  // The spec with the positions of face removed; its complex equals the link
  // of face, labels included. Throws InputError if face is not a face.
  SubwordSpec link_spec(CoxeterSystem const& sys,
                        SubwordSpec const&   spec,
                        Face const&          face);

  // Delta(c w_o(c); w_o).
  SubwordSpec cluster_spec(CoxeterSystem const& sys, Word const& c);
  // Delta(c^k w_o(c); w_o), k >= 1.
  SubwordSpec multicluster_spec(CoxeterSystem const& sys,
                                Word const&          c,
                                std::size_t          k);

}  // namespace swc

#endif  // SWC_SUBWORD_HPP_
