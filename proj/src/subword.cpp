#include "swc/subword.hpp"

#include <set>

#include "swc/errors.hpp"

namespace swc {

  Label position_label(std::size_t pos) {
    return "p" + std::to_string(pos);
  }

  std::vector<Label> position_labels(std::size_t count) {
    std::vector<Label> out;
    out.reserve(count);
    for (std::size_t k = 1; k <= count; ++k) {
      out.push_back(position_label(k));
    }
    return out;
  }

  SubwordSpec::SubwordSpec(Word q, GroupElement r)
      : word(std::move(q)), rho(std::move(r)), labels(position_labels(word.size())) {}

  SubwordSpec::SubwordSpec(Word q, GroupElement r, std::vector<Label> ls)
      : word(std::move(q)), rho(std::move(r)), labels(std::move(ls)) {
    if (labels.size() != word.size()) {
      throw InputError("subword spec: " + std::to_string(labels.size())
                       + " labels for " + std::to_string(word.size())
                       + " positions");
    }
    if (std::set<Label>(labels.begin(), labels.end()).size() != labels.size()) {
      throw InputError("subword spec: position labels must be distinct");
    }
  }

  bool SubwordSpec::canonical_labels() const {
    return labels == position_labels(word.size());
  }

  SimplicialComplex subword_complex(CoxeterSystem const& sys,
                                    SubwordSpec const&   spec) {
    auto const        embeddings = enumerate_embeddings(sys, spec.word, spec.rho);
    std::vector<Face> facets;
    facets.reserve(embeddings.size());
    for (auto const& chosen : embeddings) {
      Face        f;
      std::size_t next = 0;
      for (std::size_t pos = 1; pos <= spec.word.size(); ++pos) {
        if (next < chosen.size() && chosen[next] == pos) {
          ++next;
        } else {
          f.push_back(spec.labels[pos - 1]);
        }
      }
      facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_faces(std::move(facets));
  }

  bool is_spherical(CoxeterSystem const& sys, SubwordSpec const& spec) {
    return demazure_product(sys, spec.word) == spec.rho;
  }

  SubwordSpec link_spec(CoxeterSystem const& sys,
                        SubwordSpec const&   spec,
                        Face const&          face) {
    Face const f = make_face(face);
    if (!subword_complex(sys, spec).contains_face(f)) {
      throw InputError("link_spec: " + to_string(f) + " is not a face");
    }
    std::set<Label> drop(f.begin(), f.end());
    Word               q;
    std::vector<Label> labels;
    for (std::size_t k = 0; k < spec.word.size(); ++k) {
      if (drop.count(spec.labels[k]) == 0) {
        q.push_back(spec.word[k]);
        labels.push_back(spec.labels[k]);
      }
    }
    return SubwordSpec(std::move(q), spec.rho, std::move(labels));
  }

  SubwordSpec cluster_spec(CoxeterSystem const& sys, Word const& c) {
    return multicluster_spec(sys, c, 1);
  }

  SubwordSpec multicluster_spec(CoxeterSystem const& sys,
                                Word const&          c,
                                std::size_t          k) {
    check_coxeter_element_word(sys, c);
    if (k < 1) {
      throw InputError("multicluster_spec: k must be at least 1");
    }
    auto const w0 = sys.longest_element();
    Word       q;
    for (std::size_t t = 0; t < k; ++t) {
      q.insert(q.end(), c.begin(), c.end());
    }
    Word const sorting = c_sorting_word(sys, c, w0);
    q.insert(q.end(), sorting.begin(), sorting.end());
    return SubwordSpec(std::move(q), w0);
  }

}  // namespace swc
