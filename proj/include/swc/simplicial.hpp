// Finite simplicial complexes on string-labelled vertices, stored by facets.
//
// Two degenerate complexes are kept apart: VOID has no faces at all, EMPTY
// has the single face {} and is the sphere of dimension -1.
//
// Duality with simple polytopes: if X is the nerve (boundary of the polar
// dual) of a simple polytope P, then suspension(X) is the nerve of the prism
// P x I, and edge_subdivision(X, e, r) is the nerve of the truncation of P at
// the codimension-2 face dual to e.

#ifndef SWC_SIMPLICIAL_HPP_
#define SWC_SIMPLICIAL_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace swc {

  using Label = std::string;

  // Natural order: digit runs compare numerically, so "p2" < "p10".
  struct LabelLess {
    bool operator()(Label const& x, Label const& y) const;
  };

  // Sorted by LabelLess, no repeats.
  using Face = std::vector<Label>;

  Face make_face(std::vector<Label> labels);

  // Relation used to sort facet lists: shorter first, then LabelLess
  // lexicographic.
  struct FaceLess {
    bool operator()(Face const& x, Face const& y) const;
  };

  class SimplicialComplex {
   public:
    // VOID.
    SimplicialComplex() = default;

    static SimplicialComplex void_complex() {
      return {};
    }
    static SimplicialComplex empty_complex();

    // The complex generated by the given faces; non-maximal ones are
    // dropped. No faces gives VOID; only empty faces gives EMPTY.
    static SimplicialComplex from_faces(std::vector<Face> faces);

    std::vector<Face> const& facets() const noexcept {
      return _facets;
    }
    std::size_t num_facets() const noexcept {
      return _facets.size();
    }

    bool is_void() const noexcept {
      return _facets.empty();
    }
    bool is_empty() const noexcept {
      return _facets.size() == 1 && _facets.front().empty();
    }

    std::vector<Label> vertices() const;
    bool               has_vertex(Label const& v) const;
    bool               contains_face(Face const& f) const;

    // Largest facet size minus one; -1 for EMPTY and -2 for VOID.
    int  dimension() const noexcept;
    bool is_pure() const noexcept;

    // Every face, sorted by FaceLess.
    std::vector<Face> faces() const;

    bool operator==(SimplicialComplex const&) const = default;

   private:
    std::vector<Face> _facets;  // sorted by FaceLess
  };

  // Throws InputError unless sigma is a face of X.
  SimplicialComplex link(SimplicialComplex const& X, Face const& sigma);
  SimplicialComplex star(SimplicialComplex const& X, Face const& sigma);

  // Throws InputError if the vertex sets meet.
  SimplicialComplex join(SimplicialComplex const& X1, SimplicialComplex const& X2);
  SimplicialComplex suspension(SimplicialComplex const& X,
                               Label const&             a,
                               Label const&             b);

  // Bisects every simplex through the edge {s, t} with the new vertex r.
  // Throws InputError if the edge is not a face or r is not fresh.
  SimplicialComplex edge_subdivision(SimplicialComplex const& X,
                                     Face const&              edge,
                                     Label const&             r);

  struct EdgeContraction {
    SimplicialComplex complex;
    Face              edge;
  };

  // Some (Y, {s, t}) with edge_subdivision(Y, {s, t}, r) == X, or nullopt.
  // Candidate pairs are non-adjacent neighbours of r in LabelLess order and
  // the first one that passes the reconstruction check wins.
  std::optional<EdgeContraction>
  inverse_edge_subdivision(SimplicialComplex const& X, Label const& r);

  // Same, trying only the given edge.
  std::optional<EdgeContraction>
  inverse_edge_subdivision(SimplicialComplex const& X,
                           Label const&             r,
                           Face const&              edge);

  struct FVector {
    // counts[k] = f_{k-1}: counts[0] = f_{-1}, counts[1] = f_0, ...
    std::vector<std::uint64_t> counts;

    // f_i for i >= -1; zero past the top dimension.
    std::uint64_t f(int i) const {
      auto const k = static_cast<std::size_t>(i + 1);
      return k < counts.size() ? counts[k] : 0;
    }
    bool operator==(FVector const&) const = default;
  };

  FVector f_vector(SimplicialComplex const& X);

  // sum_{i >= 0} (-1)^i f_i
  std::int64_t euler_characteristic(SimplicialComplex const& X);
  // sum_{i >= -1} (-1)^i f_i; -1 for EMPTY, 0 for VOID.
  std::int64_t reduced_euler_characteristic(SimplicialComplex const& X);

  // Every ridge lies in exactly two facets. Throws InputError if X is not
  // pure. EMPTY counts as closed (no ridges), VOID does not.
  bool is_closed_pseudomanifold(SimplicialComplex const& X);

  using Relabelling = std::map<Label, Label>;

  // Labels missing from the map are kept. Throws InputError if two vertices
  // end up with the same label.
  SimplicialComplex relabel(SimplicialComplex const& X, Relabelling const& map);

  // A vertex bijection carrying the facets of X onto the facets of Y.
  std::optional<Relabelling> are_isomorphic(SimplicialComplex const& X,
                                            SimplicialComplex const& Y);

  std::string to_string(Face const& f);
  std::string to_string(SimplicialComplex const& X);

  // Fixed complexes used by tests and examples.
  namespace complexes {
    // Cycle on the given labels in order.
    SimplicialComplex cycle(std::vector<Label> const& labels);
    // Boundary of the simplex on the given labels.
    SimplicialComplex simplex_boundary(std::vector<Label> const& labels);
    // Boundary of the octahedron with antipodal pairs (x[2k], x[2k+1]).
    SimplicialComplex octahedron(std::vector<Label> const& labels);
  }  // namespace complexes

}  // namespace swc

#endif  // SWC_SIMPLICIAL_HPP_
