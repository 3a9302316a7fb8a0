#include "swc/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "swc/errors.hpp"

namespace swc {

  namespace {
    bool is_digit(char c) {
      return c >= '0' && c <= '9';
    }

    bool is_subface(Face const& small, Face const& big) {
      return std::includes(
          big.begin(), big.end(), small.begin(), small.end(), LabelLess());
    }

    Face face_union(Face const& x, Face const& y) {
      Face out;
      std::set_union(x.begin(),
                     x.end(),
                     y.begin(),
                     y.end(),
                     std::back_inserter(out),
                     LabelLess());
      return out;
    }

    Face face_minus(Face const& x, Face const& y) {
      Face out;
      std::set_difference(x.begin(),
                          x.end(),
                          y.begin(),
                          y.end(),
                          std::back_inserter(out),
                          LabelLess());
      return out;
    }

    bool face_has(Face const& f, Label const& v) {
      return std::binary_search(f.begin(), f.end(), v, LabelLess());
    }

    // Facets as sorted vertex indices into X.vertices().
    struct Indexed {
      std::vector<Label>            labels;
      std::vector<std::vector<int>> facets;
    };

    Indexed index(SimplicialComplex const& X) {
      Indexed out;
      out.labels = X.vertices();
      std::map<Label, int, LabelLess> pos;
      for (std::size_t k = 0; k < out.labels.size(); ++k) {
        pos.emplace(out.labels[k], static_cast<int>(k));
      }
      for (auto const& f : X.facets()) {
        std::vector<int> v;
        for (auto const& l : f) {
          v.push_back(pos.at(l));
        }
        std::sort(v.begin(), v.end());
        out.facets.push_back(std::move(v));
      }
      return out;
    }
  }  // namespace

  bool LabelLess::operator()(Label const& x, Label const& y) const {
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
      if (is_digit(x[i]) && is_digit(y[j])) {
        std::size_t i1 = i, j1 = j;
        while (i1 < x.size() && x[i1] == '0') {
          ++i1;
        }
        while (j1 < y.size() && y[j1] == '0') {
          ++j1;
        }
        std::size_t i2 = i1, j2 = j1;
        while (i2 < x.size() && is_digit(x[i2])) {
          ++i2;
        }
        while (j2 < y.size() && is_digit(y[j2])) {
          ++j2;
        }
        if (i2 - i1 != j2 - j1) {
          return i2 - i1 < j2 - j1;
        }
        int const c = x.compare(i1, i2 - i1, y, j1, j2 - j1);
        if (c != 0) {
          return c < 0;
        }
        i = i2;
        j = j2;
      } else {
        if (x[i] != y[j]) {
          return x[i] < y[j];
        }
        ++i;
        ++j;
      }
    }
    if (i != x.size() || j != y.size()) {
      return j != y.size();
    }
    return x < y;  // equal up to leading zeros
  }

  Face make_face(std::vector<Label> labels) {
    std::sort(labels.begin(), labels.end(), LabelLess());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
  }

  bool FaceLess::operator()(Face const& x, Face const& y) const {
    if (x.size() != y.size()) {
      return x.size() < y.size();
    }
    return std::lexicographical_compare(
        x.begin(), x.end(), y.begin(), y.end(), LabelLess());
  }

  ////////////////////////////////////////////////////////////////////////
  // SimplicialComplex
  ////////////////////////////////////////////////////////////////////////

  SimplicialComplex SimplicialComplex::empty_complex() {
    SimplicialComplex X;
    X._facets.emplace_back();
    return X;
  }

  SimplicialComplex SimplicialComplex::from_faces(std::vector<Face> faces) {
    for (auto& f : faces) {
      f = make_face(std::move(f));
    }
    // Largest first, so a face can only be contained in one already kept.
    std::sort(faces.begin(), faces.end(), [](Face const& x, Face const& y) {
      return FaceLess()(y, x);
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    SimplicialComplex X;
    for (auto& f : faces) {
      bool covered = false;
      for (auto const& g : X._facets) {
        if (g.size() > f.size() && is_subface(f, g)) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        X._facets.push_back(std::move(f));
      }
    }
    std::sort(X._facets.begin(), X._facets.end(), FaceLess());
    return X;
  }

  std::vector<Label> SimplicialComplex::vertices() const {
    std::set<Label, LabelLess> vs;
    for (auto const& f : _facets) {
      vs.insert(f.begin(), f.end());
    }
    return {vs.begin(), vs.end()};
  }

  bool SimplicialComplex::has_vertex(Label const& v) const {
    return std::any_of(_facets.begin(), _facets.end(), [&v](Face const& f) {
      return face_has(f, v);
    });
  }

  bool SimplicialComplex::contains_face(Face const& f) const {
    Face const g = make_face(f);
    return std::any_of(_facets.begin(), _facets.end(), [&g](Face const& h) {
      return is_subface(g, h);
    });
  }

  int SimplicialComplex::dimension() const noexcept {
    if (_facets.empty()) {
      return -2;
    }
    return static_cast<int>(_facets.back().size()) - 1;
  }

  bool SimplicialComplex::is_pure() const noexcept {
    return _facets.empty()
           || _facets.front().size() == _facets.back().size();
  }

  std::vector<Face> SimplicialComplex::faces() const {
    std::set<Face, FaceLess> out;
    for (auto const& f : _facets) {
      std::size_t const n = f.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Face g;
        for (std::size_t k = 0; k < n; ++k) {
          if (mask & (std::uint64_t{1} << k)) {
            g.push_back(f[k]);
          }
        }
        out.insert(std::move(g));
      }
    }
    return {out.begin(), out.end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  SimplicialComplex link(SimplicialComplex const& X, Face const& sigma) {
    Face const s = make_face(sigma);
    if (!X.contains_face(s)) {
      throw InputError("link: " + to_string(s) + " is not a face");
    }
    std::vector<Face> faces;
    for (auto const& f : X.facets()) {
      if (is_subface(s, f)) {
        faces.push_back(face_minus(f, s));
      }
    }
    return SimplicialComplex::from_faces(std::move(faces));
  }

  SimplicialComplex star(SimplicialComplex const& X, Face const& sigma) {
    Face const s = make_face(sigma);
    if (!X.contains_face(s)) {
      throw InputError("star: " + to_string(s) + " is not a face");
    }
    std::vector<Face> faces;
    for (auto const& f : X.facets()) {
      if (is_subface(s, f)) {
        faces.push_back(f);
      }
    }
    return SimplicialComplex::from_faces(std::move(faces));
  }

  SimplicialComplex join(SimplicialComplex const& X1,
                         SimplicialComplex const& X2) {
    for (auto const& v : X1.vertices()) {
      if (X2.has_vertex(v)) {
        throw InputError("join: label " + v + " occurs in both complexes");
      }
    }
    std::vector<Face> faces;
    for (auto const& f : X1.facets()) {
      for (auto const& g : X2.facets()) {
        faces.push_back(face_union(f, g));
      }
    }
    return SimplicialComplex::from_faces(std::move(faces));
  }

  SimplicialComplex suspension(SimplicialComplex const& X,
                               Label const&             a,
                               Label const&             b) {
    if (a == b) {
      throw InputError("suspension: apex labels must differ");
    }
    return join(X, SimplicialComplex::from_faces({{a}, {b}}));
  }

  SimplicialComplex edge_subdivision(SimplicialComplex const& X,
                                     Face const&              edge,
                                     Label const&             r) {
    Face const e = make_face(edge);
    if (e.size() != 2 || !X.contains_face(e)) {
      throw InputError("edge_subdivision: " + to_string(e) + " is not an edge");
    }
    if (X.has_vertex(r)) {
      throw InputError("edge_subdivision: label " + r + " is not fresh");
    }
    std::vector<Face> faces;
    for (auto const& f : X.facets()) {
      if (!is_subface(e, f)) {
        faces.push_back(f);
        continue;
      }
      for (auto const& drop : e) {
        Face g = face_minus(f, {drop});
        g.push_back(r);
        faces.push_back(std::move(g));
      }
    }
    return SimplicialComplex::from_faces(std::move(faces));
  }

  std::optional<EdgeContraction>
  inverse_edge_subdivision(SimplicialComplex const& X,
                           Label const&             r,
                           Face const&              edge) {
    Face const e = make_face(edge);
    if (e.size() != 2 || face_has(e, r) || !X.has_vertex(r)
        || X.contains_face(e)) {
      return std::nullopt;
    }
    std::vector<Face> faces;
    for (auto const& f : X.facets()) {
      if (face_has(f, r)) {
        faces.push_back(face_union(face_minus(f, {r}), e));
      } else {
        faces.push_back(f);
      }
    }
    auto Y = SimplicialComplex::from_faces(std::move(faces));
    if (edge_subdivision(Y, e, r) != X) {
      return std::nullopt;
    }
    return EdgeContraction{std::move(Y), e};
  }

  std::optional<EdgeContraction>
  inverse_edge_subdivision(SimplicialComplex const& X, Label const& r) {
    if (!X.has_vertex(r)) {
      throw InputError("inverse_edge_subdivision: " + r + " is not a vertex");
    }
    std::set<Label, LabelLess> nbrs;
    for (auto const& f : X.facets()) {
      if (face_has(f, r)) {
        nbrs.insert(f.begin(), f.end());
      }
    }
    nbrs.erase(r);
    std::vector<Label> const cand(nbrs.begin(), nbrs.end());
    for (std::size_t i = 0; i < cand.size(); ++i) {
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (auto res = inverse_edge_subdivision(X, r, {cand[i], cand[j]})) {
          return res;
        }
      }
    }
    return std::nullopt;
  }

  FVector f_vector(SimplicialComplex const& X) {
    FVector out;
    if (X.is_void()) {
      return out;
    }
    out.counts.assign(static_cast<std::size_t>(X.dimension() + 2), 0);
    for (auto const& f : X.faces()) {
      ++out.counts[f.size()];
    }
    return out;
  }

  std::int64_t euler_characteristic(SimplicialComplex const& X) {
    auto const   fv = f_vector(X);
    std::int64_t chi = 0;
    for (std::size_t k = 1; k < fv.counts.size(); ++k) {
      auto const c = static_cast<std::int64_t>(fv.counts[k]);
      chi += (k % 2 == 1) ? c : -c;
    }
    return chi;
  }

  std::int64_t reduced_euler_characteristic(SimplicialComplex const& X) {
    return X.is_void() ? 0 : euler_characteristic(X) - 1;
  }

  bool is_closed_pseudomanifold(SimplicialComplex const& X) {
    if (!X.is_pure()) {
      throw InputError("is_closed_pseudomanifold: complex is not pure");
    }
    if (X.is_void()) {
      return false;
    }
    std::map<Face, int, FaceLess> ridges;
    for (auto const& f : X.facets()) {
      for (std::size_t k = 0; k < f.size(); ++k) {
        Face g = f;
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(k));
        ++ridges[g];
      }
    }
    return std::all_of(ridges.begin(), ridges.end(), [](auto const& kv) {
      return kv.second == 2;
    });
  }

  SimplicialComplex relabel(SimplicialComplex const& X, Relabelling const& map) {
    std::vector<Face> faces;
    std::set<Label>   image;
    auto const        verts = X.vertices();
    for (auto const& v : verts) {
      auto it = map.find(v);
      image.insert(it == map.end() ? v : it->second);
    }
    if (image.size() != verts.size()) {
      throw InputError("relabel: labelling is not injective on the vertices");
    }
    for (auto const& f : X.facets()) {
      Face g;
      for (auto const& v : f) {
        auto it = map.find(v);
        g.push_back(it == map.end() ? v : it->second);
      }
      faces.push_back(std::move(g));
    }
    return SimplicialComplex::from_faces(std::move(faces));
  }

  std::optional<Relabelling> are_isomorphic(SimplicialComplex const& X,
                                            SimplicialComplex const& Y) {
    if (X.num_facets() != Y.num_facets()) {
      return std::nullopt;
    }
    auto const ix = index(X);
    auto const iy = index(Y);
    std::size_t const n = ix.labels.size();
    if (iy.labels.size() != n) {
      return std::nullopt;
    }

    // Per vertex: sorted sizes of the facets through it, and neighbour count.
    auto signatures = [n](Indexed const& I,
                          std::vector<std::vector<char>>& adj) {
      adj.assign(n, std::vector<char>(n, 0));
      std::vector<std::vector<std::size_t>> sizes(n);
      for (auto const& f : I.facets) {
        for (int a : f) {
          sizes[a].push_back(f.size());
          for (int b : f) {
            adj[a][b] = a != b;
          }
        }
      }
      std::vector<std::pair<std::vector<std::size_t>, std::size_t>> sig(n);
      for (std::size_t v = 0; v < n; ++v) {
        std::sort(sizes[v].begin(), sizes[v].end());
        sig[v].first  = std::move(sizes[v]);
        sig[v].second = static_cast<std::size_t>(
            std::count(adj[v].begin(), adj[v].end(), 1));
      }
      return sig;
    };
    std::vector<std::vector<char>> adjx, adjy;
    auto const                     sigx = signatures(ix, adjx);
    auto const                     sigy = signatures(iy, adjy);
    {
      auto sx = sigx, sy = sigy;
      std::sort(sx.begin(), sx.end());
      std::sort(sy.begin(), sy.end());
      if (sx != sy) {
        return std::nullopt;
      }
    }

    // Assignment order: each next vertex has the most assigned neighbours.
    std::vector<int>  order;
    std::vector<char> placed(n, 0);
    std::vector<int>  links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      int best = -1;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) {
          continue;
        }
        if (best < 0 || links[v] > links[best]
            || (links[v] == links[best]
                && sigx[v].second > sigx[best].second)) {
          best = static_cast<int>(v);
        }
      }
      placed[best] = 1;
      order.push_back(best);
      for (std::size_t v = 0; v < n; ++v) {
        links[v] += adjx[best][v];
      }
    }
    std::vector<std::size_t> rank(n);
    for (std::size_t k = 0; k < n; ++k) {
      rank[order[k]] = k;
    }
    // Facets of X to check once the vertex at order[k] is placed.
    std::vector<std::vector<std::size_t>> due(n);
    for (std::size_t fi = 0; fi < ix.facets.size(); ++fi) {
      std::size_t last = 0;
      for (int v : ix.facets[fi]) {
        last = std::max(last, rank[v]);
      }
      if (!ix.facets[fi].empty()) {
        due[last].push_back(fi);
      }
    }
    std::set<std::vector<int>> yfacets(iy.facets.begin(), iy.facets.end());

    std::vector<int>  image(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
      if (k == n) {
        return true;
      }
      int const v = order[k];
      for (std::size_t u = 0; u < n; ++u) {
        if (used[u] || sigx[v] != sigy[u]) {
          continue;
        }
        bool ok = true;
        for (std::size_t j = 0; j < k && ok; ++j) {
          int const w = order[j];
          ok          = adjx[v][w] == adjy[u][image[w]];
        }
        if (!ok) {
          continue;
        }
        image[v] = static_cast<int>(u);
        used[u]  = 1;
        for (std::size_t fi : due[k]) {
          std::vector<int> img;
          for (int x : ix.facets[fi]) {
            img.push_back(image[x]);
          }
          std::sort(img.begin(), img.end());
          if (yfacets.count(img) == 0) {
            ok = false;
            break;
          }
        }
        if (ok && extend(k + 1)) {
          return true;
        }
        used[u]  = 0;
        image[v] = -1;
      }
      return false;
    };
    if (!extend(0)) {
      return std::nullopt;
    }
    Relabelling out;
    for (std::size_t v = 0; v < n; ++v) {
      out.emplace(ix.labels[v], iy.labels[image[v]]);
    }
    return out;
  }

  std::string to_string(Face const& f) {
    std::string s = "{";
    for (std::size_t k = 0; k < f.size(); ++k) {
      s += (k > 0 ? "," : "") + f[k];
    }
    return s + "}";
  }

  std::string to_string(SimplicialComplex const& X) {
    if (X.is_void()) {
      return "VOID";
    }
    std::string s = "[";
    for (std::size_t k = 0; k < X.facets().size(); ++k) {
      s += (k > 0 ? " " : "") + to_string(X.facets()[k]);
    }
    return s + "]";
  }

  namespace complexes {
    SimplicialComplex cycle(std::vector<Label> const& labels) {
      std::vector<Face> faces;
      for (std::size_t k = 0; k < labels.size(); ++k) {
        faces.push_back({labels[k], labels[(k + 1) % labels.size()]});
      }
      return SimplicialComplex::from_faces(std::move(faces));
    }

    SimplicialComplex simplex_boundary(std::vector<Label> const& labels) {
      std::vector<Face> faces;
      for (std::size_t k = 0; k < labels.size(); ++k) {
        Face f = labels;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
        faces.push_back(std::move(f));
      }
      return SimplicialComplex::from_faces(std::move(faces));
    }

    SimplicialComplex octahedron(std::vector<Label> const& labels) {
      auto out = SimplicialComplex::empty_complex();
      for (std::size_t k = 0; k + 1 < labels.size(); k += 2) {
        out = join(out,
                   SimplicialComplex::from_faces({{labels[k]}, {labels[k + 1]}}));
      }
      return out;
    }
  }  // namespace complexes

}  // namespace swc
