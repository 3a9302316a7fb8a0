#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "oracles.hpp"
#include "swc/errors.hpp"
#include "swc/simplicial.hpp"
#include "swc/subword.hpp"
#include "swc/transforms.hpp"

using namespace swc;
namespace cx = swc::complexes;

namespace {
  SimplicialComplex make(std::vector<std::vector<Label>> facets) {
    std::vector<Face> faces;
    for (auto& f : facets) {
      faces.push_back(make_face(std::move(f)));
    }
    return SimplicialComplex::from_faces(std::move(faces));
  }

  SimplicialComplex pentagon() {
    return cx::cycle({"1", "2", "3", "4", "5"});
  }

  // The displayed face-level form: faces not containing the edge, plus the
  // cone from r over the faces of the closed star that miss the edge.
  SimplicialComplex subdivision_by_faces(SimplicialComplex const& X,
                                         Face const&              edge,
                                         Label const&             r) {
    auto const        st = star(X, edge);
    std::vector<Face> out;
    auto const contains_edge = [&](Face const& f) {
      return std::includes(f.begin(), f.end(), edge.begin(), edge.end(), LabelLess{});
    };
    for (auto const& f : X.faces()) {
      if (!contains_edge(f)) {
        out.push_back(f);
      }
    }
    for (auto const& f : st.faces()) {
      if (!contains_edge(f)) {
        auto g = f;
        g.push_back(r);
        out.push_back(make_face(std::move(g)));
      }
    }
    return SimplicialComplex::from_faces(std::move(out));
  }

  // Isomorphism by trying every vertex bijection.
  bool brute_isomorphic(SimplicialComplex const& X, SimplicialComplex const& Y) {
    auto const xv = X.vertices();
    auto       yv = Y.vertices();
    if (xv.size() != yv.size() || X.num_facets() != Y.num_facets()) {
      return false;
    }
    std::sort(yv.begin(), yv.end());
    do {
      Relabelling map;
      for (std::size_t i = 0; i < xv.size(); ++i) {
        map[xv[i]] = yv[i];
      }
      if (relabel(X, map) == Y) {
        return true;
      }
    } while (std::next_permutation(yv.begin(), yv.end()));
    return false;
  }

  SimplicialComplex random_complex(std::mt19937_64& rng,
                                   std::size_t      nverts,
                                   std::size_t      nfacets,
                                   std::size_t      dim) {
    std::uniform_int_distribution<std::size_t> pick(1, nverts);
    std::vector<Face>                          faces;
    for (std::size_t k = 0; k < nfacets; ++k) {
      std::set<std::size_t> s;
      while (s.size() < dim + 1) {
        s.insert(pick(rng));
      }
      Face f;
      for (auto v : s) {
        f.push_back("v" + std::to_string(v));
      }
      faces.push_back(make_face(std::move(f)));
    }
    return SimplicialComplex::from_faces(std::move(faces));
  }

  Relabelling random_relabelling(std::mt19937_64& rng, SimplicialComplex const& X) {
    auto const vs     = X.vertices();
    auto       shuffled = vs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    Relabelling map;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      map[vs[i]] = "w" + shuffled[i];
    }
    return map;
  }

  std::vector<SimplicialComplex> subword_samples() {
    std::vector<SimplicialComplex> out;
    for (char const* t : {"A2", "B2", "A3"}) {
      auto const sys = CoxeterSystem::parse(t);
      for (auto const& q : all_words(sys.rank(), sys.rank() == 2 ? 6 : 5)) {
        for (auto const& rho : sys.elements()) {
          auto X = subword_complex(sys, SubwordSpec(q, rho));
          if (X.dimension() >= 1) {
            out.push_back(std::move(X));
          }
        }
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("labels sort naturally") {
  LabelLess const less;
  CHECK(less("p2", "p10"));
  CHECK_FALSE(less("p10", "p2"));
  CHECK(less("a", "b"));
  CHECK(less("p1", "q0"));
  CHECK_FALSE(less("p1", "p1"));
  CHECK(make_face({"p10", "p2", "p1", "p2"}) == Face{"p1", "p2", "p10"});
}

TEST_CASE("VOID and EMPTY") {
  auto const V = SimplicialComplex::void_complex();
  auto const E = SimplicialComplex::empty_complex();
  CHECK(V.is_void());
  CHECK_FALSE(V.is_empty());
  CHECK(E.is_empty());
  CHECK_FALSE(E.is_void());
  CHECK(V != E);
  CHECK(V.dimension() == -2);
  CHECK(E.dimension() == -1);
  CHECK(E.vertices().empty());
  CHECK(SimplicialComplex::from_faces({}) == V);
  CHECK(SimplicialComplex::from_faces({{}, {}}) == E);
  CHECK(f_vector(V).counts.empty());
  CHECK(f_vector(E).counts == std::vector<std::uint64_t>{1});
  CHECK(reduced_euler_characteristic(E) == -1);
  CHECK(reduced_euler_characteristic(V) == 0);
  CHECK(is_closed_pseudomanifold(E));
  CHECK_FALSE(is_closed_pseudomanifold(V));
  CHECK(E.contains_face({}));
  CHECK_FALSE(V.contains_face({}));
}

TEST_CASE("from_faces keeps maximal faces") {
  auto const X = make({{"1", "2"}, {"1"}, {"2", "3"}, {"1", "2"}, {}});
  CHECK(X.facets() == std::vector<Face>{{"1", "2"}, {"2", "3"}});
  CHECK(X.vertices() == std::vector<Label>{"1", "2", "3"});
  CHECK(X.is_pure());
  CHECK_FALSE(make({{"1", "2"}, {"3"}}).is_pure());
  CHECK(X.faces().size() == 6);
}

TEST_CASE("link") {
  auto const P = pentagon();
  CHECK(link(P, {"1"}) == make({{"2"}, {"5"}}));
  CHECK(link(P, {}) == P);
  auto const tri = make({{"1", "2", "3"}});
  CHECK(link(tri, {"1", "2"}) == make({{"3"}}));
  CHECK(link(tri, {"1", "2", "3"}).is_empty());
  CHECK(link(P, {"1", "2"}).is_empty());
  CHECK_THROWS_AS(link(P, {"1", "3"}), InputError);
  CHECK_THROWS_AS(link(P, {"9"}), InputError);
  CHECK_THROWS_AS(link(SimplicialComplex::void_complex(), {}), InputError);
}

TEST_CASE("star") {
  auto const P = pentagon();
  CHECK(star(P, {"1"}) == make({{"1", "2"}, {"1", "5"}}));
  CHECK(star(P, {}) == P);
  auto const pt = make({{"v"}});
  CHECK(star(pt, {"v"}) == pt);
  CHECK_THROWS_AS(star(P, {"1", "3"}), InputError);
}

TEST_CASE("star and link agree with their face-level definitions") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto const X     = random_complex(rng, 7, 6, 2);
    auto const faces = X.faces();
    for (auto const& sigma : faces) {
      std::vector<Face> st, lk;
      for (auto const& rho : faces) {
        Face u, meet;
        std::set_union(sigma.begin(), sigma.end(), rho.begin(), rho.end(),
                       std::back_inserter(u), LabelLess{});
        std::set_intersection(sigma.begin(), sigma.end(), rho.begin(), rho.end(),
                              std::back_inserter(meet), LabelLess{});
        if (X.contains_face(u)) {
          st.push_back(rho);
          if (meet.empty()) {
            lk.push_back(rho);
          }
        }
      }
      CHECK(star(X, sigma) == SimplicialComplex::from_faces(st));
      CHECK(link(X, sigma) == SimplicialComplex::from_faces(lk));
    }
  }
}

TEST_CASE("join") {
  auto const a = make({{"a"}});
  auto const b = make({{"b"}});
  CHECK(join(a, b) == make({{"a", "b"}}));
  auto const P = pentagon();
  CHECK(join(P, SimplicialComplex::empty_complex()) == P);
  CHECK(join(P, SimplicialComplex::void_complex()).is_void());
  auto const s0a = make({{"a1"}, {"a2"}});
  auto const s0b = make({{"b1"}, {"b2"}});
  CHECK(join(s0a, s0b) == cx::cycle({"a1", "b1", "a2", "b2"}));
  CHECK_THROWS_AS(join(P, make({{"1"}})), InputError);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto const X = random_complex(rng, 6, 4, 1);
    auto const Y = relabel(random_complex(rng, 5, 3, 2), {{"v1", "u1"},
                                                           {"v2", "u2"},
                                                           {"v3", "u3"},
                                                           {"v4", "u4"},
                                                           {"v5", "u5"}});
    CHECK(join(X, Y).num_facets() == X.num_facets() * Y.num_facets());
  }
}

TEST_CASE("suspension") {
  auto const s0 = make({{"x"}, {"y"}});
  CHECK(suspension(s0, "a", "b") == cx::cycle({"x", "a", "y", "b"}));
  CHECK(suspension(SimplicialComplex::empty_complex(), "a", "b") == make({{"a"}, {"b"}}));
  auto const SP = suspension(pentagon(), "a", "b");
  CHECK(f_vector(SP).f(0) == 7);
  CHECK(f_vector(SP).f(2) == 10);
  CHECK(is_closed_pseudomanifold(SP));
  CHECK_THROWS_AS(suspension(pentagon(), "1", "b"), InputError);
  CHECK_THROWS_AS(suspension(pentagon(), "a", "a"), InputError);

  for (auto const& X : {pentagon(), cx::octahedron({"1", "2", "3", "4", "5", "6"}),
                        make({{"1", "2"}, {"2", "3"}}), SimplicialComplex::empty_complex()}) {
    CHECK(reduced_euler_characteristic(suspension(X, "a", "b"))
          == -reduced_euler_characteristic(X));
  }
}

TEST_CASE("edge_subdivision") {
  auto const C4 = cx::cycle({"1", "2", "3", "4"});
  auto const C5 = edge_subdivision(C4, {"1", "2"}, "r");
  CHECK(C5 == cx::cycle({"1", "r", "2", "3", "4"}));
  CHECK(edge_subdivision(make({{"s", "t"}}), {"s", "t"}, "r")
        == make({{"s", "r"}, {"r", "t"}}));
  auto const SP = suspension(pentagon(), "a", "b");
  CHECK_THROWS_AS(edge_subdivision(SP, {"a", "b"}, "r"), InputError);
  CHECK_THROWS_AS(edge_subdivision(SP, {"1"}, "r"), InputError);
  CHECK_THROWS_AS(edge_subdivision(SP, {"1", "2"}, "3"), InputError);
}

TEST_CASE("edge_subdivision matches the face-level form") {
  std::mt19937_64 rng(3);
  auto            check_all_edges = [](SimplicialComplex const& X) {
    for (auto const& f : X.faces()) {
      if (f.size() == 2) {
        CHECK(edge_subdivision(X, f, "r") == subdivision_by_faces(X, f, "r"));
      }
    }
  };
  check_all_edges(suspension(pentagon(), "a", "b"));
  check_all_edges(cx::octahedron({"1", "2", "3", "4", "5", "6"}));
  check_all_edges(cx::simplex_boundary({"1", "2", "3", "4", "5"}));
  for (int trial = 0; trial < 100; ++trial) {
    check_all_edges(random_complex(rng, 7, 5, 1 + trial % 3));
  }
}

TEST_CASE("edge_subdivision preserves pseudomanifolds and Euler characteristic") {
  for (auto const& X : subword_samples()) {
    bool const pm = X.is_pure() && is_closed_pseudomanifold(X);
    for (auto const& f : X.faces()) {
      if (f.size() == 2) {
        auto const Y = edge_subdivision(X, f, "r");
        CHECK(euler_characteristic(Y) == euler_characteristic(X));
        CHECK(is_closed_pseudomanifold(Y) == pm);
      }
    }
  }
}

TEST_CASE("inverse_edge_subdivision examples") {
  auto const C5  = cx::cycle({"1", "r", "2", "3", "4"});
  auto const inv = inverse_edge_subdivision(C5, "r");
  REQUIRE(inv.has_value());
  CHECK(inv->complex == cx::cycle({"1", "2", "3", "4"}));
  CHECK(inv->edge == Face{"1", "2"});

  // The octahedron is the bipyramid over a triangle with one equatorial
  // edge subdivided, so every vertex can be eliminated.
  auto const O = cx::octahedron({"1", "2", "3", "4", "5", "6"});
  for (auto const& v : O.vertices()) {
    auto const c = inverse_edge_subdivision(O, v);
    REQUIRE(c.has_value());
    CHECK(edge_subdivision(c->complex, c->edge, v) == O);
    CHECK(f_vector(c->complex).f(0) == 5);
  }

  CHECK_FALSE(inverse_edge_subdivision(cx::simplex_boundary({"1", "2", "3", "4"}), "1"));
  auto const bipyramid = join(cx::cycle({"1", "2", "3", "4", "5"}), make({{"n"}, {"s"}}));
  CHECK_FALSE(inverse_edge_subdivision(bipyramid, "n"));
  CHECK(inverse_edge_subdivision(bipyramid, "1").has_value());
  CHECK_THROWS_AS(inverse_edge_subdivision(O, "9"), InputError);

  auto const SP  = suspension(pentagon(), "a", "b");
  auto const sub = edge_subdivision(SP, {"1", "a"}, "r");
  auto const back = inverse_edge_subdivision(sub, "r");
  REQUIRE(back.has_value());
  CHECK(back->complex == SP);
  CHECK(back->edge == Face{"1", "a"});
}

TEST_CASE("checked inverse_edge_subdivision") {
  auto const O = cx::octahedron({"1", "2", "3", "4", "5", "6"});
  auto const c = inverse_edge_subdivision(O, "1", {"3", "4"});
  REQUIRE(c.has_value());
  CHECK(c->edge == Face{"3", "4"});
  CHECK(edge_subdivision(c->complex, {"3", "4"}, "1") == O);
  CHECK_FALSE(inverse_edge_subdivision(O, "1", {"3", "5"}));
  CHECK_FALSE(inverse_edge_subdivision(O, "1", {"1", "3"}));
  CHECK_FALSE(inverse_edge_subdivision(O, "1", {"2", "3"}));
}

TEST_CASE("subdivide then contract round trip") {
  std::mt19937_64 rng(17);
  std::size_t     edges_checked = 0;
  auto const      samples       = subword_samples();
  for (std::size_t i = 0; i < samples.size(); i += 7) {
    auto const& X = samples[i];
    for (auto const& f : X.faces()) {
      if (f.size() != 2) {
        continue;
      }
      ++edges_checked;
      auto const Y       = edge_subdivision(X, f, "r");
      auto const checked = inverse_edge_subdivision(Y, "r", f);
      REQUIRE(checked.has_value());
      CHECK(checked->complex == X);
      auto const any = inverse_edge_subdivision(Y, "r");
      REQUIRE(any.has_value());
      CHECK(edge_subdivision(any->complex, any->edge, "r") == Y);
    }
  }
  CHECK(edges_checked > 100);
}

TEST_CASE("f-vector and Euler characteristic") {
  auto const P = pentagon();
  CHECK(f_vector(P).counts == std::vector<std::uint64_t>{1, 5, 5});
  CHECK(euler_characteristic(P) == 0);
  CHECK(reduced_euler_characteristic(P) == -1);
  auto const T = cx::simplex_boundary({"1", "2", "3", "4"});
  CHECK(euler_characteristic(T) == 2);
  CHECK(f_vector(T).counts == std::vector<std::uint64_t>{1, 4, 6, 4});
  auto const O = cx::octahedron({"1", "2", "3", "4", "5", "6"});
  CHECK(f_vector(O).counts == std::vector<std::uint64_t>{1, 6, 12, 8});
  CHECK(f_vector(make({{"1", "2", "3"}, {"2", "3", "4"}, {"5"}})).counts
        == std::vector<std::uint64_t>{1, 5, 5, 2});
  CHECK(f_vector(P).f(5) == 0);
  CHECK(f_vector(P).f(-1) == 1);
}

TEST_CASE("f-vector agrees with direct face enumeration") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto const X = random_complex(rng, 8, 5, 1 + trial % 4);
    std::vector<std::uint64_t> counts(X.dimension() + 2, 0);
    for (auto const& f : X.faces()) {
      ++counts[f.size()];
    }
    CHECK(f_vector(X).counts == counts);
  }
}

TEST_CASE("closed pseudomanifolds") {
  CHECK(is_closed_pseudomanifold(pentagon()));
  CHECK_FALSE(is_closed_pseudomanifold(make({{"1", "2"}, {"2", "3"}})));
  CHECK(is_closed_pseudomanifold(make({{"a"}, {"b"}})));
  CHECK_FALSE(is_closed_pseudomanifold(make({{"a"}})));
  CHECK(is_closed_pseudomanifold(cx::simplex_boundary({"1", "2", "3", "4", "5"})));
  CHECK_THROWS_AS(is_closed_pseudomanifold(make({{"1", "2"}, {"3"}})), InputError);
  auto const three_pages = make({{"1", "2", "a"}, {"1", "2", "b"}, {"1", "2", "c"}});
  CHECK_FALSE(is_closed_pseudomanifold(three_pages));
}

TEST_CASE("relabel") {
  auto const P = pentagon();
  auto const Q = relabel(P, {{"1", "x"}});
  CHECK(Q.has_vertex("x"));
  CHECK_FALSE(Q.has_vertex("1"));
  CHECK(Q.num_facets() == 5);
  CHECK_THROWS_AS(relabel(P, {{"1", "2"}}), InputError);
  CHECK(relabel(P, {{"1", "2"}, {"2", "1"}}) != P);
}

TEST_CASE("isomorphism") {
  auto const P = pentagon();
  auto const R = cx::cycle({"c", "a", "e", "b", "d"});
  auto const w = are_isomorphic(P, R);
  REQUIRE(w.has_value());
  CHECK(relabel(P, *w) == R);
  CHECK_FALSE(are_isomorphic(P, cx::cycle({"1", "2", "3", "4"})));
  CHECK_FALSE(are_isomorphic(P, make({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}})));
  CHECK(are_isomorphic(SimplicialComplex::empty_complex(), SimplicialComplex::empty_complex()));
  CHECK(are_isomorphic(SimplicialComplex::void_complex(), SimplicialComplex::void_complex()));
  CHECK_FALSE(are_isomorphic(SimplicialComplex::void_complex(), SimplicialComplex::empty_complex()));
}

TEST_CASE("isomorphism finds relabellings") {
  std::mt19937_64 rng(29);
  auto const      samples = subword_samples();
  for (std::size_t i = 0; i < samples.size(); i += 5) {
    auto const& X = samples[i];
    auto const  Y = relabel(X, random_relabelling(rng, X));
    auto const  w = are_isomorphic(X, Y);
    REQUIRE(w.has_value());
    CHECK(relabel(X, *w) == Y);
  }
}

TEST_CASE("isomorphism agrees with brute force") {
  std::mt19937_64 rng(31);
  std::size_t     yes = 0, no = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto const dim = static_cast<std::size_t>(1 + trial % 2);
    auto const X   = random_complex(rng, 6, 5, dim);
    auto const Y   = random_complex(rng, 6, 5, dim);
    bool const want = brute_isomorphic(X, Y);
    auto const got  = are_isomorphic(X, Y);
    CHECK(got.has_value() == want);
    if (got) {
      CHECK(relabel(X, *got) == Y);
    }
    (want ? yes : no) += 1;
  }
  CHECK(yes > 10);
  CHECK(no > 10);
}

TEST_CASE("text form") {
  CHECK(to_string(Face{"p1", "p2"}) == "{p1,p2}");
  CHECK(to_string(Face{}) == "{}");
  CHECK(to_string(SimplicialComplex::void_complex()) == "VOID");
  CHECK(to_string(SimplicialComplex::empty_complex()) == "[{}]");
  CHECK(to_string(make({{"p2"}, {"p1"}})) == "[{p1} {p2}]");
}
