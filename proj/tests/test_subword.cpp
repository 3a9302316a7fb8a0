#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "swc/errors.hpp"
#include "swc/subword.hpp"
#include "swc/transforms.hpp"

using namespace swc;

namespace {
  SimplicialComplex positions(std::vector<std::vector<int>> facets) {
    std::vector<Face> faces;
    for (auto const& f : facets) {
      Face face;
      for (int p : f) {
        face.push_back(position_label(static_cast<std::size_t>(p)));
      }
      faces.push_back(make_face(std::move(face)));
    }
    return SimplicialComplex::from_faces(std::move(faces));
  }
}  // namespace

TEST_CASE("position labels") {
  CHECK(position_label(1) == "p1");
  CHECK(position_labels(3) == std::vector<Label>{"p1", "p2", "p3"});
  auto const a2 = CoxeterSystem::parse("A2");
  SubwordSpec const s({1, 2}, a2.identity());
  CHECK(s.canonical_labels());
  CHECK(s.labels == position_labels(2));
  CHECK_FALSE(SubwordSpec({1, 2}, a2.identity(), {"x", "y"}).canonical_labels());
  CHECK_THROWS_AS(SubwordSpec({1, 2}, a2.identity(), {"x"}), InputError);
  CHECK_THROWS_AS(SubwordSpec({1, 2}, a2.identity(), {"x", "x"}), InputError);
}

TEST_CASE("the pentagon") {
  auto const a2 = CoxeterSystem::parse("A2");
  SubwordSpec const spec({1, 2, 1, 2, 1}, a2.longest_element());
  auto const        X = subword_complex(a2, spec);
  CHECK(X == positions({{4, 5}, {3, 4}, {2, 3}, {1, 5}, {1, 2}}));
  CHECK(X == complexes::cycle(position_labels(5)));
  CHECK(is_spherical(a2, spec));
}

TEST_CASE("the doubled pentagon") {
  auto const a2 = CoxeterSystem::parse("A2");
  SubwordSpec const spec({1, 1, 2, 1, 2, 1}, a2.longest_element());
  auto const        X = subword_complex(a2, spec);
  CHECK(X
        == positions({{2, 5, 6}, {2, 4, 5}, {2, 3, 4}, {1, 5, 6},
                      {1, 4, 5}, {1, 3, 4}, {1, 2, 6}, {1, 2, 3}}));
  CHECK(X.vertices().size() == 6);
  CHECK(is_closed_pseudomanifold(X));
  CHECK(euler_characteristic(X) == 2);
  CHECK(is_spherical(a2, spec));
}

TEST_CASE("degenerate complexes") {
  auto const a2 = CoxeterSystem::parse("A2");
  SubwordSpec const reduced({1, 2, 1}, a2.longest_element());
  CHECK(subword_complex(a2, reduced).is_empty());
  CHECK(is_spherical(a2, reduced));
  CHECK(subword_complex(a2, SubwordSpec({}, a2.identity())).is_empty());
  SubwordSpec const missing({1, 1}, a2.longest_element());
  CHECK(subword_complex(a2, missing).is_void());
  CHECK_FALSE(is_spherical(a2, missing));

  SubwordSpec const ball({1, 2, 1}, a2.element_of_word({1, 2}));
  CHECK(subword_complex(a2, ball) == positions({{3}}));
  CHECK_FALSE(is_spherical(a2, ball));
}

TEST_CASE("custom labels") {
  auto const a2 = CoxeterSystem::parse("A2");
  SubwordSpec const spec({1, 2, 1, 2, 1}, a2.longest_element(), {"a", "b", "c", "d", "e"});
  CHECK(subword_complex(a2, spec) == complexes::cycle({"a", "b", "c", "d", "e"}));
}

TEST_CASE("subword complexes agree with brute force") {
  for (char const* t : {"A2", "B2", "I2(5)", "A3"}) {
    CAPTURE(t);
    auto const sys = CoxeterSystem::parse(t);
    for (auto const& q : all_words(sys.rank(), sys.rank() == 2 ? 6 : 5)) {
      for (auto const& rho : sys.elements()) {
        SubwordSpec const spec(q, rho);
        auto const        X = subword_complex(sys, spec);
        CHECK(X == oracle::brute_subword_complex(sys, q, rho));
        if (!X.is_void()) {
          CHECK(X.is_pure());
          CHECK(X.dimension()
                == static_cast<int>(q.size()) - static_cast<int>(rho.length()) - 1);
        }
        CHECK(X.is_void() == !contains_reduced_expression(sys, q, rho));
        CHECK(X.is_empty() == (q.size() == rho.length() && sys.element_of_word(q) == rho));
      }
    }
  }
}

TEST_CASE("sphere or ball, decided by the Demazure product") {
  for (char const* t : {"A2", "B2", "I2(5)"}) {
    CAPTURE(t);
    auto const sys = CoxeterSystem::parse(t);
    for (auto const& q : all_words(2, 6)) {
      for (auto const& rho : sys.elements()) {
        SubwordSpec const spec(q, rho);
        auto const        X = subword_complex(sys, spec);
        if (X.is_void()) {
          continue;
        }
        auto const chi  = reduced_euler_characteristic(X);
        bool const pm   = is_closed_pseudomanifold(X);
        std::int64_t const sign = X.dimension() % 2 == 0 ? 1 : -1;
        if (is_spherical(sys, spec)) {
          CHECK(pm);
          CHECK(chi == sign);
        } else {
          CHECK_FALSE(pm);
          CHECK(chi == 0);
        }
      }
    }
  }
}

TEST_CASE("link_spec examples") {
  auto const a2 = CoxeterSystem::parse("A2");
  SubwordSpec const pent({1, 2, 1, 2, 1}, a2.longest_element());
  auto const        l = link_spec(a2, pent, {"p1"});
  CHECK(l.word == Word{2, 1, 2, 1});
  CHECK(l.labels == std::vector<Label>{"p2", "p3", "p4", "p5"});
  CHECK(subword_complex(a2, l) == link(subword_complex(a2, pent), {"p1"}));
  CHECK(subword_complex(a2, l) == positions({{2}, {5}}));

  auto const same = link_spec(a2, pent, {});
  CHECK(same.word == pent.word);
  CHECK(same.labels == pent.labels);

  SubwordSpec const doubled({1, 1, 2, 1, 2, 1}, a2.longest_element());
  auto const        d = link_spec(a2, doubled, {"p1"});
  CHECK(d.word == pent.word);
  CHECK(d.rho == pent.rho);
  CHECK(are_isomorphic(subword_complex(a2, d), subword_complex(a2, pent)));

  CHECK_THROWS_AS(link_spec(a2, pent, {"p1", "p3"}), InputError);
  CHECK_THROWS_AS(link_spec(a2, pent, {"p9"}), InputError);
}

TEST_CASE("links of faces are subword complexes") {
  for (char const* t : {"A2", "B2"}) {
    auto const sys = CoxeterSystem::parse(t);
    for (auto const& q : all_words(2, 5)) {
      for (auto const& rho : sys.elements()) {
        SubwordSpec const spec(q, rho);
        auto const        X = subword_complex(sys, spec);
        if (X.is_void()) {
          continue;
        }
        for (auto const& sigma : X.faces()) {
          auto const l = link_spec(sys, spec, sigma);
          CHECK(subword_complex(sys, l) == link(X, sigma));
        }
      }
    }
  }
}

TEST_CASE("cluster specs") {
  auto const a2 = CoxeterSystem::parse("A2");
  auto const c2 = cluster_spec(a2, {1, 2});
  CHECK(c2.word == Word{1, 2, 1, 2, 1});
  CHECK(c2.rho == a2.longest_element());
  CHECK(subword_complex(a2, c2) == complexes::cycle(position_labels(5)));

  auto const a3 = CoxeterSystem::parse("A3");
  auto const c3 = cluster_spec(a3, {1, 2, 3});
  CHECK(c3.word == Word{1, 2, 3, 1, 2, 3, 1, 2, 1});
  auto const X3 = subword_complex(a3, c3);
  CHECK(f_vector(X3).counts == std::vector<std::uint64_t>{1, 9, 21, 14});
  CHECK(is_spherical(a3, c3));
  CHECK(is_closed_pseudomanifold(X3));

  for (char const* t : {"B2", "B3", "I2(5)", "H3", "D4"}) {
    CAPTURE(t);
    auto const sys = CoxeterSystem::parse(t);
    Word       c(sys.rank());
    std::iota(c.begin(), c.end(), 1);
    auto const spec = cluster_spec(sys, c);
    CHECK(spec.word.size() == sys.rank() + sys.num_positive_roots());
    CHECK(is_spherical(sys, spec));
    CHECK(subword_complex(sys, spec).vertices().size() == spec.word.size());
  }
  // type B3 cluster complex: cyclohedron counts
  auto const b3 = CoxeterSystem::parse("B3");
  CHECK(f_vector(subword_complex(b3, cluster_spec(b3, {1, 2, 3}))).counts
        == std::vector<std::uint64_t>{1, 12, 30, 20});
  CHECK_THROWS_AS(cluster_spec(a2, {1, 1}), InputError);
}

TEST_CASE("multicluster specs") {
  auto const a2 = CoxeterSystem::parse("A2");
  auto const m2 = multicluster_spec(a2, {1, 2}, 2);
  CHECK(m2.word == Word{1, 2, 1, 2, 1, 2, 1});
  auto const X = subword_complex(a2, m2);
  CHECK(is_spherical(a2, m2));
  CHECK(X.vertices().size() == 7);
  CHECK(X.num_facets() == 14);
  CHECK(X.dimension() == 3);
  CHECK(is_closed_pseudomanifold(X));
  CHECK(reduced_euler_characteristic(X) == -1);
  CHECK(multicluster_spec(a2, {1, 2}, 1).word == cluster_spec(a2, {1, 2}).word);
  CHECK_THROWS_AS(multicluster_spec(a2, {1, 2}, 0), InputError);
}
