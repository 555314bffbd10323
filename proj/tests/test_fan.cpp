#include "doctest.h"

#include "corpus.hpp"
#include "toricfan/error.hpp"
#include "toricfan/fan.hpp"

#include <algorithm>
#include <set>

using namespace toricfan;

namespace {

LatticeVector v(std::initializer_list<long> c) { return make_vector(c); }

ConeId id(const Fan& f, std::initializer_list<LatticeVector> gens) {
  if (gens.size() == 0) return 0;
  return f.id_of(cone_of(gens));
}

ConeIdSet ids(std::initializer_list<ConeId> l) {
  ConeIdSet s(l);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("build_fan examples") {
  std::vector<Cone> zero{Cone::zero(2)};
  Fan z = Fan::build(zero, 2);
  CHECK(z.size() == 1);
  CHECK(z.dim() == 0);
  CHECK(z.pure());

  Fan p = corpus::two_cones();
  CHECK(p.size() == 6);
  CHECK(p.pure());
  CHECK(p.dim() == 2);
  CHECK(p.facets().size() == 2);
  CHECK(p.cone(0).is_zero());

  std::vector<Cone> ok{cone_of({v({1, 0}), v({0, 1})}), cone_of({v({1, 0}), v({0, -1})})};
  CHECK(Fan::build(ok, 2).size() == 6);

  std::vector<Cone> bad{cone_of({v({0, 1}), v({2, 1})}), cone_of({v({1, 1}), v({-2, 1})})};
  try {
    Fan::build(bad, 2);
    FAIL("expected NotAFan");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAFan);
    CHECK(std::string(e.what()).find("cone(") != std::string::npos);
  }
}

TEST_CASE("a maximal cone that is a face of another is absorbed") {
  std::vector<Cone> in{cone_of({v({1, 0}), v({0, 1})}), cone_of({v({1, 0})})};
  Fan f = Fan::build(in, 2);
  CHECK(f.facets().size() == 1);
  CHECK(f.size() == 4);
}

TEST_CASE("ids follow dimension then generators") {
  Fan p = corpus::two_cones();
  CHECK(id(p, {v({-2, 1})}) == 1);
  CHECK(id(p, {v({0, 1})}) == 2);
  CHECK(id(p, {v({2, 1})}) == 3);
  CHECK(id(p, {v({-2, 1}), v({0, 1})}) == 4);
  CHECK(id(p, {v({0, 1}), v({2, 1})}) == 5);
}

TEST_CASE("star examples") {
  std::vector<Cone> zero{Cone::zero(1)};
  Fan z = Fan::build(zero, 1);
  CHECK(star(z, 0).members == ConeIdSet{0});

  Fan p = corpus::two_cones();
  const ConeId r = id(p, {v({0, 1})});
  const ConeId c1 = id(p, {v({0, 1}), v({2, 1})});
  const ConeId c2 = id(p, {v({0, 1}), v({-2, 1})});
  CHECK(star(p, r).members == ids({r, c1, c2}));
  Star s = star_of_point(p, v({2, 1}));
  CHECK(s.members == ids({id(p, {v({2, 1})}), c1}));
  CHECK(s.base == id(p, {v({2, 1})}));
  CHECK(star(p, 0).members.size() == p.size());
  CHECK(star_of_point(p, v({0, -1})).members.empty());
}

TEST_CASE("subfan operations") {
  Fan p = corpus::two_cones();
  const ConeId r = id(p, {v({0, 1})});
  const ConeId c1 = id(p, {v({0, 1}), v({2, 1})});
  const ConeId c2 = id(p, {v({0, 1}), v({-2, 1})});
  CHECK(fan_of_cone(p, 0).ids == ConeIdSet{0});
  CHECK(subfan_intersection(fan_of_cone(p, c1), fan_of_cone(p, c2)).ids == ids({0, r}));
  CHECK(sigma_minus_star(p, r).ids == ids({0, id(p, {v({2, 1})}), id(p, {v({-2, 1})})}));
  CHECK(boundary_fan_of_cone(p, c1).ids == ids({0, r, id(p, {v({2, 1})})}));
  CHECK(subfan_union(fan_of_cone(p, c1), fan_of_cone(p, c2)) == whole_fan(p));
  CHECK_THROWS_AS(make_subfan(p, {c1}), Error);
}

TEST_CASE("boundary_subfan examples") {
  Fan h = corpus::half_plane();
  CHECK(boundary_subfan(h).ids == ids({0, id(h, {v({1, 0})}), id(h, {v({-1, 0})})}));
  CHECK(boundary_subfan(corpus::square_boundary()).empty());
  std::vector<Cone> one{cone_of({v({1, 0}), v({0, 1})})};
  Fan single = Fan::build(one, 2);
  CHECK(boundary_subfan(single).ids == ids({0, 1, 2}));
  std::vector<Cone> mixed{cone_of({v({1, 0}), v({0, 1})}), cone_of({v({-1, -1})})};
  try {
    boundary_subfan(Fan::build(mixed, 2));
    FAIL("expected NotPure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPure);
  }
}

TEST_CASE("rho and Euler examples") {
  std::vector<Cone> zero{Cone::zero(1)};
  Fan z = Fan::build(zero, 1);
  CHECK(rho(z, 0) == -1);
  CHECK(is_euler_fan(z).euler);

  Fan ray = corpus::single_ray();
  CHECK(rho(ray, 0) == 0);
  CHECK_FALSE(is_euler_fan(ray).euler);
  CHECK(is_euler_fan(ray).first_violation == ConeId{0});

  Fan p = corpus::two_cones();
  CHECK(rho(p, id(p, {v({0, 1})})) == -1);

  Fan sq = corpus::square_boundary();
  CHECK(rho(sq, 0) == -1);
  auto rep = is_euler_fan(sq);
  CHECK(rep.euler);
  for (auto x : rep.rho) CHECK(x == -1);
}

TEST_CASE("join_fan examples") {
  // join_fan embeds its base into R^{d+1} itself
  Fan base = Fan::build(std::vector<Cone>{cone_of({v({1, 0})})}, 2);
  CHECK(embed_fan(base).ambient_dim() == 3);

  Fan j0 = join_fan(v({0, 0, 1}), Subfan{{0}}, base);
  CHECK(j0.size() == 3);
  CHECK(j0.find(cone_of({v({0, 0, 1})})).has_value());

  Fan j1 = join_fan(v({0, 0, 1}), whole_fan(base), base);
  CHECK(j1.size() == 4);
  CHECK(j1.facets().size() == 1);
  CHECK(j1.cone(j1.facets()[0]) == cone_of({v({1, 0, 0}), v({0, 0, 1})}));

  Fan h = corpus::half_plane();
  Fan pi = join_fan(v({0, 0, 1}), boundary_subfan(h), h);
  CHECK(pi.facets().size() == 4);
  CHECK(pi.dim() == 2);
  CHECK(is_euler_fan(pi).euler);
}

TEST_CASE("coordinate_fan of a simplicial complex") {
  Fan f = coordinate_fan(3, {{0, 1}, {1, 2}});
  CHECK(f.size() == 6);
  CHECK(f.dim() == 2);
  CHECK_THROWS_AS(coordinate_fan(2, {{0, 2}}), Error);
}

TEST_CASE("property: fan invariants on the corpus") {
  for (const auto& e : corpus::full()) {
    const Fan& f = e.fan;
    CAPTURE(e.label);
    CHECK(f.cone(0).is_zero());
    // face closure: every face of every cone is present exactly once
    for (ConeId c = 0; c < f.size(); ++c) {
      auto fs = faces(f.cone(c));
      CHECK(fs.size() == f.faces_of(c).size());
      for (const auto& x : fs) CHECK(f.find(x).has_value());
    }
    // pairwise intersections are common faces (coordinate fans are fine by construction)
    for (ConeId a = 0; a < f.size() && !e.simplicial; ++a) {
      for (ConeId b = a + 1; b < f.size(); ++b) {
        auto x = f.find(intersect_cones(f.cone(a), f.cone(b)));
        REQUIRE(x.has_value());
        CHECK(f.is_face_of(*x, a));
        CHECK(f.is_face_of(*x, b));
      }
    }
    // pure ⇔ facets share dim
    bool same = std::all_of(f.facets().begin(), f.facets().end(),
                            [&](ConeId c) { return f.cone_dim(c) == f.dim(); });
    CHECK(f.pure() == same);
    // idempotent rebuild
    Fan again = Fan::build(f.cones(), f.ambient_dim());
    CHECK(again.cones() == f.cones());
    // star / sigma_minus_star partition, star by relint point
    for (ConeId c = 0; c < f.size(); ++c) {
      auto st = star(f, c).members;
      auto rest = sigma_minus_star(f, c).ids;
      CHECK(st.size() + rest.size() == f.size());
      ConeIdSet both;
      std::set_intersection(st.begin(), st.end(), rest.begin(), rest.end(), std::back_inserter(both));
      CHECK(both.empty());
      CHECK(is_face_closed(f, rest));
      auto pts = lattice_points(f.cone(c), BoxSpec(2), true);
      REQUIRE_FALSE(pts.empty());
      CHECK(star_of_point(f, pts.front()).members == st);
      CHECK(f.relint_cone_of(pts.front()) == c);
    }
    // fan_of_cone is injective
    std::set<ConeIdSet> images;
    for (ConeId c = 0; c < f.size(); ++c) images.insert(fan_of_cone(f, c).ids);
    CHECK(images.size() == f.size());
  }
}
