#include "doctest.h"

#include "corpus.hpp"
#include "oracles.hpp"
#include "toricfan/error.hpp"
#include "toricfan/homology.hpp"

using namespace toricfan;

namespace {

LatticeVector v(std::initializer_list<long> c) { return make_vector(c); }

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);

}  // namespace

TEST_CASE("FieldSpec parsing and primality") {
  CHECK(FieldSpec::parse("q").is_rational());
  CHECK(FieldSpec::parse("Q").is_rational());
  CHECK(FieldSpec::parse("fp:3").characteristic() == 3);
  CHECK(FieldSpec::parse("fp:2").name() == "F_2");
  CHECK(kQ.name() == "Q");
  CHECK_THROWS_AS(FieldSpec::prime(4), Error);
  CHECK_THROWS_AS(FieldSpec::prime(1), Error);
  CHECK_THROWS_AS(FieldSpec::parse("fp:x"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("r"), Error);
}

TEST_CASE("reduced_cohomology examples") {
  SimplicialComplex empty(0, {});
  CHECK(empty.dim() == -1);
  CHECK(reduced_cohomology(empty, kQ).at(-1) == 1);

  SimplicialComplex point(1, {{0}});
  auto p = reduced_cohomology(point, kQ);
  for (int i = -1; i <= 0; ++i) CHECK(p.at(i) == 0);

  SimplicialComplex triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  auto t = reduced_cohomology(triangle, kQ);
  CHECK(t.at(-1) == 0);
  CHECK(t.at(0) == 0);
  CHECK(t.at(1) == 1);
}

TEST_CASE("order_complex examples") {
  Fan ray = corpus::single_ray();
  auto solo = order_complex(ray, star(ray, 1));
  CHECK(solo.dim() == -1);
  auto pt = order_complex(ray, star(ray, 0));
  CHECK(pt.dim() == 0);
  CHECK(pt.faces(0).size() == 1);

  Fan p = corpus::two_cones();
  auto cx = order_complex(p, star(p, 0));
  CHECK(cx.faces(0).size() == 5);
  CHECK(cx.faces(1).size() == 4);
  CHECK(cx.dim() == 1);
  auto h = reduced_cohomology(cx, kQ);
  CHECK(h.at(0) == 0);
  CHECK(h.at(1) == 0);
}

TEST_CASE("star_cohomology examples") {
  Fan ray = corpus::single_ray();
  auto at_ray = star_cohomology(ray, 1, kQ);
  CHECK(at_ray.low == 0);
  CHECK(at_ray.at(0) == 1);
  auto at_zero = star_cohomology(ray, 0, kQ);
  CHECK(at_zero.low == -1);
  CHECK(at_zero.at(-1) == 0);
  CHECK(at_zero.at(0) == 0);

  Fan p = corpus::two_cones();
  const ConeId outer = p.id_of(cone_of({v({2, 1})}));
  const ConeId mid = p.id_of(cone_of({v({0, 1})}));
  auto a = star_cohomology(p, outer, kQ);
  for (int i = a.low; i <= a.high(); ++i) CHECK(a.at(i) == 0);
  auto b = star_cohomology(p, mid, kQ);
  CHECK(b.at(1) == 1);
  CHECK(b.at(0) == 0);
}

TEST_CASE("local_homology_profile examples") {
  Fan p = corpus::two_cones();
  CHECK(local_homology_profile(p, p.id_of(cone_of({v({0, 1})})), kQ).at(1) == 1);
  CHECK_THROWS_AS(local_homology_profile(p, 0, kQ), Error);

  Fan h = corpus::half_plane();
  auto edge = local_homology_profile(h, h.id_of(cone_of({v({1, 0})})), kQ);
  CHECK(edge.at(1) == 0);
  CHECK(edge.at(0) == 0);

  Fan sq = corpus::square_boundary();
  for (ConeId c = 1; c < sq.size(); ++c) {
    if (sq.cone_dim(c) == 1) CHECK(local_homology_profile(sq, c, kQ).at(1) == 1);
  }
}

TEST_CASE("sparse_rank over Q and F_p") {
  std::vector<std::vector<std::pair<std::size_t, long>>> rows{{{0, 2}, {1, 4}}, {{0, 1}, {1, 2}}, {{2, 3}}};
  CHECK(sparse_rank(rows, kQ) == 2);
  CHECK(sparse_rank(rows, FieldSpec::prime(3)) == 1);
  CHECK(sparse_rank(rows, kF2) == 2);
}

TEST_CASE("property: reduced_cohomology agrees with the dense homology oracle") {
  for (const auto& e : corpus::simplicial_fans()) {
    std::vector<std::vector<std::size_t>> facets;
    std::vector<oracle::Simplex> simp;
    std::size_t n = 0;
    for (const auto& f : e.facets) {
      facets.emplace_back(f.begin(), f.end());
      simp.push_back(f);
      for (int x : f) n = std::max(n, static_cast<std::size_t>(x) + 1);
    }
    SimplicialComplex cx(n, facets);
    auto faces = oracle::downward_closure(simp);
    for (unsigned p : {0u, 2u, 3u}) {
      auto field = p == 0 ? kQ : FieldSpec::prime(p);
      auto mine = reduced_cohomology(cx, field);
      auto ref = oracle::reduced_homology(faces, p);
      CAPTURE(e.label);
      for (int i = -1; i <= cx.dim(); ++i) CHECK(mine.at(i) == ref[static_cast<std::size_t>(i + 1)]);
    }
  }
}

TEST_CASE("property: Euler consistency, shift identity, field behaviour on the corpus") {
  for (const auto& e : corpus::full()) {
    const Fan& f = e.fan;
    CAPTURE(e.label);
    auto q = cohomology_profile(f, kQ);
    auto f2 = cohomology_profile(f, kF2);
    for (ConeId c = 0; c < f.size(); ++c) {
      const auto& a = q.per_cone[c];
      const auto& b = f2.per_cone[c];
      CHECK(a.alternating_sum() == rho(f, c));
      CHECK(b.alternating_sum() == a.alternating_sum());
      for (int i = a.low; i <= a.high(); ++i) {
        CHECK(a.at(i) >= 0);
        CHECK(b.at(i) >= a.at(i));
      }
      // shift identity, including the singleton convention
      Star st = star(f, c);
      const int dc = static_cast<int>(f.cone_dim(c));
      if (st.members.size() > 1) {
        auto raw = reduced_cohomology(order_complex(f, st), kQ);
        for (int i = a.low; i <= a.high(); ++i) CHECK(a.at(i) == raw.at(i - dc));
      } else {
        CHECK(a.at(dc - 1) == 1);
      }
    }
  }
}

TEST_CASE("RP^2 cohomology depends on the characteristic") {
  Fan f = corpus::rp2();
  auto q = star_cohomology(f, 0, kQ);
  auto two = star_cohomology(f, 0, kF2);
  CHECK(q.at(1) == 0);
  CHECK(q.at(2) == 0);
  CHECK(two.at(1) == 1);
  CHECK(two.at(2) == 1);
}
