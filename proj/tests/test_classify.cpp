/*
 * Copyright 2026 the coxcones authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coxcones/classify.hpp"
#include "coxcones/groebner.hpp"

using namespace coxcones;

namespace {

ClassificationReport run(std::vector<int> dims, DivisorClass deg, Level level = Level::VeryGeneral) {
  return classify(Ambient{std::move(dims)}, std::move(deg), level);
}

void check_sandwich(const ClassificationReport& r) {
  if (!r.nef || !r.mov || !r.eff) return;
  for (const auto& ray : r.nef->rays) CHECK(cone_contains(*r.mov, ray));
  for (const auto& ray : r.mov->rays) CHECK(cone_contains(*r.eff, ray));
}

}  // namespace

TEST_CASE("two large factors") {
  ClassificationReport r = run({2, 2}, {3, 3}, Level::General);
  CHECK(r.mds == MdsStatus::Yes);
  CHECK(r.case_tag == "two_large_factors");
  Cone q = cone_from_rays(2, {{1, 0}, {0, 1}});
  CHECK(cone_equal(*r.eff, q));
  CHECK(cone_equal(*r.mov, q));
  CHECK(cone_equal(*r.nef, q));
  REQUIRE(r.cox);
  CHECK(r.cox->generator_count() == 6);
  CHECK(r.cox->relation_degrees == std::vector<DivisorClass>{{3, 3}});
  check_sandwich(r);

  ClassificationReport low = run({2, 2}, {1, 1}, Level::Arbitrary);
  CHECK(low.mds == MdsStatus::Yes);  // no generality needed for this clause
}

TEST_CASE("blow-up case d = 1") {
  ClassificationReport r = run({1, 3}, {1, 2}, Level::General);
  CHECK(r.mds == MdsStatus::Yes);
  CHECK(r.case_tag == "blow_up_of_pn");
  CHECK(cone_equal(*r.eff, cone_from_rays(2, {{1, 0}, {-1, 2}})));
  CHECK(cone_equal(*r.nef, cone_from_rays(2, {{1, 0}, {0, 1}})));
  CHECK(cone_equal(*r.mov, *r.nef));
  CHECK(r.picard_rank == 2);
  REQUIRE(r.cox);
  CHECK(r.cox->generator_count() == 2 + 4 + 1);
  CHECK(r.cox->relation_degrees.size() == 2);
  check_sandwich(r);
}

TEST_CASE("small modification pair 1 < d < n") {
  ClassificationReport r = run({1, 3}, {2, 2}, Level::General);
  CHECK(r.mds == MdsStatus::Yes);
  CHECK(r.case_tag == "small_modification_pair");
  CHECK(cone_equal(*r.eff, cone_from_rays(2, {{1, 0}, {-1, 2}})));
  CHECK(cone_equal(*r.mov, *r.eff));
  CHECK(cone_equal(*r.nef, cone_from_rays(2, {{1, 0}, {0, 1}})));
  auto chambers = mov_chamber_decomposition(r);
  REQUIRE(chambers.size() == 2);
  CHECK(cone_equal(chambers[0].cone, *r.nef));
  CHECK(cone_equal(chambers[1].cone, cone_from_rays(2, {{0, 1}, {-1, 2}})));
  // union of the chambers is Mov and they meet exactly in the ray H2
  Cone u = cone_union_2d(chambers[0].cone, chambers[1].cone);
  CHECK(cone_equal(u, *r.mov));
  CHECK(chambers[0].cone.rays[1] == DivisorClass{0, 1});
  CHECK(chambers[1].cone.rays[0] == DivisorClass{0, 1});
  REQUIRE(r.cox);
  CHECK(r.cox->generator_count() == 8);
  CHECK(r.cox->relation_degrees == std::vector<DivisorClass>(3, DivisorClass{0, 2}));
  check_sandwich(r);
}

TEST_CASE("contraction case d = n") {
  ClassificationReport r = run({1, 3}, {3, 2}, Level::General);
  CHECK(r.mds == MdsStatus::Yes);
  CHECK(r.case_tag == "bpf_contraction");
  Cone c = cone_from_rays(2, {{1, 0}, {-1, 2}});
  CHECK(cone_equal(*r.eff, c));
  CHECK(cone_equal(*r.mov, c));
  CHECK(cone_equal(*r.nef, c));
  CHECK(mov_chamber_decomposition(r).size() == 1);
  check_sandwich(r);
}

TEST_CASE("projective bundle e = 1, d > n") {
  ClassificationReport r = run({1, 3}, {4, 1}, Level::General);
  CHECK(r.mds == MdsStatus::Yes);
  CHECK(r.case_tag == "projective_bundle");
  CHECK(cone_equal(*r.nef, cone_from_rays(2, {{1, 0}, {-1, 1}})));   // q = 1
  CHECK(cone_equal(*r.eff, cone_from_rays(2, {{1, 0}, {-2, 1}})));   // ceil(4/3) = 2
  CHECK(cone_equal(*r.mov, *r.nef));                                 // s = 1: divisorial wall
  check_sandwich(r);

  ClassificationReport r2 = run({1, 3}, {5, 1}, Level::General);     // q = 1, s = 2: flip
  CHECK(cone_equal(*r2.mov, *r2.eff));
  CHECK(mov_chamber_decomposition(r2).size() == 2);

  ClassificationReport r3 = run({1, 3}, {6, 1}, Level::General);     // s = 0: all equal
  CHECK(cone_equal(*r3.nef, *r3.eff));
  check_sandwich(r3);
}

TEST_CASE("non-MDS region d > n, e >= 2") {
  ClassificationReport r = run({1, 3}, {4, 2}, Level::VeryGeneral);
  CHECK(r.mds == MdsStatus::No);
  CHECK(r.case_tag == "eff_cone_not_closed");
  CHECK(cone_equal(*r.nef, cone_from_rays(2, {{1, 0}, {-2, 3}})));
  REQUIRE(r.eff);
  CHECK(r.eff->rays == r.nef->rays);
  CHECK(r.eff->open_ray == std::vector<bool>{false, true});
  CHECK(r.nef->closed());
  CHECK(r.picard_rank == 2);
  check_sandwich(r);

  // at lower generality only the open lower bound is asserted
  ClassificationReport cond = run({1, 3}, {4, 2}, Level::General);
  CHECK(cond.mds == MdsStatus::Conditional);
  CHECK_FALSE(cond.eff);
  REQUIRE(cond.eff_lower_bound);
  CHECK(cond.eff_lower_bound->rays == std::vector<DivisorClass>{{1, 0}, {-2, 3}});
  CHECK_THROWS_AS(mov_chamber_decomposition(cond), GeometryError);
}

TEST_CASE("surfaces in P^1 x P^2") {
  // d = 1: blow-up of P^2; del Pezzo for e <= 2, rank e^2 + 1
  ClassificationReport dp = run({1, 2}, {1, 2});
  CHECK(dp.mds == MdsStatus::Yes);
  CHECK(dp.picard_rank == 5);
  ClassificationReport nagata = run({1, 2}, {1, 3});
  CHECK(nagata.mds == MdsStatus::No);
  CHECK(nagata.case_tag == "surface_blow_up");
  CHECK(nagata.picard_rank == 10);

  // d = 2: double cover, always MDS
  ClassificationReport dc = run({1, 2}, {2, 4});
  CHECK(dc.mds == MdsStatus::Yes);
  CHECK(dc.case_tag == "surface_double_cover");
  CHECK(dc.picard_rank == 2);
  CHECK(cone_equal(*dc.nef, cone_from_rays(2, {{1, 0}, {-1, 4}})));
  CHECK(cone_equal(*dc.eff, *dc.nef));
  REQUIRE(dc.cox);
  CHECK(dc.cox->generator_count() == 2 + 3 + 2);
  ClassificationReport dp4 = run({1, 2}, {2, 2});
  CHECK(dp4.mds == MdsStatus::Yes);
  CHECK(dp4.picard_rank == 6);

  // e = 1: ruled surface
  ClassificationReport hirz = run({1, 2}, {5, 1});
  CHECK(hirz.mds == MdsStatus::Yes);
  CHECK(hirz.case_tag == "surface_ruled");
  CHECK(cone_equal(*hirz.nef, cone_from_rays(2, {{1, 0}, {-2, 1}})));
  CHECK(cone_equal(*hirz.eff, cone_from_rays(2, {{1, 0}, {-3, 1}})));

  // d >= 3, e >= 2: effective cone not closed
  ClassificationReport mumford = run({1, 2}, {3, 3});
  CHECK(mumford.mds == MdsStatus::No);
  CHECK(mumford.case_tag == "surface_eff_not_closed");
  CHECK(mumford.picard_rank == 2);
  // the strictly nef boundary ray 2H2 - H1 = primitive of (2e H2 - d H1)
  REQUIRE(mumford.nef);
  CHECK(mumford.nef->rays == std::vector<DivisorClass>{{1, 0}, {-1, 2}});
  CHECK(mumford.nef->closed());
  CHECK(mumford.eff->open_ray == std::vector<bool>{false, true});

  ClassificationReport r32 = run({1, 2}, {3, 2});
  CHECK(r32.mds == MdsStatus::No);
  CHECK(r32.picard_rank == 11);
  CHECK_FALSE(r32.nef);  // rank-2 cone data does not apply
}

TEST_CASE("calabi-yau products") {
  ClassificationReport cy0 = run({2, 2, 2}, {3, 3, 3}, Level::General);
  CHECK(cy0.mds == MdsStatus::Yes);
  CHECK(cy0.case_tag == "calabi_yau_ample_factors");
  CHECK(cy0.nef->rays.size() == 3);
  CHECK(cone_equal(*cy0.eff, *cy0.nef));
  REQUIRE(cy0.cox);
  CHECK(cy0.cox->generator_count() == 9);

  ClassificationReport cy1 = run({1, 2, 2}, {2, 3, 3}, Level::General);
  CHECK(cy1.mds == MdsStatus::Yes);
  CHECK(cy1.case_tag == "calabi_yau_double_cover");
  auto chambers = mov_chamber_decomposition(cy1);
  REQUIRE(chambers.size() == 2);
  CHECK(chambers[1].label == "sigma*Nef(X)");
  // eff contains both chambers
  for (const auto& ch : chambers)
    for (const auto& ray : ch.cone.rays) CHECK(cone_contains(*cy1.eff, ray));
  // sigma image of H1 is -H1 + 3H2 + 3H3
  CHECK(cone_contains(*cy1.eff, {-1, 3, 3}));
  CHECK_FALSE(cone_contains(*cy1.nef, {-1, 3, 3}));

  ClassificationReport kaw = run({1, 1, 2}, {2, 2, 3}, Level::General);
  CHECK(kaw.mds == MdsStatus::No);
  CHECK(kaw.case_tag == "calabi_yau_reflections");
  CHECK(kaw.canonical == DivisorClass{0, 0, 0});
  CHECK(kaw.nef->rays.size() == 3);
  CHECK_FALSE(kaw.eff);
  CHECK_FALSE(kaw.mov);

  // non-CY multidegree in three factors is out of the classification
  ClassificationReport other = run({1, 1, 2}, {2, 2, 4}, Level::General);
  CHECK(other.mds == MdsStatus::OutOfClassification);

  // products of P^1 factors only are also outside it
  ClassificationReport p1s = run({1, 1, 1, 1}, {2, 2, 2, 2}, Level::General);
  CHECK(p1s.mds == MdsStatus::OutOfClassification);
}

TEST_CASE("curves and level handling") {
  ClassificationReport ell = run({1, 1}, {2, 2});
  CHECK(ell.mds == MdsStatus::OutOfClassification);
  CHECK(ell.case_tag == "curve");

  // structural cases need a general member
  ClassificationReport cond = run({1, 3}, {2, 2}, Level::Arbitrary);
  CHECK(cond.mds == MdsStatus::Conditional);

  CHECK_THROWS_AS(run({1, 3}, {0, 2}), GeometryError);
  CHECK_THROWS_AS(run({1, 3}, {2, 2, 2}), GeometryError);
}

TEST_CASE("factor order is normalized for the P^1 family") {
  ClassificationReport r = run({3, 1}, {2, 2}, Level::General);
  CHECK(r.case_tag == "small_modification_pair");
  CHECK(r.ambient.dims == std::vector<int>{1, 3});
  CHECK(r.multidegree == DivisorClass{2, 2});
  CHECK(!r.notes.empty());
  CHECK(r.notes.front().find("reordered") != std::string::npos);
}

TEST_CASE("subcone lower bound") {
  Cone b1 = subcone_lower_bound(Ambient{{1, 3}}, {4, 2});
  CHECK(b1.rays == std::vector<DivisorClass>{{1, 0}, {-2, 3}});
  CHECK(b1.open_ray == std::vector<bool>{true, true});

  // (2,2,3): bound ray (-1,3) sits inside Eff = cone((1,0),(-1,2))
  Cone b2 = subcone_lower_bound(Ambient{{1, 3}}, {2, 2});
  CHECK(b2.rays[1] == DivisorClass{-1, 3});
  ClassificationReport r = run({1, 3}, {2, 2}, Level::General);
  for (const auto& ray : b2.rays) CHECK(cone_contains(*r.eff, ray));

  // d = n: bound ray is the primitive of (-d, ne), on the boundary of Eff
  Cone b3 = subcone_lower_bound(Ambient{{1, 3}}, {3, 2});
  CHECK(b3.rays[1] == primitive({-3, 6}));
  ClassificationReport r3 = run({1, 3}, {3, 2}, Level::General);
  for (const auto& ray : b3.rays) CHECK(cone_contains(*r3.eff, ray));

  // bound is inside Eff for the whole test grid; equality of closures in the
  // non-MDS region
  for (int d = 1; d <= 6; ++d)
    for (int e = 1; e <= 3; ++e)
      for (int n = 3; n <= 4; ++n) {
        ClassificationReport rep = run({1, n}, {d, e}, Level::VeryGeneral);
        Cone bound = subcone_lower_bound(Ambient{{1, n}}, {d, e});
        if (!rep.eff) continue;
        for (const auto& ray : bound.rays) CHECK(cone_contains(*rep.eff, ray));
        if (rep.case_tag == "eff_cone_not_closed") CHECK(rep.eff->rays == bound.rays);
      }
}

TEST_CASE("bidegree region: the MDS set is L-shaped") {
  auto cells = mds_bidegree_region(3, 6, 6, Level::VeryGeneral);
  REQUIRE(cells.size() == 36);
  for (const auto& c : cells) {
    bool expected_mds = (c.d <= 3) || (c.e == 1);
    CHECK((c.status == MdsStatus::Yes) == expected_mds);
    CHECK((c.status == MdsStatus::No) == !expected_mds);
  }
  // (n, n+1) is a Mori dream space, (n+1, n+1) is not
  ClassificationReport a = run({1, 3}, {3, 4});
  ClassificationReport b = run({1, 3}, {4, 4});
  CHECK(a.mds == MdsStatus::Yes);
  CHECK(b.mds == MdsStatus::No);
}

TEST_CASE("cone sandwich across a broad grid") {
  for (int n : {2, 3, 4})
    for (int d = 1; d <= 5; ++d)
      for (int e = 1; e <= 4; ++e) {
        ClassificationReport r = run({1, n}, {d, e}, Level::VeryGeneral);
        check_sandwich(r);
        if (r.mov && !r.mov_chambers.empty()) {
          // chambers tile mov: each chamber inside mov, union equals it
          Cone acc = r.mov_chambers.front().cone;
          for (size_t i = 1; i < r.mov_chambers.size(); ++i)
            acc = cone_union_2d(acc, r.mov_chambers[i].cone);
          CHECK(cone_equal(acc, Cone{r.mov->rank, r.mov->rays,
                                     std::vector<bool>(r.mov->rays.size(), false)}));
        }
      }
}

TEST_CASE("krull dimension consistency for the diagonal fixture") {
  // relation count equals codimension, so dim R(X) = rank Pic + dim X = n + 2
  Hypersurface x = Hypersurface::diagonal_fixture(2, 2, 3);
  ClassificationReport r = run({1, 3}, {2, 2}, Level::General);
  REQUIRE(r.cox);
  auto rels = cox_equations(x);
  CHECK(static_cast<int>(rels.size()) == static_cast<int>(r.cox->relation_degrees.size()));
  int nvars = r.cox->generator_count();
  int codim = ideal_codim(rels, nvars);
  CHECK(codim == static_cast<int>(rels.size()));
  CHECK(nvars - codim == 3 + 2);
}

TEST_CASE("cox descriptor degrees feed the hilbert comparison") {
  ClassificationReport r = run({1, 4}, {3, 2}, Level::General);
  CoxPresentation pres = cox_descriptor(r);
  Hypersurface x;
  x.ambient = r.ambient;
  x.multidegree = r.multidegree;
  for (long long a = -1; a <= 4; ++a)
    for (long long b = 0; b <= 5; ++b) {
      DimBound h = h0_x(x, {a, b});
      REQUIRE(h.exact());
      CHECK(h.lo == koszul_hilbert(pres, {a, b}));
    }

  ClassificationReport none = run({1, 3}, {5, 2}, Level::VeryGeneral);
  CHECK_THROWS_AS(cox_descriptor(none), GeometryError);
}

TEST_CASE("report serialization") {
  ClassificationReport r = run({1, 3}, {4, 2}, Level::VeryGeneral);
  auto j = report_to_json(r);
  CHECK(j["schema"] == 1);
  CHECK(j["mds"] == "no");
  CHECK(j["nef"]["rays"] == nlohmann::json::parse("[[1,0],[-2,3]]"));
  CHECK(j["eff"]["open_rays"] == nlohmann::json::parse("[false,true]"));
  // round trip through the documented schema
  auto parsed = nlohmann::json::parse(j.dump());
  CHECK(cone_equal(cone_from_json(parsed["eff"]), *r.eff));

  std::string text = report_to_text(r);
  CHECK(text.find("eff_cone_not_closed") != std::string::npos);
  CHECK(text.find("°") != std::string::npos);  // open-ray marker
}
