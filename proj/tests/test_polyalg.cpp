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

#include "coxcones/hypersurface.hpp"
#include "coxcones/poly_matrix.hpp"
#include "coxcones/polynomial.hpp"
#include "coxcones/sampling.hpp"

using namespace coxcones;

namespace {

constexpr std::uint32_t kP = 10007;

Polynomial random_poly(const Ctx& ctx, std::uint32_t field, SplitMix64& rng, int terms, int max_exp) {
  Polynomial p(ctx, field);
  for (int t = 0; t < terms; ++t) {
    Monomial m = Monomial::one(ctx->var_count());
    for (int v = 0; v < ctx->var_count(); ++v) m.exp[v] = static_cast<int>(rng.below(max_exp + 1));
    Scalar c = field ? Scalar::residue(static_cast<long long>(rng.below(field)), field)
                     : Scalar(static_cast<long>(rng.below(19)) - 9);
    p.add_term(m, c);
  }
  return p;
}

std::vector<Scalar> random_point(int nvars, std::uint32_t field, SplitMix64& rng) {
  std::vector<Scalar> pt;
  for (int v = 0; v < nvars; ++v) pt.push_back(Scalar::residue(static_cast<long long>(rng.below(field)), field));
  return pt;
}

}  // namespace

TEST_CASE("scalar arithmetic over Q and F_p") {
  Scalar a(mpq_class(1, 3));
  Scalar b(mpq_class(2, 5));
  CHECK((a + b).str() == "11/15");
  CHECK((a * b).str() == "2/15");
  CHECK((a / b).str() == "5/6");
  CHECK((-a).str() == "-1/3");

  Scalar r = Scalar::residue(-1, 7);
  CHECK(r.str() == "6");
  CHECK((r * r).str() == "1");
  CHECK((Scalar::residue(3, 7).inverse() * Scalar::residue(3, 7)).is_one());
  CHECK_THROWS_AS(Scalar::residue(0, 7).inverse(), FieldError);
  CHECK_THROWS_AS(a + r, FieldError);
}

TEST_CASE("monomial product and multidegree") {
  Ctx ctx = VarContext::product({1, 3});
  Polynomial x0 = Polynomial::variable(ctx, "x0");
  Polynomial x1 = Polynomial::variable(ctx, "x1");
  CHECK((x0 * x1).str() == "x0*x1");

  Polynomial p = Polynomial::parse(ctx, "x0 + x1");
  Polynomial q = Polynomial::parse(ctx, "x0 - x1");
  CHECK((p * q) == Polynomial::parse(ctx, "x0^2 - x1^2"));

  Polynomial h = Polynomial::parse(ctx, "x0^2*y1^3");
  REQUIRE(h.multidegree());
  CHECK(*h.multidegree() == std::vector<long long>{2, 3});
  CHECK_FALSE(Polynomial::parse(ctx, "x0*y0 + y0^2").multidegree());
}

TEST_CASE("z-variables carry degree (-1, e)") {
  Ctx cox = VarContext::cox_p1_pn(2, 3, 3);
  Polynomial zx = Polynomial::parse(cox, "z1*x1");
  REQUIRE(zx.multidegree());
  CHECK(*zx.multidegree() == std::vector<long long>{0, 3});
}

TEST_CASE("evaluation is a ring homomorphism") {
  Ctx ctx = VarContext::product({1, 3});
  SplitMix64 rng(42);
  for (int rep = 0; rep < 10; ++rep) {
    Polynomial p = random_poly(ctx, kP, rng, 5, 3);
    Polynomial q = random_poly(ctx, kP, rng, 5, 3);
    Polynomial pq = p * q;
    Polynomial ps = p + q;
    for (int pts = 0; pts < 50; ++pts) {
      auto v = random_point(ctx->var_count(), kP, rng);
      std::span<const Scalar> sp(v.data(), v.size());
      CHECK(pq.evaluate(sp) == p.evaluate(sp) * q.evaluate(sp));
      CHECK(ps.evaluate(sp) == p.evaluate(sp) + q.evaluate(sp));
    }
  }
}

TEST_CASE("evaluate basics") {
  Ctx ctx = VarContext::product({1, 1});  // x0,x1,y0,y1
  Polynomial p = Polynomial::parse(ctx, "x0^2 + x1^2");
  std::vector<Scalar> pt = {Scalar(1L), Scalar(2L), Scalar(0L), Scalar(0L)};
  CHECK(p.evaluate(std::span<const Scalar>(pt.data(), pt.size())) == Scalar(5L));

  Polynomial with_const = Polynomial::parse(ctx, "x0*y0 + 7");
  std::vector<Scalar> zero(4, Scalar(0L));
  CHECK(with_const.evaluate(std::span<const Scalar>(zero.data(), zero.size())) == Scalar(7L));
  std::vector<Scalar> shortpt(3, Scalar(0L));
  CHECK_THROWS_AS(with_const.evaluate(std::span<const Scalar>(shortpt.data(), shortpt.size())),
                  ContextMismatch);
}

TEST_CASE("the defining form vanishes at sampled points") {
  Hypersurface x = Hypersurface::diagonal_fixture(2, 2, 3, kP);
  SampleOptions opt;
  opt.count = 25;
  for (const auto& pt : sample_points(x, opt)) {
    auto flat = pt.flattened();
    CHECK(x.form->evaluate(std::span<const Scalar>(flat.data(), flat.size())).is_zero());
  }
}

TEST_CASE("grading soundness: deg(pq) = deg p + deg q") {
  Ctx cox = VarContext::cox_p1_pn(3, 2, 3);
  SplitMix64 rng(7);
  int checked = 0;
  for (int rep = 0; rep < 40; ++rep) {
    // random monomial times random monomial is always homogeneous
    Polynomial p = random_poly(cox, 0, rng, 1, 3);
    Polynomial q = random_poly(cox, 0, rng, 1, 3);
    if (p.is_zero() || q.is_zero()) continue;
    auto dp = p.multidegree(), dq = q.multidegree(), dpq = (p * q).multidegree();
    REQUIRE(dp);
    REQUIRE(dq);
    REQUIRE(dpq);
    for (size_t i = 0; i < dpq->size(); ++i) CHECK((*dpq)[i] == (*dp)[i] + (*dq)[i]);
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("parser round-trips with the printer") {
  Ctx ctx = VarContext::product({1, 2});
  const char* cases[] = {
      "x0^2*y1^3 - 2/3*x1^2*y0",
      "x0 + x1",
      "-x0 - 1",
      "0",
      "5",
      "y0*y1*y2",
      "1/2*x0^4 - x1*y2 + 3",
  };
  for (const char* c : cases) {
    Polynomial p = Polynomial::parse(ctx, c);
    CHECK(Polynomial::parse(ctx, p.str()) == p);
  }

  SplitMix64 rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    Polynomial p = random_poly(ctx, 0, rng, 6, 4);
    CHECK(Polynomial::parse(ctx, p.str()) == p);
    Polynomial q = random_poly(ctx, kP, rng, 6, 4);
    CHECK(Polynomial::parse(ctx, q.str(), kP) == q);
  }

  CHECK_THROWS_AS(Polynomial::parse(ctx, "x9"), ParseError);
  CHECK_THROWS_AS(Polynomial::parse(ctx, "x0 + + "), ParseError);
  CHECK_THROWS_AS(Polynomial::parse(ctx, ""), ParseError);
  CHECK_THROWS_AS(Polynomial::parse(ctx, "1/0*x0"), ParseError);
  CHECK_THROWS_AS(Polynomial::parse(ctx, "1/0*x0", kP), ParseError);
  // implicit '*' and mixed coefficient placement
  CHECK(Polynomial::parse(ctx, "2x0y1") == Polynomial::parse(ctx, "2*x0*y1"));
}

TEST_CASE("poly_det 2x2 and identity") {
  Ctx ctx = VarContext::product({1, 3});
  std::uint32_t field = 0;
  PolyMatrix m(ctx, field, 2, 2);
  m.at(0, 0) = Polynomial::parse(ctx, "x1");
  m.at(0, 1) = Polynomial::parse(ctx, "y0^2");         // f0
  m.at(1, 0) = Polynomial::parse(ctx, "-x0");
  m.at(1, 1) = Polynomial::parse(ctx, "y1^2");         // f1
  CHECK(poly_det(m) == Polynomial::parse(ctx, "x0*y0^2 + x1*y1^2"));

  PolyMatrix id(ctx, field, 3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = Polynomial::constant(ctx, Scalar(1L));
  CHECK(poly_det(id) == Polynomial::constant(ctx, Scalar(1L)));

  PolyMatrix bad(ctx, field, 2, 3);
  CHECK_THROWS_AS(poly_det(bad), std::invalid_argument);
}

namespace {

// independent oracle: plain Laplace expansion along the first row, no
// memoization, no shared code path with poly_det
Polynomial naive_det(const PolyMatrix& m, std::vector<int> rows, std::vector<int> cols) {
  if (rows.empty()) return Polynomial::constant(m.ctx, Scalar::in_field(1, m.field));
  Polynomial acc(m.ctx, m.field);
  for (size_t j = 0; j < cols.size(); ++j) {
    const Polynomial& e = m.at(rows[0], cols[j]);
    if (e.is_zero()) continue;
    std::vector<int> rrows(rows.begin() + 1, rows.end());
    std::vector<int> rcols;
    for (size_t t = 0; t < cols.size(); ++t)
      if (t != j) rcols.push_back(cols[t]);
    Polynomial sub = e * naive_det(m, rrows, rcols);
    if (j % 2 == 0)
      acc += sub;
    else
      acc -= sub;
  }
  return acc;
}

Polynomial naive_det(const PolyMatrix& m) {
  std::vector<int> rows(m.rows), cols(m.cols);
  for (int i = 0; i < m.rows; ++i) rows[i] = i;
  for (int i = 0; i < m.cols; ++i) cols[i] = i;
  return naive_det(m, rows, cols);
}

}  // namespace

TEST_CASE("poly_det agrees with the Laplace oracle and row swaps negate") {
  Ctx ctx = VarContext::product({1, 2});
  SplitMix64 rng(3);
  for (int rep = 0; rep < 5; ++rep) {
    int size = 2 + static_cast<int>(rng.below(3));
    PolyMatrix m(ctx, 0, size, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) m.at(i, j) = random_poly(ctx, 0, rng, 2, 2);
    Polynomial d = poly_det(m);
    CHECK(d == naive_det(m));

    PolyMatrix swapped = m;
    for (int j = 0; j < size; ++j) std::swap(swapped.at(0, j), swapped.at(1, j));
    CHECK(poly_det(swapped) == -d);
  }
}

TEST_CASE("transplanting between contexts") {
  Ctx yctx = VarContext::y_forms(3);
  Ctx cox = VarContext::cox_p1_pn(2, 2, 3);
  Polynomial f = Polynomial::parse(yctx, "y0^2 - y3^2");
  Polynomial g = f.transplanted(cox);
  CHECK(g.str() == "y0^2 - y3^2");
  CHECK(g.ctx() == cox);
  Polynomial zpoly = Polynomial::parse(cox, "z1");
  CHECK_THROWS_AS(zpoly.transplanted(yctx), ContextMismatch);
}
