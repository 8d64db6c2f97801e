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

#include "coxcones/hypersurface.hpp"

#include <algorithm>
#include <array>

namespace coxcones {

namespace {

Scalar eval_slice(const Polynomial& slice, const std::vector<Scalar>& y) {
  return slice.evaluate(std::span<const Scalar>(y.data(), y.size()));
}

}  // namespace

Hypersurface Hypersurface::from_form(Ambient ambient, DivisorClass multidegree, Polynomial f) {
  if (static_cast<int>(multidegree.size()) != ambient.rank())
    throw GeometryError("multidegree rank does not match the ambient");
  for (long long dd : multidegree)
    if (dd < 1) throw GeometryError("multidegree entries must be >= 1");
  Hypersurface x;
  x.ambient = std::move(ambient);
  x.multidegree = std::move(multidegree);
  auto deg = f.multidegree();
  if (!deg || *deg != x.multidegree)
    throw GeometryError("defining form is not homogeneous of the declared multidegree");
  if (x.ambient.is_p1_pn()) x.slices = decompose_x(f, static_cast<int>(x.multidegree[0]));
  x.form = std::move(f);
  return x;
}

Hypersurface Hypersurface::from_slices(int e, int n, std::vector<Polynomial> slices) {
  if (slices.empty()) throw GeometryError("at least one slice required");
  int d = static_cast<int>(slices.size()) - 1;
  if (d < 1) throw GeometryError("multidegree entries must be >= 1");
  Ambient amb{{1, n}};
  Ctx prod = amb.coordinate_ctx();
  std::uint32_t field = slices.front().field();
  Polynomial f(prod, field);
  Polynomial x0 = Polynomial::variable(prod, "x0", field);
  Polynomial x1 = Polynomial::variable(prod, "x1", field);
  for (int i = 0; i <= d; ++i) {
    auto deg = slices[i].multidegree();
    if (!deg || (!slices[i].is_zero() && (*deg)[1] != e) || (deg && (*deg)[0] != 0))
      throw GeometryError("slice " + std::to_string(i) + " is not a degree-e form in y");
    Polynomial term = slices[i].transplanted(prod);
    for (int k = 0; k < d - i; ++k) term = term * x0;
    for (int k = 0; k < i; ++k) term = term * x1;
    f += term;
  }
  Hypersurface x;
  x.ambient = amb;
  x.multidegree = {d, e};
  x.form = std::move(f);
  x.slices = std::move(slices);
  return x;
}

Hypersurface Hypersurface::diagonal_fixture(int d, int e, int n, std::uint32_t field) {
  if (d > n) throw GeometryError("diagonal fixture needs d <= n");
  Ctx yctx = VarContext::y_forms(n);
  std::vector<Polynomial> slices;
  for (int i = 0; i <= d; ++i) {
    Polynomial yi = Polynomial::variable(yctx, "y" + std::to_string(i), field);
    Polynomial p = Polynomial::constant(yctx, Scalar::in_field(1, field));
    for (int k = 0; k < e; ++k) p = p * yi;
    slices.push_back(p);
  }
  return from_slices(e, n, std::move(slices));
}

std::vector<Polynomial> decompose_x(const Polynomial& f, int d) {
  const Ctx& ctx = f.ctx();
  int x0 = ctx->index_of("x0");
  int x1 = ctx->index_of("x1");
  if (x0 < 0 || x1 < 0) throw GeometryError("decompose_x needs x0, x1 in the context");
  auto deg = f.multidegree();
  if (!deg || (*deg)[0] != d) throw GeometryError("form does not have x-degree " + std::to_string(d));
  int n = ctx->var_count() - 2 - 1;  // assumes context is x0,x1,y0..yn
  Ctx yctx = VarContext::y_forms(n);
  std::vector<Polynomial> slices(d + 1, Polynomial(yctx, f.field()));
  for (const auto& [m, c] : f.terms()) {
    int i = m.exp[x1];
    Monomial ym = Monomial::one(yctx->var_count());
    for (int v = 0; v < ctx->var_count(); ++v) {
      if (v == x0 || v == x1 || !m.exp[v]) continue;
      int tv = yctx->index_of(ctx->name(v));
      if (tv < 0) throw GeometryError("unexpected variable " + ctx->name(v));
      ym.exp[tv] = m.exp[v];
    }
    slices.at(i).add_term(ym, c);
  }
  return slices;
}

PolyMatrix companion_matrix(const Hypersurface& x) {
  x.require_p1_pn();
  if (x.slices.empty()) throw GeometryError("companion matrix needs the x-slices");
  int d = x.d();
  Ctx prod = x.ambient.coordinate_ctx();
  std::uint32_t field = x.slices.front().field();
  PolyMatrix a(prod, field, d + 1, d + 1);
  Polynomial x0 = Polynomial::variable(prod, "x0", field);
  Polynomial x1 = Polynomial::variable(prod, "x1", field);
  for (int j = 0; j < d; ++j) {
    a.at(j, j) = x1;
    a.at(j + 1, j) = -x0;
  }
  for (int i = 0; i <= d; ++i) a.at(i, d) = x.slices[i].transplanted(prod);
  return a;
}

PolyMatrix matrix_b(const Hypersurface& x) {
  x.require_p1_pn();
  if (x.slices.empty()) throw GeometryError("matrix B needs the x-slices");
  int d = x.d();
  Ctx yz = VarContext::yz(d, x.e(), x.n());
  std::uint32_t field = x.slices.front().field();
  PolyMatrix b(yz, field, d + 1, 3);
  auto z = [&](int k) { return Polynomial::variable(yz, "z" + std::to_string(k), field); };
  for (int i = 0; i <= d; ++i) {
    if (i >= 1) b.at(i, 0) = -z(i);
    if (i <= d - 1) b.at(i, 1) = z(i + 1);
    b.at(i, 2) = x.slices[i].transplanted(yz);
  }
  return b;
}

std::vector<Polynomial> cox_equations(const Hypersurface& x) {
  x.require_p1_pn();
  if (x.slices.empty()) throw GeometryError("cox equations need the x-slices");
  int d = x.d();
  Ctx cox = VarContext::cox_p1_pn(d, x.e(), x.n());
  std::uint32_t field = x.slices.front().field();
  Polynomial x0 = Polynomial::variable(cox, "x0", field);
  Polynomial x1 = Polynomial::variable(cox, "x1", field);
  auto z = [&](int k) { return Polynomial::variable(cox, "z" + std::to_string(k), field); };
  std::vector<Polynomial> rels;
  for (int j = 0; j <= d; ++j) {
    Polynomial r = x.slices[j].transplanted(cox);
    if (j >= 1) r -= x0 * z(j);
    if (j <= d - 1) r += x1 * z(j + 1);
    rels.push_back(std::move(r));
  }
  return rels;
}

ProjectivePoint ProjectivePoint::of(std::vector<std::vector<Scalar>> coords) {
  ProjectivePoint p;
  p.factors = std::move(coords);
  p.normalize();
  return p;
}

void ProjectivePoint::normalize() {
  for (auto& f : factors) {
    const Scalar* lead = nullptr;
    for (const Scalar& c : f) {
      if (!c.is_zero()) {
        lead = &c;
        break;
      }
    }
    if (!lead) throw GeometryError("projective factor with all coordinates zero");
    Scalar inv = lead->inverse();
    for (Scalar& c : f) c *= inv;
  }
}

std::vector<Scalar> ProjectivePoint::flattened() const {
  std::vector<Scalar> out;
  for (const auto& f : factors) out.insert(out.end(), f.begin(), f.end());
  return out;
}

bool ProjectivePoint::operator==(const ProjectivePoint& o) const {
  if (factors.size() != o.factors.size()) return false;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].size() != o.factors[i].size()) return false;
    for (size_t j = 0; j < factors[i].size(); ++j)
      if (factors[i][j] != o.factors[i][j]) return false;
  }
  return true;
}

std::string ProjectivePoint::str() const {
  std::string s;
  for (const auto& f : factors) {
    s += "(";
    for (size_t j = 0; j < f.size(); ++j) {
      if (j) s += ":";
      s += f[j].str();
    }
    s += ")";
  }
  return s;
}

ProjectivePoint flip_forward(const Hypersurface& x, const ProjectivePoint& pt) {
  x.require_p1_pn();
  int d = x.d();
  if (pt.factors.size() != 2 || pt.factors[0].size() != 2 ||
      static_cast<int>(pt.factors[1].size()) != x.n() + 1)
    throw GeometryError("point shape does not match P^1 x P^n");

  std::vector<Scalar> flat = pt.flattened();
  if (!x.form || !x.form->evaluate(std::span<const Scalar>(flat.data(), flat.size())).is_zero())
    throw GeometryError("point does not lie on the hypersurface");

  const std::vector<Scalar>& y = pt.factors[1];
  std::vector<Scalar> fv;
  fv.reserve(d + 1);
  bool all_zero = true;
  for (const Polynomial& s : x.slices) {
    fv.push_back(eval_slice(s, y));
    if (!fv.back().is_zero()) all_zero = false;
  }
  if (all_zero) throw IndeterminacyError("all slice forms vanish at the point");

  const Scalar& x0 = pt.factors[0][0];
  const Scalar& x1 = pt.factors[0][1];
  std::vector<Scalar> z(d, Scalar::zero_like(x0));
  if (!x1.is_zero()) {
    z[0] = -fv[0] / x1;                                   // z1
    for (int j = 1; j < d; ++j) z[j] = (x0 * z[j - 1] - fv[j]) / x1;
  } else {
    z[d - 1] = fv[d] / x0;                                // z_d
    for (int j = d - 1; j >= 1; --j) z[j - 1] = (fv[j] + x1 * z[j]) / x0;
  }

  bool z_zero = std::all_of(z.begin(), z.end(), [](const Scalar& c) { return c.is_zero(); });
  if (z_zero) throw IndeterminacyError("recurrence produced the zero z-vector");
  return ProjectivePoint::of({z, y});
}

bool on_flipped_model(const Hypersurface& x, const ProjectivePoint& pt_plus) {
  x.require_p1_pn();
  int d = x.d();
  const std::vector<Scalar>& z = pt_plus.factors[0];
  const std::vector<Scalar>& y = pt_plus.factors[1];

  // evaluate the rows of B
  std::vector<std::array<Scalar, 3>> rows;
  Scalar zero = Scalar::zero_like(y[0]);
  for (int i = 0; i <= d; ++i) {
    std::array<Scalar, 3> row = {zero, zero, zero};
    if (i >= 1) row[0] = -z[i - 1];
    if (i <= d - 1) row[1] = z[i];
    row[2] = eval_slice(x.slices[i], y);
    rows.push_back(row);
  }

  int minor_size = std::min(d + 1, 3);
  // iterate over row subsets of the given size
  std::vector<int> idx(minor_size);
  for (int i = 0; i < minor_size; ++i) idx[i] = i;
  auto det3 = [&](const std::vector<int>& r, const std::vector<int>& c) {
    if (minor_size == 2) {
      return rows[r[0]][c[0]] * rows[r[1]][c[1]] - rows[r[0]][c[1]] * rows[r[1]][c[0]];
    }
    Scalar acc = zero;
    acc += rows[r[0]][0] * (rows[r[1]][1] * rows[r[2]][2] - rows[r[1]][2] * rows[r[2]][1]);
    acc -= rows[r[0]][1] * (rows[r[1]][0] * rows[r[2]][2] - rows[r[1]][2] * rows[r[2]][0]);
    acc += rows[r[0]][2] * (rows[r[1]][0] * rows[r[2]][1] - rows[r[1]][1] * rows[r[2]][0]);
    return acc;
  };
  std::vector<int> cols = {0, 1, 2};
  for (;;) {
    if (minor_size == 2) {
      // all column pairs
      for (int c0 = 0; c0 < 3; ++c0)
        for (int c1 = c0 + 1; c1 < 3; ++c1)
          if (!det3(idx, {c0, c1}).is_zero()) return false;
    } else {
      if (!det3(idx, cols).is_zero()) return false;
    }
    // next subset
    int i = minor_size - 1;
    while (i >= 0 && idx[i] == d + 1 - minor_size + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < minor_size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

ProjectivePoint flip_backward(const Hypersurface& x, const ProjectivePoint& pt_plus) {
  x.require_p1_pn();
  int d = x.d();
  if (pt_plus.factors.size() != 2 || static_cast<int>(pt_plus.factors[0].size()) != d ||
      static_cast<int>(pt_plus.factors[1].size()) != x.n() + 1)
    throw GeometryError("point shape does not match P^{d-1} x P^n");

  const std::vector<Scalar>& z = pt_plus.factors[0];
  const std::vector<Scalar>& y = pt_plus.factors[1];
  bool z_zero = std::all_of(z.begin(), z.end(), [](const Scalar& c) { return c.is_zero(); });
  if (z_zero) throw IndeterminacyError("all z-coordinates are zero");
  if (!on_flipped_model(x, pt_plus)) throw GeometryError("point does not satisfy the maximal minors of B");

  // nullspace of the evaluated (d+1) x 3 matrix
  Scalar zero = Scalar::zero_like(y[0]);
  std::vector<std::array<Scalar, 3>> m;
  for (int i = 0; i <= d; ++i) {
    std::array<Scalar, 3> row = {zero, zero, zero};
    if (i >= 1) row[0] = -z[i - 1];
    if (i <= d - 1) row[1] = z[i];
    row[2] = eval_slice(x.slices[i], y);
    m.push_back(row);
  }
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < 3; ++col) {
    int p = -1;
    for (int r = rank; r <= d; ++r)
      if (!m[r][col].is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    Scalar inv = m[rank][col].inverse();
    for (int c = col; c < 3; ++c) m[rank][c] *= inv;
    for (int r = 0; r <= d; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (int c = col; c < 3; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank != 2) throw GeometryError("kernel of B is not 1-dimensional (rank " + std::to_string(rank) + ")");
  int free_col = 3 - pivot_col[0] - pivot_col[1];
  std::vector<Scalar> null_vec(3, zero);
  null_vec[free_col] = Scalar::one_like(y[0]);
  for (int r = 0; r < 2; ++r) null_vec[pivot_col[r]] = -m[r][free_col];
  if (null_vec[2].is_zero()) throw GeometryError("kernel of B has zero last coordinate");
  Scalar scale = null_vec[2].inverse();
  std::vector<Scalar> x01 = {null_vec[0] * scale, null_vec[1] * scale};
  return ProjectivePoint::of({x01, y});
}

FlipModel flip_model(const Hypersurface& x) {
  x.require_p1_pn();
  int d = x.d();
  if (d < 2) throw GeometryError("flip model needs d >= 2");
  FlipModel fm;
  fm.source = x.ambient;
  fm.target = Ambient{{d - 1, x.n()}};
  fm.pullback.rank = 2;
  // columns: images of O(1,0) and O(0,1) on the target
  fm.pullback.m = {{-1, 0}, {x.e(), 1}};
  return fm;
}

mpz_class intersection_number(const Hypersurface& x, const std::vector<DivisorClass>& classes) {
  x.require_p1_pn();
  int n = x.n();
  if (static_cast<int>(classes.size()) != n)
    throw GeometryError("need exactly n = dim X divisor classes");
  for (const auto& c : classes)
    if (c.size() != 2) throw GeometryError("divisor class rank mismatch");
  // (sum a_i H1 + b_i H2 product) * (d H1 + e H2) against H1 H2^n = 1, H1^2 = 0
  mpz_class prod_b = 1;
  for (const auto& c : classes) prod_b *= static_cast<long>(c[1]);
  mpz_class acc = static_cast<long>(x.d()) * prod_b;
  for (int i = 0; i < n; ++i) {
    mpz_class t = static_cast<long>(x.e()) * static_cast<long>(classes[i][0]);
    for (int j = 0; j < n; ++j)
      if (j != i) t *= static_cast<long>(classes[j][1]);
    acc += t;
  }
  return acc;
}

DivisorClass canonical_class(const Ambient& ambient, const DivisorClass& multidegree) {
  if (static_cast<int>(multidegree.size()) != ambient.rank())
    throw GeometryError("multidegree rank does not match the ambient");
  DivisorClass k(ambient.rank());
  for (int i = 0; i < ambient.rank(); ++i) k[i] = multidegree[i] - ambient.dims[i] - 1;
  return k;
}

LatticeMap involution_action(const Ambient& ambient, const DivisorClass& multidegree, int factor) {
  if (factor < 0 || factor >= ambient.rank()) throw GeometryError("factor index out of range");
  if (ambient.dims[factor] != 1 || multidegree[factor] != 2)
    throw GeometryError("double-cover involution needs a P^1 factor of degree 2");
  LatticeMap s = LatticeMap::identity(ambient.rank());
  for (int j = 0; j < ambient.rank(); ++j) s.m[j][factor] = (j == factor) ? -1 : multidegree[j];
  return s;
}

nlohmann::ordered_json hypersurface_to_json(const Hypersurface& x) {
  nlohmann::ordered_json j;
  j["factors"] = x.ambient.dims;
  j["multidegree"] = x.multidegree;
  if (x.form) j["f"] = x.form->str();
  return j;
}

Hypersurface hypersurface_from_json(const nlohmann::json& j, std::uint32_t field) {
  Ambient amb{j.at("factors").get<std::vector<int>>()};
  DivisorClass md = j.at("multidegree").get<DivisorClass>();
  if (!j.contains("f")) {
    Hypersurface x;
    x.ambient = amb;
    for (long long dd : md)
      if (dd < 1) throw GeometryError("multidegree entries must be >= 1");
    if (static_cast<int>(md.size()) != amb.rank()) throw GeometryError("multidegree rank mismatch");
    x.multidegree = md;
    return x;
  }
  Polynomial f = Polynomial::parse(amb.coordinate_ctx(), j.at("f").get<std::string>(), field);
  return Hypersurface::from_form(amb, md, std::move(f));
}

nlohmann::ordered_json point_to_json(const ProjectivePoint& p, std::uint32_t field) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json coords = nlohmann::ordered_json::array();
  for (const auto& f : p.factors) {
    nlohmann::ordered_json fac = nlohmann::ordered_json::array();
    for (const auto& c : f) {
      if (field)
        fac.push_back(c.residue_value());
      else
        fac.push_back(c.str());
    }
    coords.push_back(fac);
  }
  j["coordinates"] = coords;
  j["modulus"] = field;
  return j;
}

ProjectivePoint point_from_json(const nlohmann::json& j, std::uint32_t field) {
  const nlohmann::json& coords = j.is_array() ? j : j.at("coordinates");
  std::uint32_t mod = field;
  if (!j.is_array() && j.contains("modulus")) mod = j.at("modulus").get<std::uint32_t>();
  std::vector<std::vector<Scalar>> factors;
  for (const auto& fac : coords) {
    std::vector<Scalar> f;
    for (const auto& c : fac) {
      if (c.is_number_integer()) {
        f.push_back(Scalar::in_field(c.get<long long>(), mod));
      } else {
        std::string s = c.get<std::string>();
        if (mod) {
          auto slash = s.find('/');
          if (slash == std::string::npos) {
            f.push_back(Scalar::residue(std::stoll(s), mod));
          } else {
            f.push_back(Scalar::residue(std::stoll(s.substr(0, slash)), mod) /
                        Scalar::residue(std::stoll(s.substr(slash + 1)), mod));
          }
        } else {
          mpq_class q(s);
          q.canonicalize();
          f.push_back(Scalar(q));
        }
      }
    }
    factors.push_back(std::move(f));
  }
  return ProjectivePoint::of(std::move(factors));
}

}  // namespace coxcones
