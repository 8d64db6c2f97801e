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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "coxcones/cone.hpp"
#include "coxcones/poly_matrix.hpp"
#include "coxcones/polynomial.hpp"
#include "json.hpp"

namespace coxcones {

class IndeterminacyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A product of projective spaces P^{d1} x ... x P^{dk}.
struct Ambient {
  std::vector<int> dims;

  int rank() const { return static_cast<int>(dims.size()); }
  int dim() const {
    int d = 0;
    for (int n : dims) d += n;
    return d;
  }
  Ctx coordinate_ctx() const { return VarContext::product(dims); }
  bool is_p1_pn() const { return dims.size() == 2 && dims[0] == 1 && dims[1] >= 1; }
};

/// A hypersurface of the given multidegree.  For P^1 x P^n the defining form
/// f = sum_i x0^{d-i} x1^i f_i(y) is carried both assembled and as its
/// x-slices f_0..f_d (forms of degree e in the y-variables).
struct Hypersurface {
  Ambient ambient;
  DivisorClass multidegree;
  std::optional<Polynomial> form;    // in ambient.coordinate_ctx()
  std::vector<Polynomial> slices;    // f_0..f_d in the y-only context

  static Hypersurface from_form(Ambient ambient, DivisorClass multidegree, Polynomial f);
  /// Assembles f from slices; multidegree becomes (slices.size()-1, e).
  static Hypersurface from_slices(int e, int n, std::vector<Polynomial> slices);
  /// The diagonal fixture f_i = y_i^e (requires d <= n).
  static Hypersurface diagonal_fixture(int d, int e, int n, std::uint32_t field = 0);

  int d() const { return require_p1_pn(), static_cast<int>(multidegree[0]); }
  int e() const { return require_p1_pn(), static_cast<int>(multidegree[1]); }
  int n() const { return require_p1_pn(), ambient.dims[1]; }
  void require_p1_pn() const {
    if (!ambient.is_p1_pn()) throw GeometryError("operation requires an ambient P^1 x P^n");
  }
};

/// x-slices of a bidegree (d,e) form: f_i = coefficient of x0^{d-i} x1^i,
/// returned in the y-only context.
std::vector<Polynomial> decompose_x(const Polynomial& f, int d);

/// The (d+1) x (d+1) matrix with x1 on the diagonal of the first d columns,
/// -x0 on the subdiagonal and (f_0,...,f_d) as last column; its determinant
/// is exactly the defining form f.
PolyMatrix companion_matrix(const Hypersurface& x);

/// The (d+1) x 3 matrix in the y,z-variables whose rows are
/// (-z_i, z_{i+1}, f_i) with z_0 = z_{d+1} = 0.
PolyMatrix matrix_b(const Hypersurface& x);

/// The d+1 relations f_0 + x1 z1, f_j - x0 z_j + x1 z_{j+1}, f_d - x0 z_d in
/// the x,y,z-context; each is homogeneous of degree (0,e).
std::vector<Polynomial> cox_equations(const Hypersurface& x);

/// A point of a product of projective spaces with exact coordinates, kept
/// normalized: the first nonzero coordinate of every factor equals 1.
struct ProjectivePoint {
  std::vector<std::vector<Scalar>> factors;

  static ProjectivePoint of(std::vector<std::vector<Scalar>> coords);
  void normalize();
  std::vector<Scalar> flattened() const;
  bool operator==(const ProjectivePoint& o) const;
  std::string str() const;
};

/// Small-modification image of a point of X under the z-recurrences.  The
/// point must lie on X; throws IndeterminacyError where all f_i vanish.
ProjectivePoint flip_forward(const Hypersurface& x, const ProjectivePoint& pt);

/// Inverse of flip_forward: the kernel of the evaluated B matrix, which must
/// be 1-dimensional with nonzero last coordinate.
ProjectivePoint flip_backward(const Hypersurface& x, const ProjectivePoint& pt_plus);

/// All maximal minors of matrix B evaluated at a (z, y) point vanish.
bool on_flipped_model(const Hypersurface& x, const ProjectivePoint& pt_plus);

/// The small modification's lattice data: target ambient P^{d-1} x P^n and
/// the pullback sending the target hyperplane classes to (eH2 - H1, H2).
struct FlipModel {
  Ambient source, target;
  LatticeMap pullback;
};
FlipModel flip_model(const Hypersurface& x);

/// Top intersection number of n divisor classes on X in P^1 x P^n, computed
/// by multilinear expansion against H1^2 = 0, H2^{n+1} = 0, H1 H2^n = 1 and
/// the hypersurface class d H1 + e H2.
mpz_class intersection_number(const Hypersurface& x, const std::vector<DivisorClass>& classes);

/// Component i is d_i - n_i - 1 (adjunction); the zero vector detects the
/// Calabi-Yau multidegree.
DivisorClass canonical_class(const Ambient& ambient, const DivisorClass& multidegree);

/// Involution on N^1 induced by the double cover along a degree-2 P^1
/// factor: H_f -> -H_f + sum_{j != f} d_j H_j, fixing the other classes.
LatticeMap involution_action(const Ambient& ambient, const DivisorClass& multidegree, int factor);

nlohmann::ordered_json hypersurface_to_json(const Hypersurface& x);
Hypersurface hypersurface_from_json(const nlohmann::json& j, std::uint32_t field = 0);
nlohmann::ordered_json point_to_json(const ProjectivePoint& p, std::uint32_t field);
ProjectivePoint point_from_json(const nlohmann::json& j, std::uint32_t field);

}  // namespace coxcones
