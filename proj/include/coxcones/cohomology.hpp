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

#include "coxcones/hypersurface.hpp"
#include "coxcones/sampling.hpp"

namespace coxcones {

/// Counting binomial: C(m, k) with C(m, k) = 0 for m < k or m < 0.
long long binom(long long m, long long k);

/// Polynomial-extension binomial m(m-1)...(m-k+1)/k!, defined for every
/// integer m.  Kept separate from binom so Euler characteristics cannot be
/// silently mixed with dimension counts.
mpz_class binom_poly(long long m, int k);

/// dim H^i(P^N, O(a)).
long long h_projective_space(int dim, long long a, int i);

/// dim H^i of a line bundle on a product of projective spaces (Kunneth).
long long h_product(const Ambient& ambient, const DivisorClass& cls, int i);

/// chi(O_P(a,b)) on P^1 x P^n as the polynomial (a+1) C_poly(b+n, n).
mpz_class euler_char_product(int n, long long a, long long b);

/// chi(O_X(a,b)) = chi_P(a,b) - chi_P(a-d, b-e).
mpz_class euler_char_x(const Hypersurface& x, const DivisorClass& cls);

/// A cohomology dimension that may only be bounded: exact when lo == hi.
struct DimBound {
  long long lo = 0, hi = 0;
  bool exact() const { return lo == hi; }
};

/// dim H^i(X, O_X(a,b)) through the ideal-sheaf long exact sequence.  The
/// restriction maps' ranks are pinned where one side vanishes (and in degree
/// 0, where multiplication by the defining form is injective); elsewhere the
/// result is an interval.
DimBound h_x(const Hypersurface& x, const DivisorClass& cls, int i);

/// dim H^0(X, O_X(a,b)); exact whenever h^1 of the ambient bundle vanishes,
/// in particular for every a >= -1.
DimBound h0_x(const Hypersurface& x, const DivisorClass& cls);

/// One row of a cohomology table: the bound on dim H^i(X, O_X(cls)).
struct CohomologyEntry {
  int i = 0;
  DivisorClass cls;
  DimBound dim;
};

/// All h^i for 0 <= i <= dim X of every listed class.
std::vector<CohomologyEntry> cohomology_table(const Hypersurface& x,
                                              const std::vector<DivisorClass>& classes);

/// Generator and relation degrees of a Cox ring presentation.
struct CoxPresentation {
  struct Block {
    std::string name;
    int count = 0;
    DivisorClass degree;
  };
  std::vector<Block> blocks;
  std::vector<DivisorClass> relation_degrees;
  std::vector<Polynomial> relations;  // optional explicit relation polynomials

  int generator_count() const {
    int c = 0;
    for (const auto& b : blocks) c += b.count;
    return c;
  }

  /// x (1,0) x2, y (0,1) x(n+1), z (-1,e) xd with d+1 relations of degree (0,e).
  static CoxPresentation p1_pn(int d, int e, int n);
  /// x (1,0) x(m+1), y (0,1) x(n+1) with one relation of degree (d,e).
  static CoxPresentation two_factor(int m, int n, long long deg_d, long long deg_e);
  /// Coordinate ring of a product ambient modulo one relation (multidegree).
  static CoxPresentation ambient_quotient(const Ambient& ambient, const DivisorClass& multidegree);
};

/// Dimension of the graded piece of the free ring on the presentation's
/// generators.
long long dim_graded_piece(const CoxPresentation& pres, const DivisorClass& cls);

/// Hilbert function of the presented quotient via the Koszul complex of the
/// relations (valid when they form a regular sequence):
/// sum_j (-1)^j C(r, j) dim S_{cls - j * reldeg}.
long long koszul_hilbert(const CoxPresentation& pres, const DivisorClass& cls);

enum class Certify { Certified, Fails, CannotCertify };

/// Hypotheses of the multiplication-map surjectivity lemma for base-point
/// free L in {H1, H2}: H^i(X, D - iL) = H^i(X, D - (i+1)L) = 0 for
/// i = 1..h0(L)-1.  Interval entries yield CannotCertify, distinct from a
/// definite failure.
Certify vanishing_check_mumford(const Hypersurface& x, const DivisorClass& d_cls, const DivisorClass& l_cls);

struct HilbertCell {
  long long a = 0, b = 0;
  DimBound h0;
  long long koszul = 0;
};

/// h0 and Koszul Hilbert values over a rectangular class range, in row-major
/// (a, b) order.  Serial and parallel execution agree exactly.
std::vector<HilbertCell> hilbert_table(const Hypersurface& x, long long amin, long long amax,
                                       long long bmin, long long bmax, Exec exec = Exec::Serial);

}  // namespace coxcones
