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

#include "coxcones/cohomology.hpp"

#include <algorithm>
#include <limits>

namespace coxcones {

long long binom(long long m, long long k) {
  if (k < 0 || m < 0 || m < k) return 0;
  k = std::min(k, m - k);
  __int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (m - k + i) / i;  // exact at each step
    if (r > std::numeric_limits<long long>::max())
      throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<long long>(r);
}

mpz_class binom_poly(long long m, int k) {
  mpz_class num = 1;
  for (int i = 0; i < k; ++i) num *= mpz_class(static_cast<long>(m)) - i;
  mpz_class den = 1;
  for (int i = 2; i <= k; ++i) den *= i;
  return num / den;
}

long long h_projective_space(int dim, long long a, int i) {
  if (i == 0) return a >= 0 ? binom(a + dim, dim) : 0;
  if (i == dim) return a <= -dim - 1 ? binom(-a - 1, dim) : 0;
  return 0;
}

long long h_product(const Ambient& ambient, const DivisorClass& cls, int i) {
  if (static_cast<int>(cls.size()) != ambient.rank())
    throw GeometryError("divisor class rank does not match the ambient");
  if (i < 0) return 0;
  // convolve factor-by-factor
  std::vector<long long> acc(i + 1, 0);
  acc[0] = 1;
  for (int f = 0; f < ambient.rank(); ++f) {
    std::vector<long long> next(i + 1, 0);
    for (int used = 0; used <= i; ++used) {
      if (!acc[used]) continue;
      for (int j = 0; used + j <= i; ++j) {
        long long h = h_projective_space(ambient.dims[f], cls[f], j);
        if (h) next[used + j] += acc[used] * h;
      }
    }
    acc = std::move(next);
  }
  return acc[i];
}

mpz_class euler_char_product(int n, long long a, long long b) {
  return mpz_class(static_cast<long>(a + 1)) * binom_poly(b + n, n);
}

mpz_class euler_char_x(const Hypersurface& x, const DivisorClass& cls) {
  x.require_p1_pn();
  long long a = cls.at(0), b = cls.at(1);
  int n = x.n();
  return euler_char_product(n, a, b) - euler_char_product(n, a - x.d(), b - x.e());
}

namespace {

// Rank of the restriction map H^i(P, D - X) -> H^i(P, D) as an interval.
// In degree 0 the map is multiplication by the defining form, hence
// injective; elsewhere only the trivial bounds apply unless a side vanishes.
DimBound restriction_rank(const Hypersurface& x, const DivisorClass& cls, int i) {
  DivisorClass twisted = {cls[0] - x.d(), cls[1] - x.e()};
  long long src = h_product(x.ambient, twisted, i);
  long long dst = h_product(x.ambient, cls, i);
  if (i == 0) return {src, src};
  long long hi = std::min(src, dst);
  return {0, hi};
}

}  // namespace

DimBound h_x(const Hypersurface& x, const DivisorClass& cls, int i) {
  x.require_p1_pn();
  int dim_x = x.n();
  if (i < 0 || i > dim_x) return {0, 0};
  DivisorClass twisted = {cls[0] - x.d(), cls[1] - x.e()};
  long long here = h_product(x.ambient, cls, i);
  long long next = h_product(x.ambient, twisted, i + 1);
  DimBound r_here = restriction_rank(x, cls, i);
  DimBound r_next = restriction_rank(x, cls, i + 1);
  // h^i(X) = coker(rank r_here out of `here`) + ker(rank r_next out of `next`)
  return {here - r_here.hi + next - r_next.hi, here - r_here.lo + next - r_next.lo};
}

DimBound h0_x(const Hypersurface& x, const DivisorClass& cls) { return h_x(x, cls, 0); }

std::vector<CohomologyEntry> cohomology_table(const Hypersurface& x,
                                              const std::vector<DivisorClass>& classes) {
  std::vector<CohomologyEntry> out;
  for (const auto& cls : classes)
    for (int i = 0; i <= x.n(); ++i) out.push_back({i, cls, h_x(x, cls, i)});
  return out;
}

CoxPresentation CoxPresentation::p1_pn(int d, int e, int n) {
  CoxPresentation p;
  p.blocks = {{"x", 2, {1, 0}}, {"y", n + 1, {0, 1}}, {"z", d, {-1, e}}};
  p.relation_degrees.assign(d + 1, DivisorClass{0, e});
  return p;
}

CoxPresentation CoxPresentation::two_factor(int m, int n, long long deg_d, long long deg_e) {
  CoxPresentation p;
  p.blocks = {{"x", m + 1, {1, 0}}, {"y", n + 1, {0, 1}}};
  p.relation_degrees = {DivisorClass{deg_d, deg_e}};
  return p;
}

CoxPresentation CoxPresentation::ambient_quotient(const Ambient& ambient, const DivisorClass& multidegree) {
  static const char* letters = "xyzwvu";
  CoxPresentation p;
  for (int f = 0; f < ambient.rank(); ++f) {
    DivisorClass deg(ambient.rank(), 0);
    deg[f] = 1;
    p.blocks.push_back({std::string(1, letters[f]), ambient.dims[f] + 1, deg});
  }
  p.relation_degrees = {multidegree};
  return p;
}

long long dim_graded_piece(const CoxPresentation& pres, const DivisorClass& cls) {
  // identify the block with negative first degree entry (z-block), if any
  int zb = -1;
  for (size_t b = 0; b < pres.blocks.size(); ++b)
    if (pres.blocks[b].degree[0] < 0) {
      if (zb >= 0) throw GeometryError("at most one negatively graded block supported");
      zb = static_cast<int>(b);
    }

  auto positive_part = [&](const DivisorClass& target) -> long long {
    // product over blocks of C(t_b + size - 1, size - 1) with block totals
    // t_b determined by the target degree (each positive block hits one axis)
    __int128 ways = 1;
    std::vector<long long> remaining = target;
    for (size_t b = 0; b < pres.blocks.size(); ++b) {
      if (static_cast<int>(b) == zb) continue;
      const auto& blk = pres.blocks[b];
      int axis = -1;
      for (size_t i = 0; i < blk.degree.size(); ++i)
        if (blk.degree[i] != 0) {
          if (axis >= 0) throw GeometryError("positive blocks must be unit-graded");
          axis = static_cast<int>(i);
        }
      if (blk.degree[axis] != 1) throw GeometryError("positive blocks must be unit-graded");
      long long t = remaining[axis];
      remaining[axis] = 0;
      if (t < 0) return 0;
      ways *= binom(t + blk.count - 1, blk.count - 1);
      if (!ways) return 0;
      if (ways > std::numeric_limits<long long>::max())
        throw std::overflow_error("graded piece dimension exceeds 64 bits");
    }
    for (long long r : remaining)
      if (r != 0) return 0;
    return static_cast<long long>(ways);
  };

  if (zb < 0) return positive_part(cls);

  const auto& z = pres.blocks[zb];
  // z-degree is (-1, e); enumerate the z-block total g
  long long e = z.degree[1];
  __int128 total = 0;
  for (long long g = std::max(0LL, -cls[0]);; ++g) {
    DivisorClass rest = {cls[0] + g, cls[1] - e * g};
    if (rest[1] < 0) break;
    __int128 zways = binom(g + z.count - 1, z.count - 1);
    total += zways * positive_part(rest);
    if (total > std::numeric_limits<long long>::max())
      throw std::overflow_error("graded piece dimension exceeds 64 bits");
    if (g > 100000) throw GeometryError("graded piece enumeration runaway");
  }
  return static_cast<long long>(total);
}

long long koszul_hilbert(const CoxPresentation& pres, const DivisorClass& cls) {
  int r = static_cast<int>(pres.relation_degrees.size());
  for (const auto& rd : pres.relation_degrees)
    if (rd != pres.relation_degrees.front())
      throw GeometryError("koszul_hilbert expects equal relation degrees");
  const DivisorClass& rel = pres.relation_degrees.front();
  long long total = 0;
  for (int j = 0; j <= r; ++j) {
    DivisorClass shifted = cls;
    for (size_t i = 0; i < shifted.size(); ++i) shifted[i] -= j * rel[i];
    long long term = binom(r, j) * dim_graded_piece(pres, shifted);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

Certify vanishing_check_mumford(const Hypersurface& x, const DivisorClass& d_cls, const DivisorClass& l_cls) {
  x.require_p1_pn();
  bool is_h1 = l_cls == DivisorClass{1, 0};
  bool is_h2 = l_cls == DivisorClass{0, 1};
  if (!is_h1 && !is_h2) throw GeometryError("L must be H1 or H2");

  DimBound h0l = h0_x(x, l_cls);
  if (!h0l.exact()) return Certify::CannotCertify;
  long long m = h0l.lo;

  bool indeterminate = false;
  for (long long i = 1; i <= m - 1; ++i) {
    for (long long shift : {i, i + 1}) {
      DivisorClass cls = {d_cls[0] - shift * l_cls[0], d_cls[1] - shift * l_cls[1]};
      DimBound h = h_x(x, cls, static_cast<int>(i));
      if (h.lo > 0) return Certify::Fails;
      if (h.hi > 0) indeterminate = true;
    }
  }
  return indeterminate ? Certify::CannotCertify : Certify::Certified;
}

std::vector<HilbertCell> hilbert_table(const Hypersurface& x, long long amin, long long amax,
                                       long long bmin, long long bmax, Exec exec) {
  if (amax < amin || bmax < bmin) throw GeometryError("empty class range");
  long long na = amax - amin + 1, nb = bmax - bmin + 1;
  std::vector<HilbertCell> cells(na * nb);
  CoxPresentation pres = CoxPresentation::p1_pn(x.d(), x.e(), x.n());
  auto fill = [&](long long k) {
    long long a = amin + k / nb;
    long long b = bmin + k % nb;
    cells[k] = {a, b, h0_x(x, {a, b}), koszul_hilbert(pres, {a, b})};
  };
  long long total = na * nb;
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < total; ++k) fill(k);
  } else {
    for (long long k = 0; k < total; ++k) fill(k);
  }
  return cells;
}

}  // namespace coxcones
