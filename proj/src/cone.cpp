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

#include "coxcones/cone.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include <gmpxx.h>

namespace coxcones {

namespace {

using int128 = __int128;

int128 cross(const DivisorClass& u, const DivisorClass& v) {
  return static_cast<int128>(u[0]) * v[1] - static_cast<int128>(u[1]) * v[0];
}

int128 dot(const DivisorClass& u, const DivisorClass& v) {
  return static_cast<int128>(u[0]) * v[0] + static_cast<int128>(u[1]) * v[1];
}

void check_rank(const Cone& c, const DivisorClass& v) {
  if (static_cast<int>(v.size()) != c.rank) throw ConeError("divisor class rank mismatch");
}

// exact feasibility of sum c_j r_j = v, c >= 0, by phase-1 simplex with
// Bland's rule (rationals, so no cycling and no tolerance)
bool nonneg_combination_exists(const std::vector<DivisorClass>& rays, const DivisorClass& v) {
  int rows = static_cast<int>(v.size());
  int k = static_cast<int>(rays.size());
  int cols = k + rows;  // ray coefficients + artificials
  // tableau: rows x (cols + 1), last column = rhs; artificial basis start
  std::vector<std::vector<mpq_class>> t(rows, std::vector<mpq_class>(cols + 1, 0));
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) {
    long long rhs = v[i];
    int sign = rhs < 0 ? -1 : 1;
    for (int j = 0; j < k; ++j) t[i][j] = static_cast<long>(sign * rays[j][i]);
    t[i][k + i] = 1;
    t[i][cols] = static_cast<long>(sign * rhs);
    basis[i] = k + i;
  }
  // objective: minimize sum of artificials; reduced costs via summing rows
  auto reduced_cost = [&](int j) {
    mpq_class c = 0;
    for (int i = 0; i < rows; ++i)
      if (basis[i] >= k) c -= t[i][j];
    if (j >= k) c += 1;
    return c;
  };
  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      if (reduced_cost(j) < 0) {
        enter = j;  // Bland: smallest index
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    mpq_class best;
    for (int i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      mpq_class ratio = t[i][cols] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) return false;  // unbounded below cannot happen; defensive
    mpq_class piv = t[leave][enter];
    for (int j = 0; j <= cols; ++j) t[leave][j] /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      mpq_class f = t[i][enter];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  mpq_class objective = 0;
  for (int i = 0; i < rows; ++i)
    if (basis[i] >= k) objective += t[i][cols];
  return objective == 0;
}

bool is_zero_vec(const DivisorClass& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

}  // namespace

DivisorClass primitive(DivisorClass v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) throw ConeError("the zero vector spans no ray");
  for (long long& x : v) x /= g;
  return v;
}

Cone cone_from_rays(int rank, const std::vector<DivisorClass>& rays) {
  if (rays.empty()) throw ConeError("a cone needs at least one ray");
  std::vector<DivisorClass> prim;
  for (const auto& r : rays) {
    if (static_cast<int>(r.size()) != rank) throw ConeError("ray rank mismatch");
    DivisorClass p = primitive(r);
    if (std::find(prim.begin(), prim.end(), p) == prim.end()) prim.push_back(p);
  }

  Cone c;
  c.rank = rank;

  if (prim.size() == 1) {
    c.rays = prim;
    c.open_ray = {false};
    return c;
  }

  if (rank == 2) {
    // find boundary rays u, v with every ray in the sector [u, v], sector < pi
    const DivisorClass* u = nullptr;
    const DivisorClass* v = nullptr;
    for (const auto& cand : prim) {
      bool all_ccw = true, all_cw = true;
      for (const auto& w : prim) {
        int128 cr = cross(cand, w);
        if (cr < 0) all_ccw = false;
        if (cr > 0) all_cw = false;
        if (cr == 0 && dot(cand, w) < 0) {  // opposite rays
          all_ccw = false;
          all_cw = false;
        }
      }
      if (all_ccw && !u) u = &cand;
      if (all_cw && !v) v = &cand;
    }
    if (!u || !v || cross(*u, *v) <= 0)
      throw ConeError("rays do not span a strictly convex 2d cone");
    c.rays = {*u, *v};
    c.open_ray = {false, false};
    return c;
  }

  // rank != 2: strict convexity means no generator's negative lies in the cone
  std::sort(prim.begin(), prim.end());
  for (const auto& r : prim) {
    DivisorClass neg(r.size());
    for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    if (nonneg_combination_exists(prim, neg))
      throw ConeError("rays do not span a strictly convex cone");
  }
  c.rays = prim;
  c.open_ray.assign(prim.size(), false);
  // drop rays inside the cone of the others; what survives is the extremal set
  for (size_t i = 0; i < c.rays.size() && c.rays.size() > 1;) {
    std::vector<DivisorClass> rest = c.rays;
    rest.erase(rest.begin() + i);
    if (nonneg_combination_exists(rest, c.rays[i])) {
      c.rays.erase(c.rays.begin() + i);
      c.open_ray.pop_back();
    } else {
      ++i;
    }
  }
  return c;
}

bool cone_contains(const Cone& c, const DivisorClass& v) {
  check_rank(c, v);
  if (is_zero_vec(v)) return true;

  if (c.rank == 2) {
    if (c.rays.size() == 1) {
      const auto& r = c.rays[0];
      return cross(r, v) == 0 && dot(r, v) > 0;
    }
    const auto& a = c.rays[0];
    const auto& b = c.rays[1];
    // v = s*a + t*b with s,t >= 0  <=>  cross(a,v) and cross(v,b) both >= 0
    return cross(a, v) >= 0 && cross(v, b) >= 0;
  }

  // general rank: exact nonnegative-combination feasibility
  return nonneg_combination_exists(c.rays, v);
}

Cone cone_union_2d(const Cone& a, const Cone& b) {
  if (a.rank != 2 || b.rank != 2) throw ConeError("cone_union_2d needs rank 2");
  if (!a.closed() || !b.closed()) throw ConeError("cone_union_2d expects closed cones");
  bool connected = false;
  for (const auto& r : a.rays)
    if (cone_contains(b, r)) connected = true;
  for (const auto& r : b.rays)
    if (cone_contains(a, r)) connected = true;
  if (!connected) throw ConeError("union is disconnected");
  std::vector<DivisorClass> all = a.rays;
  all.insert(all.end(), b.rays.begin(), b.rays.end());
  Cone hull = cone_from_rays(2, all);  // throws when not strictly convex
  return hull;
}

Cone dual_2d(const Cone& c) {
  if (c.rank != 2 || c.rays.size() != 2) throw ConeError("dual_2d needs a full-dimensional rank-2 cone");
  const auto& g1 = c.rays[0];
  const auto& g2 = c.rays[1];
  DivisorClass w1 = {g2[1], -g2[0]};   // orthogonal to g2, nonnegative on g1
  DivisorClass w2 = {-g1[1], g1[0]};   // orthogonal to g1, nonnegative on g2
  return cone_from_rays(2, {w1, w2});
}

bool cone_equal(const Cone& a, const Cone& b) {
  return a.rank == b.rank && a.rays == b.rays && a.open_ray == b.open_ray;
}

LatticeMap LatticeMap::identity(int rank) {
  LatticeMap id;
  id.rank = rank;
  id.m.assign(rank, std::vector<long long>(rank, 0));
  for (int i = 0; i < rank; ++i) id.m[i][i] = 1;
  return id;
}

DivisorClass LatticeMap::apply(const DivisorClass& v) const {
  if (static_cast<int>(v.size()) != rank) throw ConeError("lattice map rank mismatch");
  DivisorClass r(rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) r[i] += m[i][j] * v[j];
  return r;
}

LatticeMap LatticeMap::compose(const LatticeMap& o) const {
  if (rank != o.rank) throw ConeError("lattice map rank mismatch");
  LatticeMap r;
  r.rank = rank;
  r.m.assign(rank, std::vector<long long>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int k = 0; k < rank; ++k)
      for (int j = 0; j < rank; ++j) r.m[i][j] += m[i][k] * o.m[k][j];
  return r;
}

long long LatticeMap::det() const {
  // fraction-free expansion; ranks here are tiny
  std::vector<std::vector<long long>> a = m;
  std::function<long long(std::vector<int>)> rec = [&](std::vector<int> cols) -> long long {
    int k = static_cast<int>(cols.size());
    if (k == 0) return 1;
    int r = rank - k;
    long long acc = 0;
    for (int idx = 0; idx < k; ++idx) {
      long long e = a[r][cols[idx]];
      if (e == 0) continue;
      std::vector<int> rest;
      for (int t = 0; t < k; ++t)
        if (t != idx) rest.push_back(cols[t]);
      long long sub = rec(rest);
      acc += ((idx % 2 == 0) ? 1 : -1) * e * sub;
    }
    return acc;
  };
  std::vector<int> cols(rank);
  for (int i = 0; i < rank; ++i) cols[i] = i;
  return rec(cols);
}

bool LatticeMap::is_identity() const {
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

Cone apply_map(const LatticeMap& map, const Cone& c) {
  if (map.rank != c.rank) throw ConeError("lattice map rank mismatch");
  if (!c.closed()) throw ConeError("apply_map expects a closed cone");
  std::vector<DivisorClass> imgs;
  imgs.reserve(c.rays.size());
  for (const auto& r : c.rays) imgs.push_back(map.apply(r));
  return cone_from_rays(c.rank, imgs);
}

std::vector<Cone> orbit_chambers(const std::vector<LatticeMap>& gens, const Cone& seed, int max_word_len) {
  for (const auto& g : gens) {
    if (!g.is_involution()) throw ConeError("orbit generators must be involutions");
    long long d = g.det();
    if (d != 1 && d != -1) throw ConeError("orbit generators must have determinant +-1");
  }
  auto key = [](const Cone& c) {
    std::string s;
    for (const auto& r : c.rays) {
      for (long long x : r) s += std::to_string(x) + ",";
      s += ";";
    }
    return s;
  };
  std::vector<Cone> out = {seed};
  std::set<std::string> seen = {key(seed)};
  std::vector<Cone> frontier = {seed};
  for (int len = 1; len <= max_word_len; ++len) {
    std::vector<Cone> next;
    for (const Cone& c : frontier) {
      for (const auto& g : gens) {
        Cone img = apply_map(g, c);
        if (seen.insert(key(img)).second) {
          out.push_back(img);
          next.push_back(img);
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return out;
}

std::string cone_str(const Cone& c) {
  std::string s = "cone[";
  for (size_t i = 0; i < c.rays.size(); ++i) {
    if (i) s += ", ";
    s += "(";
    for (size_t j = 0; j < c.rays[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(c.rays[i][j]);
    }
    s += ")";
    if (c.open_ray[i]) s += "°";
  }
  return s + "]";
}

nlohmann::ordered_json cone_to_json(const Cone& c) {
  nlohmann::ordered_json j;
  j["rays"] = c.rays;
  j["open_rays"] = c.open_ray;
  return j;
}

Cone cone_from_json(const nlohmann::json& j) {
  Cone c;
  c.rays = j.at("rays").get<std::vector<DivisorClass>>();
  if (c.rays.empty()) throw ConeError("cone JSON without rays");
  c.rank = static_cast<int>(c.rays.front().size());
  if (j.contains("open_rays"))
    c.open_ray = j.at("open_rays").get<std::vector<bool>>();
  else
    c.open_ray.assign(c.rays.size(), false);
  if (c.open_ray.size() != c.rays.size()) throw ConeError("open_rays length mismatch");
  return c;
}

}  // namespace coxcones
