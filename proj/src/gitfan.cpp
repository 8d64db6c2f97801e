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

#include "coxcones/gitfan.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace coxcones {

namespace {

using int128 = __int128;

int128 cross2(const std::array<long long, 2>& u, const std::array<long long, 2>& v) {
  return static_cast<int128>(u[0]) * v[1] - static_cast<int128>(u[1]) * v[0];
}

std::array<long long, 2> primitive2(std::array<long long, 2> v) {
  long long g = std::gcd(v[0] < 0 ? -v[0] : v[0], v[1] < 0 ? -v[1] : v[1]);
  if (!g) throw ConeError("zero weight column");
  return {v[0] / g, v[1] / g};
}

// angular order counterclockwise starting just above the negative x-axis
bool angle_less(const std::array<long long, 2>& a, const std::array<long long, 2>& b) {
  auto half = [](const std::array<long long, 2>& v) {
    // 0: positive x-axis and upper half; 1: negative x-axis and lower half
    if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0;
    return 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross2(a, b) > 0;
}

}  // namespace

WeightSystem WeightSystem::standard(int d, int e, int n) {
  WeightSystem w;
  for (int i = 0; i < 2; ++i) {
    w.names.push_back("x" + std::to_string(i));
    w.cols.push_back({1, 0});
  }
  for (int j = 0; j <= n; ++j) {
    w.names.push_back("y" + std::to_string(j));
    w.cols.push_back({0, 1});
  }
  for (int k = 1; k <= d; ++k) {
    w.names.push_back("z" + std::to_string(k));
    w.cols.push_back({-1, e});
  }
  return w;
}

WeightSystem weight_system_of(const CoxPresentation& pres) {
  WeightSystem w;
  for (const auto& blk : pres.blocks) {
    if (blk.degree.size() != 2) throw GeometryError("weight systems are Z^2-graded");
    int first = (blk.name == "z") ? 1 : 0;
    for (int i = 0; i < blk.count; ++i) {
      w.names.push_back(blk.name + std::to_string(first + i));
      w.cols.push_back({blk.degree[0], blk.degree[1]});
    }
  }
  return w;
}

void SquarefreeIdeal::minimalize() {
  for (auto& g : gens) std::sort(g.begin(), g.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::vector<int>> keep;
  for (const auto& g : gens) {
    bool dominated = false;
    for (const auto& h : gens) {
      if (h == g) continue;
      if (std::includes(g.begin(), g.end(), h.begin(), h.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(g);
  }
  gens = std::move(keep);
}

bool SquarefreeIdeal::contains_support(const std::vector<int>& support) const {
  for (const auto& g : gens)
    if (std::includes(support.begin(), support.end(), g.begin(), g.end())) return true;
  return false;
}

std::string SquarefreeIdeal::str(const std::vector<std::string>& names) const {
  std::string s = "(";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    for (size_t j = 0; j < gens[i].size(); ++j) {
      if (j) s += "*";
      s += names.at(gens[i][j]);
    }
  }
  return s + ")";
}

SquarefreeIdeal ideal_intersection(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
  SquarefreeIdeal out;
  for (const auto& g : a.gens)
    for (const auto& h : b.gens) {
      std::vector<int> u;
      std::set_union(g.begin(), g.end(), h.begin(), h.end(), std::back_inserter(u));
      out.gens.push_back(std::move(u));
    }
  out.minimalize();
  return out;
}

namespace {

// Supports of monomials of degree k*chi for positive k within the bound.
// Weight columns are grouped by their weight vector; a monomial's minimal
// support takes one variable from each group with positive total, so the
// candidate generators are exactly the one-per-group choices.
SquarefreeIdeal enumerate_ideal(const WeightSystem& w, const DivisorClass& chi, long long degree_bound) {
  std::map<std::array<long long, 2>, std::vector<int>> groups;
  for (size_t v = 0; v < w.cols.size(); ++v) groups[w.cols[v]].push_back(static_cast<int>(v));
  std::vector<std::array<long long, 2>> gw;
  std::vector<std::vector<int>> gvars;
  for (const auto& [wt, vars] : groups) {
    gw.push_back(wt);
    gvars.push_back(vars);
  }
  int ng = static_cast<int>(gw.size());

  std::set<std::vector<int>> patterns;  // sets of group indices with positive total
  long long chi_norm = std::abs(chi[0]) + std::abs(chi[1]);
  if (chi_norm == 0) throw GeometryError("chi must be nonzero");

  for (const auto& wt : gw)
    if (wt[0] == 0 && wt[1] == 0) throw GeometryError("zero weight column");

  // enumerate group totals t with sum t_g * w_g = k * chi; the last group's
  // total is solved directly, the others are looped up to a cap
  const long long cap = 4 * degree_bound;
  std::vector<long long> totals(ng, 0);
  auto record = [&]() {
    std::vector<int> pat;
    for (int i = 0; i < ng; ++i)
      if (totals[i] > 0) pat.push_back(i);
    if (!pat.empty()) patterns.insert(pat);
  };
  std::function<void(int, long long, long long)> rec = [&](int g, long long r0, long long r1) {
    if (g == ng - 1) {
      const auto& wt = gw[g];
      long long t;
      if (wt[0] != 0) {
        if (r0 % wt[0] != 0) return;
        t = r0 / wt[0];
        if (t < 0 || t * wt[1] != r1) return;
      } else {
        if (r1 % wt[1] != 0) return;
        t = r1 / wt[1];
        if (t < 0 || r0 != 0) return;
      }
      totals[g] = t;
      record();
      totals[g] = 0;
      return;
    }
    for (long long t = 0; t <= cap; ++t) {
      totals[g] = t;
      rec(g + 1, r0 - t * gw[g][0], r1 - t * gw[g][1]);
    }
    totals[g] = 0;
  };

  for (long long k = 1; k * chi_norm <= degree_bound; ++k) rec(0, k * chi[0], k * chi[1]);

  SquarefreeIdeal ideal;
  std::function<void(const std::vector<int>&, size_t, std::vector<int>&)> expand =
      [&](const std::vector<int>& pat, size_t i, std::vector<int>& pick) {
        if (i == pat.size()) {
          ideal.gens.push_back(pick);
          return;
        }
        for (int v : gvars[pat[i]]) {
          pick.push_back(v);
          expand(pat, i + 1, pick);
          pick.pop_back();
        }
      };
  for (const auto& pat : patterns) {
    std::vector<int> pick;
    expand(pat, 0, pick);
  }
  ideal.minimalize();
  return ideal;
}

}  // namespace

long long default_degree_bound(const WeightSystem& w, const DivisorClass& chi) {
  long long mx = 1;
  for (const auto& c : w.cols) mx = std::max({mx, std::abs(c[0]), std::abs(c[1])});
  return 4 * (std::abs(chi[0]) + std::abs(chi[1])) * mx;
}

SquarefreeIdeal irrelevant_ideal(const WeightSystem& w, const DivisorClass& chi, long long degree_bound) {
  if (chi.size() != 2) throw GeometryError("chi must have rank 2");
  SquarefreeIdeal a = enumerate_ideal(w, chi, degree_bound);
  SquarefreeIdeal b = enumerate_ideal(w, chi, 2 * degree_bound);
  if (!(a == b))
    throw StabilizationError("irrelevant ideal not stabilized at degree bound " + std::to_string(degree_bound));
  return a;
}

std::vector<GitChamber> chamber_fan(const WeightSystem& w) {
  std::vector<std::array<long long, 2>> rays;
  for (const auto& c : w.cols) {
    auto p = primitive2(c);
    if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(p);
  }
  std::sort(rays.begin(), rays.end(), angle_less);
  for (size_t i = 0; i + 1 < rays.size(); ++i)
    if (cross2(rays[i], rays[i + 1]) <= 0)
      throw GeometryError("weight columns do not span a strictly convex 2d support cone");
  if (rays.size() < 2) throw GeometryError("degenerate weight system: all columns on one ray");

  std::vector<GitChamber> out;
  std::vector<std::string> labels = {"Y", "Y+", "Q2", "Q3", "Q4"};
  for (size_t i = 0; i + 1 < rays.size(); ++i) {
    GitChamber ch;
    ch.cone = cone_from_rays(2, {DivisorClass{rays[i][0], rays[i][1]}, DivisorClass{rays[i + 1][0], rays[i + 1][1]}});
    ch.is_wall = false;
    ch.label = i < labels.size() ? labels[i] : "Q" + std::to_string(i);
    DivisorClass chi = {rays[i][0] + rays[i + 1][0], rays[i][1] + rays[i + 1][1]};
    ch.irrelevant = irrelevant_ideal(w, chi, default_degree_bound(w, chi));
    out.push_back(std::move(ch));
  }
  // interleave interior walls
  std::vector<GitChamber> with_walls;
  for (size_t i = 0; i < out.size(); ++i) {
    with_walls.push_back(out[i]);
    if (i + 1 < out.size()) {
      GitChamber wall;
      wall.cone = cone_from_rays(2, {DivisorClass{rays[i + 1][0], rays[i + 1][1]}});
      wall.is_wall = true;
      wall.label = "Z";
      wall.irrelevant = ideal_intersection(out[i].irrelevant, out[i + 1].irrelevant);
      with_walls.push_back(std::move(wall));
    }
  }
  return with_walls;
}

IrrCodim irr_codim(int m, int n) {
  if (m < 1 || n < 1) throw GeometryError("irr_codim needs m, n >= 1");
  int c = std::min(m, n) + 1;
  return {c, m >= 2 && n >= 2};
}

nlohmann::ordered_json chamber_to_json(const GitChamber& ch, const WeightSystem& w) {
  nlohmann::ordered_json j;
  j["label"] = ch.label;
  j["wall"] = ch.is_wall;
  j["cone"] = cone_to_json(ch.cone);
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const auto& g : ch.irrelevant.gens) {
    std::string mono;
    for (size_t i = 0; i < g.size(); ++i) {
      if (i) mono += "*";
      mono += w.names.at(g[i]);
    }
    gens.push_back(mono);
  }
  j["irrelevant_ideal"] = gens;
  return j;
}

}  // namespace coxcones
