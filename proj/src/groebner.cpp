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

#include "coxcones/groebner.hpp"

#include <algorithm>
#include <set>

namespace coxcones {

namespace {

void check_degree(const Polynomial& p, const GroebnerBudget& budget) {
  if (p.total_degree() > budget.max_degree)
    throw BudgetExceeded("degree budget exceeded (" + std::to_string(budget.max_degree) + ")");
}

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * p.leading_coeff().inverse();
}

Polynomial spair(const Polynomial& f, const Polynomial& g) {
  const Monomial lcm = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Monomial mf = f.leading_monomial().quotient_of(lcm);
  Monomial mg = g.leading_monomial().quotient_of(lcm);
  Polynomial a = f.times_term(mf, f.leading_coeff().inverse());
  Polynomial b = g.times_term(mg, g.leading_coeff().inverse());
  return a - b;
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const GroebnerBudget& budget) {
  Polynomial rem(p.ctx(), p.field());
  Polynomial work = p;
  while (!work.is_zero()) {
    check_degree(work, budget);
    const Monomial& lm = work.leading_monomial();
    bool reduced = false;
    for (const Polynomial& g : basis) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lm)) {
        Monomial q = g.leading_monomial().quotient_of(lm);
        Scalar c = work.leading_coeff() / g.leading_coeff();
        work -= g.times_term(q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(lm, work.leading_coeff());
      Polynomial head(p.ctx(), p.field());
      head.add_term(lm, work.leading_coeff());
      work -= head;
    }
  }
  return rem;
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const GroebnerBudget& budget) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    check_degree(g, budget);
    basis.push_back(make_monic(g));
  }

  struct Pair {
    int i, j;
    Monomial lcm;
    int deg;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return grevlex_less(a.lcm, b.lcm);
  };

  std::vector<Pair> queue;
  auto push_pairs_with = [&](int j) {
    for (int i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
      queue.push_back({i, j, l, l.total()});
    }
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs_with(j);

  std::set<std::pair<int, int>> done;
  long processed = 0;
  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), pair_less);
    Pair pr = *it;
    queue.erase(it);
    done.insert({pr.i, pr.j});

    if (++processed > budget.max_pairs)
      throw BudgetExceeded("S-pair budget exceeded (" + std::to_string(budget.max_pairs) + ")");

    const Polynomial& f = basis[pr.i];
    const Polynomial& g = basis[pr.j];
    // coprimality criterion
    if (f.leading_monomial().coprime_with(g.leading_monomial())) continue;
    // chain criterion: some k with lm_k | lcm(i,j) and both pairs already done
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
      auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) skip = true;
    }
    if (skip) continue;

    Polynomial s = normal_form(spair(f, g), basis, budget);
    if (s.is_zero()) continue;
    check_degree(s, budget);
    basis.push_back(make_monic(s));
    push_pairs_with(static_cast<int>(basis.size()) - 1);
  }

  // minimalize: drop generators whose leading monomial is divisible by another
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (basis[j].leading_monomial().divides(basis[i].leading_monomial())) {
        if (basis[j].leading_monomial() != basis[i].leading_monomial() || j < i) redundant = true;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // reduce: tail-reduce each against the others
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(make_monic(normal_form(minimal[i], others, budget)));
  }

  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_less(b.leading_monomial(), a.leading_monomial());
  });
  return reduced;
}

int staircase_dim(const std::vector<Monomial>& leading, int nvars) {
  if (nvars > 24) throw std::invalid_argument("staircase_dim: too many variables");
  for (const Monomial& m : leading)
    if (m.is_one()) throw std::invalid_argument("staircase_dim: unit ideal");
  int best = 0;
  for (std::uint32_t sub = 0; sub < (1u << nvars); ++sub) {
    int size = __builtin_popcount(sub);
    if (size <= best) continue;
    bool clean = true;
    for (const Monomial& m : leading) {
      bool inside = true;
      for (int v = 0; v < nvars && inside; ++v)
        if (m.exp[v] > 0 && !(sub & (1u << v))) inside = false;
      if (inside) {  // support contained in the subset: monomial meets k[T]
        clean = false;
        break;
      }
    }
    if (clean) best = size;
  }
  return best;
}

int ideal_codim(const std::vector<Polynomial>& gens, int ambient_var_count, const GroebnerBudget& budget) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return 0;
  std::vector<Polynomial> gb = groebner_basis(nonzero, budget);
  std::vector<Monomial> lead;
  lead.reserve(gb.size());
  for (const auto& g : gb) lead.push_back(g.leading_monomial());
  return ambient_var_count - staircase_dim(lead, ambient_var_count);
}

RegSeqCheck is_regular_sequence(const std::vector<Polynomial>& forms, const GroebnerBudget& budget) {
  if (forms.empty()) return {true, ""};
  int nvars = forms.front().ctx()->var_count();
  if (static_cast<int>(forms.size()) > nvars)
    return {false, "more forms than variables: " + std::to_string(forms.size()) + " > " + std::to_string(nvars)};
  for (const auto& f : forms) {
    if (f.is_zero()) return {false, "zero form"};
    if (!f.multidegree()) return {false, "inhomogeneous form"};
  }
  std::vector<Polynomial> prefix;
  for (size_t i = 0; i < forms.size(); ++i) {
    prefix.push_back(forms[i]);
    int codim = ideal_codim(prefix, nvars, budget);
    if (codim != static_cast<int>(i) + 1)
      return {false, "prefix of length " + std::to_string(i + 1) + " has codimension " + std::to_string(codim)};
  }
  return {true, ""};
}

}  // namespace coxcones
