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

#include <algorithm>
#include <vector>

namespace coxcones {

/// An exponent vector over a fixed variable list.
struct Monomial {
  std::vector<int> exp;

  static Monomial one(int nvars) { return Monomial{std::vector<int>(nvars, 0)}; }

  int total() const {
    int t = 0;
    for (int e : exp) t += e;
    return t;
  }

  bool is_one() const {
    return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < exp.size(); ++i) r.exp[i] += o.exp[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (size_t i = 0; i < exp.size(); ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }

  /// Quotient o / this; caller guarantees divisibility.
  Monomial quotient_of(const Monomial& o) const {
    Monomial r = o;
    for (size_t i = 0; i < exp.size(); ++i) r.exp[i] -= exp[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < a.exp.size(); ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
  }

  bool coprime_with(const Monomial& o) const {
    for (size_t i = 0; i < exp.size(); ++i)
      if (exp[i] > 0 && o.exp[i] > 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return exp == o.exp; }
  bool operator!=(const Monomial& o) const { return exp != o.exp; }
};

/// Graded reverse lexicographic order; variables are ordered by their index
/// in the context (x-block before y-block before z-block).
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
  int ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb;
  for (size_t i = a.exp.size(); i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
  }
  return false;
}

/// Map comparator putting the grevlex-largest monomial first.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

}  // namespace coxcones
