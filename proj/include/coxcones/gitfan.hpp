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

#include <array>
#include <string>
#include <vector>

#include "coxcones/cohomology.hpp"
#include "coxcones/cone.hpp"
#include "json.hpp"

namespace coxcones {

class StabilizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Z^2-grading of a polynomial ring: one weight column per variable.
struct WeightSystem {
  std::vector<std::string> names;
  std::vector<std::array<long long, 2>> cols;

  static WeightSystem standard(int d, int e, int n);
};

WeightSystem weight_system_of(const CoxPresentation& pres);

/// A squarefree monomial ideal stored by its minimal generating supports
/// (sorted variable-index lists, lexicographically ordered).
struct SquarefreeIdeal {
  std::vector<std::vector<int>> gens;

  void minimalize();
  bool contains_support(const std::vector<int>& support) const;
  std::string str(const std::vector<std::string>& names) const;
  bool operator==(const SquarefreeIdeal& o) const { return gens == o.gens; }
};

/// Intersection of two squarefree monomial ideals (pairwise support unions,
/// minimalized).
SquarefreeIdeal ideal_intersection(const SquarefreeIdeal& a, const SquarefreeIdeal& b);

/// The unstable-locus ideal of a character: radical of the ideal generated
/// by all monomials whose degree is a positive multiple of chi, enumerated
/// up to the degree bound and checked stable under doubling the bound.
SquarefreeIdeal irrelevant_ideal(const WeightSystem& w, const DivisorClass& chi, long long degree_bound);

long long default_degree_bound(const WeightSystem& w, const DivisorClass& chi);

/// One entry of the chamber decomposition: a full-dimensional chamber or the
/// wall between two chambers.  Wall entries carry the intersection of the
/// adjacent chamber ideals; see chamber_fan.
struct GitChamber {
  Cone cone;
  bool is_wall = false;
  SquarefreeIdeal irrelevant;
  std::string label;
};

/// Chambers and interior walls of the weight system, sorted
/// counterclockwise from the first ray.  Chamber ideals come from a
/// character in the chamber interior.  A wall entry's ideal is the
/// monomial-ideal intersection of its two neighbors, which describes the
/// common semistable locus reached from either side; the raw character
/// ideal at a wall is larger (interior walls also admit invariants of their
/// own), so it is exposed separately through irrelevant_ideal.
std::vector<GitChamber> chamber_fan(const WeightSystem& w);

struct IrrCodim {
  int codim = 0;
  bool at_least_3 = false;
};

/// Codimension of (x_0..x_m) cap (y_0..y_n): min(m,n) + 1, at least 3
/// exactly when m, n >= 2.
IrrCodim irr_codim(int m, int n);

nlohmann::ordered_json chamber_to_json(const GitChamber& ch, const WeightSystem& w);

}  // namespace coxcones
