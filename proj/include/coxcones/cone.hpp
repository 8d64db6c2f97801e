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
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace coxcones {

class ConeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An integer divisor class in the basis (H_1, ..., H_rho).
using DivisorClass = std::vector<long long>;

/// Divide by the gcd of the entries; throws on the zero vector.
DivisorClass primitive(DivisorClass v);

/// A strictly convex rational cone given by primitive generators.  In rank 2
/// a full-dimensional cone stores exactly its two extremal rays in
/// counterclockwise order; a single ray is also a valid (1-dimensional)
/// cone.  Each ray carries an open flag for cones that are not closed along
/// that boundary; flags are bookkeeping and do not affect membership, which
/// always tests the closed hull.
struct Cone {
  int rank = 0;
  std::vector<DivisorClass> rays;
  std::vector<bool> open_ray;

  bool closed() const {
    for (bool b : open_ray)
      if (b) return false;
    return true;
  }
};

/// Canonical cone from arbitrary generating rays: primitivized, deduplicated
/// and, in rank 2, reduced to the two extremal rays in counterclockwise
/// order.  Throws when a ray is zero or the rays do not span a strictly
/// convex cone.
Cone cone_from_rays(int rank, const std::vector<DivisorClass>& rays);

/// Closed-hull membership: is v a nonnegative rational combination of the
/// generators?  Rank 2 uses cross products; higher rank an exact feasibility
/// solve.
bool cone_contains(const Cone& c, const DivisorClass& v);

/// Convex union of two rank-2 cones that overlap or share a boundary ray.
/// Throws when the union is disconnected or not strictly convex.
Cone cone_union_2d(const Cone& a, const Cone& b);

/// Dual of a full-dimensional rank-2 cone.
Cone dual_2d(const Cone& c);

bool cone_equal(const Cone& a, const Cone& b);

/// An integer linear action on divisor classes (column-vector convention).
struct LatticeMap {
  int rank = 0;
  std::vector<std::vector<long long>> m;  // m[i][j] = entry (row i, col j)

  static LatticeMap identity(int rank);
  DivisorClass apply(const DivisorClass& v) const;
  LatticeMap compose(const LatticeMap& o) const;  // this after o
  long long det() const;
  bool is_identity() const;
  bool is_involution() const { return compose(*this).is_identity(); }
};

/// Image cone under a lattice map, re-canonicalized.  Open flags must all be
/// closed (mapped cones in this library are nef chambers).
Cone apply_map(const LatticeMap& map, const Cone& c);

/// All distinct images of seed under words of length <= max_word_len in the
/// given involutions, in deterministic discovery order (seed first).
std::vector<Cone> orbit_chambers(const std::vector<LatticeMap>& gens, const Cone& seed, int max_word_len);

std::string cone_str(const Cone& c);
nlohmann::ordered_json cone_to_json(const Cone& c);
Cone cone_from_json(const nlohmann::json& j);

}  // namespace coxcones
