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

#include "coxcones/sampling.hpp"

namespace coxcones {

namespace {

// One candidate y-tuple: evaluate the slices, then collect every projective
// x-root of sum_i c_i x0^{d-i} x1^i.  Writes the points found for this
// candidate index; empty when the candidate is degenerate.
std::vector<ProjectivePoint> points_for_candidate(const Hypersurface& x, std::uint32_t p,
                                                  std::uint64_t seed, int candidate) {
  int d = x.d();
  int n = x.n();
  SplitMix64 rng(seed * 0x51ed27f5ULL + static_cast<std::uint64_t>(candidate) + 1);

  std::vector<Scalar> y;
  y.reserve(n + 1);
  bool nonzero = false;
  for (int i = 0; i <= n; ++i) {
    long long v = static_cast<long long>(rng.below(p));
    if (v) nonzero = true;
    y.push_back(Scalar::residue(v, p));
  }
  if (!nonzero) return {};

  std::vector<long long> c(d + 1);
  bool all_zero = true;
  for (int i = 0; i <= d; ++i) {
    c[i] = x.slices[i].evaluate(std::span<const Scalar>(y.data(), y.size())).residue_value();
    if (c[i]) all_zero = false;
  }
  if (all_zero) return {};  // indeterminacy fiber: every x-root would be excluded

  std::vector<ProjectivePoint> found;
  // roots of the fiber equation with x0 = 1: g(t) = sum c_i t^i
  for (long long t = 0; t < p; ++t) {
    long long acc = 0;
    for (int i = d; i >= 0; --i) acc = (acc * t + c[i]) % p;
    if (acc == 0)
      found.push_back(ProjectivePoint::of({{Scalar::residue(1, p), Scalar::residue(t, p)}, y}));
  }
  // the point at x0 = 0 lies on X iff c_d = 0
  if (c[d] == 0)
    found.push_back(ProjectivePoint::of({{Scalar::residue(0, p), Scalar::residue(1, p)}, y}));
  return found;
}

}  // namespace

std::vector<ProjectivePoint> sample_points(const Hypersurface& x, const SampleOptions& opt) {
  x.require_p1_pn();
  if (x.slices.empty()) throw GeometryError("sampling needs the x-slices");

  std::vector<ProjectivePoint> out;
  const int block = 64;
  for (int base = 0; base < opt.max_candidates && static_cast<int>(out.size()) < opt.count;
       base += block) {
    std::vector<std::vector<ProjectivePoint>> slot(block);
    if (opt.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (int i = 0; i < block; ++i)
        slot[i] = points_for_candidate(x, opt.modulus, opt.seed, base + i);
    } else {
      for (int i = 0; i < block; ++i)
        slot[i] = points_for_candidate(x, opt.modulus, opt.seed, base + i);
    }
    for (int i = 0; i < block; ++i)
      for (auto& pt : slot[i]) {
        if (static_cast<int>(out.size()) < opt.count) out.push_back(std::move(pt));
      }
  }
  return out;
}

}  // namespace coxcones
