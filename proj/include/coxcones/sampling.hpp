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

#include <cstdint>
#include <vector>

#include "coxcones/hypersurface.hpp"

namespace coxcones {

/// Execution policy for the data-parallel kernels.  Serial is the reference
/// implementation; Parallel uses OpenMP and must produce identical results.
enum class Exec { Serial, Parallel };

/// Deterministic splittable PRNG (splitmix64).
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d49bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform value in [0, bound) by rejection-free reduction (bound << 2^64).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

struct SampleOptions {
  std::uint32_t modulus = 10007;
  std::uint64_t seed = 0;
  int count = 100;          // points wanted
  int max_candidates = 100000;
  Exec exec = Exec::Serial;
};

/// Points of X(F_p) outside the locus where all slice forms vanish, found by
/// drawing y-tuples from the seed and scanning the fiber equation for x-roots.
/// Output is deterministic: candidates are processed in blocks and results
/// merged in candidate order, so both execution policies agree exactly.
std::vector<ProjectivePoint> sample_points(const Hypersurface& x, const SampleOptions& opt);

}  // namespace coxcones
