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

// Wall-time comparison of the serial reference kernels against the OpenMP
// ones.  Both must produce identical results; the parallel tests assert
// that, this binary only reports the speed.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "coxcones/classify.hpp"
#include "coxcones/cohomology.hpp"
#include "coxcones/sampling.hpp"

using namespace coxcones;

namespace {

template <typename F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-28s %10.3fs %10.3fs %8.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without openmp; both columns run the serial kernel\n");
#endif
  std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    Hypersurface x = Hypersurface::diagonal_fixture(3, 2, 4, 10007);
    SampleOptions opt;
    opt.count = 3000;
    std::vector<ProjectivePoint> a, b;
    double ts = seconds([&] {
      opt.exec = Exec::Serial;
      a = sample_points(x, opt);
    });
    double tp = seconds([&] {
      opt.exec = Exec::Parallel;
      b = sample_points(x, opt);
    });
    row("point sampling (3,2,4)", ts, tp);
    if (!(a.size() == b.size())) std::printf("  MISMATCH in sample counts\n");
  }

  {
    Hypersurface x;
    x.ambient = Ambient{{1, 4}};
    x.multidegree = {3, 2};
    std::vector<HilbertCell> a, b;
    double ts = seconds([&] { a = hilbert_table(x, -40, 120, 0, 120, Exec::Serial); });
    double tp = seconds([&] { b = hilbert_table(x, -40, 120, 0, 120, Exec::Parallel); });
    row("hilbert table 161x121", ts, tp);
    if (a.size() != b.size()) std::printf("  MISMATCH in table sizes\n");
  }

  {
    std::vector<GridCell> a, b;
    double ts = seconds([&] {
      for (int rep = 0; rep < 40; ++rep) a = mds_bidegree_region(4, 24, 24, Level::VeryGeneral, Exec::Serial);
    });
    double tp = seconds([&] {
      for (int rep = 0; rep < 40; ++rep) b = mds_bidegree_region(4, 24, 24, Level::VeryGeneral, Exec::Parallel);
    });
    row("bidegree grid 24x24 x40", ts, tp);
    if (a.size() != b.size()) std::printf("  MISMATCH in grid sizes\n");
  }

  return 0;
}
