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

#include <unordered_map>
#include <vector>

#include "coxcones/polynomial.hpp"

namespace coxcones {

/// A dense matrix of polynomials sharing one variable context.
struct PolyMatrix {
  Ctx ctx;
  std::uint32_t field = 0;
  int rows = 0, cols = 0;
  std::vector<Polynomial> entries;  // row-major

  PolyMatrix() = default;
  PolyMatrix(Ctx c, std::uint32_t f, int r, int cc)
      : ctx(std::move(c)), field(f), rows(r), cols(cc), entries(r * cc, Polynomial(ctx, f)) {}

  Polynomial& at(int r, int c) { return entries[r * cols + c]; }
  const Polynomial& at(int r, int c) const { return entries[r * cols + c]; }
};

/// Exact determinant by cofactor expansion memoized over column subsets;
/// requires a square matrix of size <= 10.
Polynomial poly_det(const PolyMatrix& m);

}  // namespace coxcones
