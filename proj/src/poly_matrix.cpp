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

#include "coxcones/poly_matrix.hpp"

namespace coxcones {

namespace {

// det of the submatrix on rows 0..popcount(mask)-1 and the columns in mask,
// expanding along the bottom row.
Polynomial det_rec(const PolyMatrix& m, std::uint32_t mask, std::unordered_map<std::uint32_t, Polynomial>& memo) {
  if (mask == 0) return Polynomial::constant(m.ctx, Scalar::in_field(1, m.field));
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;

  int k = __builtin_popcount(mask);
  Polynomial acc(m.ctx, m.field);
  int pos = 0;
  for (int j = 0; j < m.cols; ++j) {
    if (!(mask & (1u << j))) continue;
    const Polynomial& entry = m.at(k - 1, j);
    if (!entry.is_zero()) {
      Polynomial sub = det_rec(m, mask & ~(1u << j), memo);
      Polynomial contrib = entry * sub;
      // sign of position (k-1, pos) in the k x k submatrix
      if ((k - 1 + pos) % 2 == 0)
        acc += contrib;
      else
        acc -= contrib;
    }
    ++pos;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace

Polynomial poly_det(const PolyMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("poly_det: matrix is not square");
  if (m.rows > 10) throw std::invalid_argument("poly_det: size capped at 10");
  if (m.rows == 0) return Polynomial::constant(m.ctx, Scalar::in_field(1, m.field));
  std::unordered_map<std::uint32_t, Polynomial> memo;
  return det_rec(m, (1u << m.rows) - 1, memo);
}

}  // namespace coxcones
