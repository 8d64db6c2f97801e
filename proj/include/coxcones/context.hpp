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

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxcones {

class ContextMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A contiguous block of variables sharing one name prefix and one degree
/// vector, e.g. y0..yn of degree (0,1).
struct VarBlock {
  std::string prefix;
  int count = 0;
  int first_subscript = 0;
  std::vector<long long> degree;  // length = lattice rank
};

/// The variable context of a polynomial ring: named variable blocks, each
/// carrying a degree vector in Z^rank.  Contexts are immutable and shared.
class VarContext {
 public:
  VarContext(int rank, std::vector<VarBlock> blocks) : rank_(rank), blocks_(std::move(blocks)) {
    for (const auto& b : blocks_) {
      if (static_cast<int>(b.degree.size()) != rank_)
        throw ContextMismatch("block degree length does not match lattice rank");
      for (int i = 0; i < b.count; ++i) {
        std::string nm = b.prefix + std::to_string(b.first_subscript + i);
        index_.emplace(nm, static_cast<int>(names_.size()));
        names_.push_back(std::move(nm));
        var_degree_.push_back(b.degree);
      }
    }
  }

  int rank() const { return rank_; }
  int var_count() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_.at(v); }
  const std::vector<long long>& degree(int v) const { return var_degree_.at(v); }
  const std::vector<VarBlock>& blocks() const { return blocks_; }

  int index_of(const std::string& nm) const {
    auto it = index_.find(nm);
    return it == index_.end() ? -1 : it->second;
  }

  /// First variable index of block b.
  int block_start(int b) const {
    int s = 0;
    for (int i = 0; i < b; ++i) s += blocks_[i].count;
    return s;
  }

  bool operator==(const VarContext& o) const {
    if (rank_ != o.rank_ || names_ != o.names_) return false;
    return var_degree_ == o.var_degree_;
  }

  /// Coordinate ring context of P^{d1} x ... x P^{dk}; factor blocks are
  /// named x, y, z, w, v, u in order, with unit degree vectors.
  static std::shared_ptr<const VarContext> product(const std::vector<int>& dims) {
    static const char* letters = "xyzwvu";
    if (dims.size() > 6) throw ContextMismatch("at most 6 factors supported");
    std::vector<VarBlock> blocks;
    int rank = static_cast<int>(dims.size());
    for (int f = 0; f < rank; ++f) {
      std::vector<long long> deg(rank, 0);
      deg[f] = 1;
      blocks.push_back({std::string(1, letters[f]), dims[f] + 1, 0, deg});
    }
    return std::make_shared<VarContext>(rank, std::move(blocks));
  }

  /// x0,x1 of degree (1,0); y0..yn of degree (0,1); z1..zd of degree (-1,e).
  static std::shared_ptr<const VarContext> cox_p1_pn(int d, int e, int n) {
    std::vector<VarBlock> blocks = {
        {"x", 2, 0, {1, 0}},
        {"y", n + 1, 0, {0, 1}},
        {"z", d, 1, {-1, e}},
    };
    return std::make_shared<VarContext>(2, std::move(blocks));
  }

  /// y0..yn of degree (0,1): forms on the second factor.
  static std::shared_ptr<const VarContext> y_forms(int n) {
    std::vector<VarBlock> blocks = {{"y", n + 1, 0, {0, 1}}};
    return std::make_shared<VarContext>(2, std::move(blocks));
  }

  /// y0..yn and z1..zd (no x block).
  static std::shared_ptr<const VarContext> yz(int d, int e, int n) {
    std::vector<VarBlock> blocks = {
        {"y", n + 1, 0, {0, 1}},
        {"z", d, 1, {-1, e}},
    };
    return std::make_shared<VarContext>(2, std::move(blocks));
  }

 private:
  int rank_;
  std::vector<VarBlock> blocks_;
  std::vector<std::string> names_;
  std::vector<std::vector<long long>> var_degree_;
  std::map<std::string, int> index_;
};

using Ctx = std::shared_ptr<const VarContext>;

inline void require_same_ctx(const Ctx& a, const Ctx& b) {
  if (a == b) return;
  if (a && b && *a == *b) return;
  throw ContextMismatch("operands live in different variable contexts");
}

}  // namespace coxcones
