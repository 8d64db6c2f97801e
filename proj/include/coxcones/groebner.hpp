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

#include <string>
#include <vector>

#include "coxcones/polynomial.hpp"

namespace coxcones {

/// Thrown when a computation would exceed its resource budget.  Budgets fail
/// loudly; results are never silently truncated.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroebnerBudget {
  long max_pairs = 100000;  // S-pairs processed
  int max_degree = 24;      // total degree of any polynomial handled
};

/// Full normal form of p against basis (reduces every term, not just the
/// leading one).  Ideals are plain generator lists; the monomial order is
/// always grevlex with the context's variable order.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const GroebnerBudget& budget = {});

/// Reduced Groebner basis under grevlex, via Buchberger with the coprimality
/// and chain criteria.  Leading coefficients are normalized to 1.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                       const GroebnerBudget& budget = {});

/// Dimension of the staircase of a monomial set: the largest number of
/// variables spanning a coordinate subspace that meets none of the given
/// monomial supports.
int staircase_dim(const std::vector<Monomial>& leading, int nvars);

/// Codimension of the ideal: var_count - staircase dimension of the leading
/// terms of a Groebner basis.
int ideal_codim(const std::vector<Polynomial>& gens, int ambient_var_count,
                const GroebnerBudget& budget = {});

struct RegSeqCheck {
  bool regular = false;
  std::string reason;  // set when regular == false
};

/// Regular-sequence test for homogeneous forms in the y-variables: the ideal
/// of every prefix must have codimension equal to the prefix length.
RegSeqCheck is_regular_sequence(const std::vector<Polynomial>& forms,
                                const GroebnerBudget& budget = {});

}  // namespace coxcones
