// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PLP_RANK_HPP_
#define PLP_RANK_HPP_

#include <vector>

#include "plp/base_set.hpp"
#include "plp/core.hpp"

namespace plp {

inline constexpr int kDefaultSubsetBound = 16;

// Ground set rank function rho(A) = max over the base set of u(A), tabulated
// over all 2^n subsets.
class RankFunction {
 public:
  RankFunction(int ground_size, std::vector<int> values);

  int ground_size() const { return n_; }
  int operator()(Subset a) const { return values_[a]; }
  int rank() const { return values_.back(); }

  bool is_nondecreasing() const;
  bool is_submodular() const;

 private:
  int n_;
  std::vector<int> values_;  // indexed by bitmask, size 2^n
};

RankFunction rank_function(const BaseSet& b, int subset_bound = kDefaultSubsetBound);

// The non-empty subsets that are rho-closed (rank strictly increases on every
// proper superset) and rho-inseparable (rank is not additive over any
// bipartition), sorted by (popcount, value). These index the irredundant
// half-space description of the polymatroid.
std::vector<Subset> closed_inseparable_subsets(const RankFunction& rho);

}  // namespace plp

#endif  // PLP_RANK_HPP_
