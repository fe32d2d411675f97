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

#include "plp/rank.hpp"

#include <algorithm>
#include <bit>

namespace plp {

RankFunction::RankFunction(int ground_size, std::vector<int> values)
    : n_(ground_size), values_(std::move(values)) {
  if (values_.size() != (std::size_t{1} << n_))
    throw InputError("rank function: value table size must be 2^n");
  if (values_[0] != 0) throw InputError("rank function: rho(empty) must be 0");
}

bool RankFunction::is_nondecreasing() const {
  for (Subset a = 0; a < values_.size(); ++a)
    for (int i = 0; i < n_; ++i)
      if (!(a >> i & 1u) && values_[a] > values_[a | (1u << i)]) return false;
  return true;
}

bool RankFunction::is_submodular() const {
  // rho(A+i) + rho(A+j) >= rho(A+i+j) + rho(A) for i,j outside A is
  // equivalent to full submodularity.
  for (Subset a = 0; a < values_.size(); ++a)
    for (int i = 0; i < n_; ++i) {
      if (a >> i & 1u) continue;
      for (int j = i + 1; j < n_; ++j) {
        if (a >> j & 1u) continue;
        if (values_[a | (1u << i)] + values_[a | (1u << j)] <
            values_[a | (1u << i) | (1u << j)] + values_[a])
          return false;
      }
    }
  return true;
}

RankFunction rank_function(const BaseSet& b, int subset_bound) {
  const int n = b.ground_size();
  if (n > subset_bound)
    throw ResourceError("rank function: ground size exceeds the subset enumeration bound");
  std::vector<int> values(std::size_t{1} << n, 0);
  for (const auto& u : b.vectors()) {
    // Subset sums of u by dynamic programming over bits.
    std::vector<int> sums(values.size(), 0);
    for (Subset a = 1; a < sums.size(); ++a) {
      int i = std::countr_zero(a);
      sums[a] = sums[a & (a - 1)] + u[i];
    }
    for (Subset a = 1; a < values.size(); ++a) values[a] = std::max(values[a], sums[a]);
  }
  return RankFunction(n, std::move(values));
}

std::vector<Subset> closed_inseparable_subsets(const RankFunction& rho) {
  const int n = rho.ground_size();
  const Subset full = (Subset{1} << n) - 1;
  std::vector<Subset> out;
  for (Subset a = 1; a <= full; ++a) {
    bool closed = true;
    for (int i = 0; i < n && closed; ++i)
      if (!(a >> i & 1u) && rho(a | (1u << i)) <= rho(a)) closed = false;
    if (!closed) continue;
    bool separable = false;
    // Proper nonempty sub-bipartitions of a.
    for (Subset s = (a - 1) & a; s > 0 && !separable; s = (s - 1) & a) {
      if (s < (a ^ s)) break;  // each split seen once
      if (rho(s) + rho(a ^ s) == rho(a)) separable = true;
    }
    if (!separable) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), [](Subset x, Subset y) {
    int px = std::popcount(x), py = std::popcount(y);
    return px != py ? px < py : x < y;
  });
  return out;
}

}  // namespace plp
