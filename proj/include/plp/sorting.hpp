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

#ifndef PLP_SORTING_HPP_
#define PLP_SORTING_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "plp/base_set.hpp"
#include "plp/core.hpp"

namespace plp {

// Sign sequence of u - v read left to right, one +1/-1 per nonzero entry.
// Requires |u| = |v| and |u_i - v_i| <= 1 everywhere.
std::vector<int> sign_sequence(const ExponentVector& u, const ExponentVector& v);

// The sorting operator: merge the index multisets of u and v in weakly
// increasing order, then deal odd positions to u' and even positions to v'.
// Idempotent and sum-preserving; requires |u| = |v|.
std::pair<ExponentVector, ExponentVector> sort_pair(const ExponentVector& u,
                                                    const ExponentVector& v);

bool is_sorted_pair(const ExponentVector& u, const ExponentVector& v);

struct SortabilityResult {
  bool sortable = false;
  // Lexicographically least (u, v) with sort(u, v) outside B x B.
  std::optional<std::pair<ExponentVector, ExponentVector>> failing_pair;
};

SortabilityResult is_sortable(const BaseSet& b);

struct FiberConnectivityResult {
  bool connected = false;
  std::optional<ExponentVector> disconnected_fiber;  // least fiber sum w
};

// For each fiber {(u,v) : u + v = w}, with unordered pairs as nodes and single
// symmetric-exchange double swaps as edges, checks connectivity. This is the
// degree-2 content of White's conjecture.
FiberConnectivityResult exchange_fiber_connected(const BaseSet& b);

// Number of k-chains (u_1,...,u_k) in B^k with every pair (u_i,u_j), i<j,
// sorted. k <= 3.
std::int64_t sorted_chain_count(const BaseSet& b, int k);

// True iff sorted_chain_count(b, k) equals the k-fold Minkowski sumset size.
// Requires a sortable b and k <= 3.
bool sorted_count_equals_sumset(const BaseSet& b, int k);

}  // namespace plp

#endif  // PLP_SORTING_HPP_
