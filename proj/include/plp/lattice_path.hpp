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

#ifndef PLP_LATTICE_PATH_HPP_
#define PLP_LATTICE_PATH_HPP_

#include <utility>
#include <vector>

#include "plp/core.hpp"
#include "plp/plp_spec.hpp"

namespace plp {

// A monotone path from (1,1) to (n,r): n+r-2 unit steps, each north or east,
// recorded by the set of north step positions.
struct LatticePath {
  int n = 0;
  int r = 0;
  std::vector<int> north_steps;  // strictly increasing, in [1, n+r-2], size r-1

  LatticePath(int n_in, int r_in, std::vector<int> north);

  std::vector<int> east_steps() const;
  // N_sigma: i-th entry is b_i - (i-1) for the sorted north positions b_i
  // (the column of the i-th north step).
  std::vector<int> north_vector() const;
  // E_sigma: i-th entry is a_i - (i-1) for the sorted east positions a_i.
  std::vector<int> east_vector() const;
};

LatticePath path_from_east_vector(int n, int r, const std::vector<int>& east_vec);

// m(sigma): exponent of x_i = number of north steps on the line x = i.
// Follows from prefix_i(u) = E_sigma(i) - 1.
ExponentVector path_monomial(const LatticePath& path);

// A transversal presentation P_[s_1,t_1] ... P_[s_d,t_d] (1-based intervals).
struct TransversalPresentation {
  int n = 0;
  std::vector<std::pair<int, int>> factors;
};

// LP spec of the region between two paths; `upper` bounds the prefix sums
// from above and `lower` from below.
PlpSpec lp_spec_from_paths(const LatticePath& upper, const LatticePath& lower);

// The transversal presentation of an LP spec: s_j = 1 + max{i : beta_i < j},
// t_j = min{i : alpha_i >= j}. Requires a pruning-free spec (a = 0, b >= d).
TransversalPresentation lp_to_transversal(const PlpSpec& spec);

// Reorders the intervals so both endpoint lists are nondecreasing and builds
// the LP spec (alpha_i = #{j : t_j <= i}, beta_i = #{j : s_j <= i}).
// Throws "not LP-orderable" when no ordering works.
PlpSpec transversal_to_lp(const TransversalPresentation& t);

}  // namespace plp

#endif  // PLP_LATTICE_PATH_HPP_
