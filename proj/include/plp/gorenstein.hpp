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

#ifndef PLP_GORENSTEIN_HPP_
#define PLP_GORENSTEIN_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "plp/base_set.hpp"
#include "plp/core.hpp"
#include "plp/plp_spec.hpp"

namespace plp {

// The shape 0 <= u_i <= b_i (i <= k), u_1+...+u_i <= beta_i (k < i < n),
// |u| = d, with b_i > 0 and 1 <= beta_{k+1} <= ... <= beta_{n-1} <= d.
struct SplpSpec {
  int n = 0;
  int d = 0;
  int k = 0;
  std::vector<int> box;         // b_1..b_k
  std::vector<int> prefix_max;  // beta_{k+1}..beta_{n-1}

  SplpSpec(int n_in, int d_in, int k_in, std::vector<int> box_in,
           std::vector<int> prefix_max_in);

  PlpSpec to_plp_spec() const;
};

// Extraction from a classified spec (SPLP tag, or pruning-free Veronese).
std::optional<SplpSpec> as_splp(const PlpSpec& spec);

struct GorensteinResult {
  bool gorenstein = false;
  int ratio = 0;  // the common positive integer when gorenstein
};

// Base ring Gorenstein test: over the closed-inseparable index families
// ({j} for b_j < beta_{k+1}; [i] for beta_i < beta_{i+1}, k < i < n-1; always
// [n-1]) the quantities 2/b_j, (i+1)/beta_i, n/beta_{n-1} must all equal one
// positive integer.
GorensteinResult gorenstein_criterion(const SplpSpec& spec);

// Krull dimension of the base ring K[B]: 1 + rank of the difference lattice.
int krull_dimension(const BaseSet& b);

// h-vector of K[B] from the Hilbert function H(m) = |m-fold sumset| by
// finite differencing against (1-t)^dim. Errors when kmax is too small
// (detected by a negative entry or a nonzero tail).
std::vector<std::int64_t> h_vector(const BaseSet& b, int kmax);

std::vector<std::int64_t> h_vector(const BaseSet& b);  // kmax = dim + 1

bool is_symmetric(const std::vector<std::int64_t>& h);

}  // namespace plp

#endif  // PLP_GORENSTEIN_HPP_
