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

#ifndef PLP_BASE_SET_HPP_
#define PLP_BASE_SET_HPP_

#include <vector>

#include "plp/core.hpp"

namespace plp {

// A finite set of equal-modulus exponent vectors, canonically sorted.
// Construction rejects empty input, negative entries and mixed moduli;
// duplicates are merged.
class BaseSet {
 public:
  BaseSet(int ground_size, std::vector<ExponentVector> vectors);

  int ground_size() const { return n_; }
  int rank() const { return rank_; }
  int size() const { return static_cast<int>(vectors_.size()); }
  const std::vector<ExponentVector>& vectors() const { return vectors_; }
  const ExponentVector& operator[](int i) const { return vectors_[i]; }

  bool contains(const ExponentVector& u) const;

  bool operator==(const BaseSet& other) const = default;

 private:
  int n_;
  int rank_;
  std::vector<ExponentVector> vectors_;  // sorted lexicographically
};

// {u + v : u in b, v in c}, deduplicated. Both sets must share a ground set.
BaseSet polymatroidal_sum(const BaseSet& b, const BaseSet& c);

// k-fold Minkowski sum B + ... + B.
BaseSet iterated_sumset(const BaseSet& b, int k);

// Applies a coordinate permutation: result vector w has w[perm[i]] = u[i].
BaseSet permute(const BaseSet& b, const std::vector<int>& perm);

}  // namespace plp

#endif  // PLP_BASE_SET_HPP_
