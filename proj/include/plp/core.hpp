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

#ifndef PLP_CORE_HPP_
#define PLP_CORE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace plp {

// Exponent vector u in Z_+^n. Entries are validated where objects are built
// (BaseSet, Monomial, PlpSpec); raw vectors are used freely in between.
using ExponentVector = std::vector<int>;

// Subsets of the ground set [n] (n <= 30) as bitmasks, bit i-1 <-> element i.
using Subset = std::uint32_t;

// Malformed input: bad documents, violated invariants, precondition failures.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable enumeration guard tripped (subset counts, witness spaces...).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

inline int modulus(const ExponentVector& u) {
  int s = 0;
  for (int e : u) s += e;
  return s;
}

// u(A) = sum of the entries indexed by the subset.
inline int entry_sum(const ExponentVector& u, Subset a) {
  int s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (a >> i & 1u) s += u[i];
  return s;
}

inline int prefix_sum(const ExponentVector& u, int i) {
  int s = 0;
  for (int j = 0; j < i; ++j) s += u[j];
  return s;
}

std::string subset_to_string(Subset a);
std::string vector_to_string(const ExponentVector& u);

}  // namespace plp

#endif  // PLP_CORE_HPP_
