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

#ifndef PLP_EXCHANGE_HPP_
#define PLP_EXCHANGE_HPP_

#include <optional>
#include <string>

#include "plp/base_set.hpp"
#include "plp/core.hpp"

namespace plp {

enum class ExchangeKind { kSymmetric, kStrong, kLeftStrong, kRightStrong, kTwoSided };

ExchangeKind exchange_kind_from_string(const std::string& name);
std::string to_string(ExchangeKind kind);

// The failing triple (u, v, i) of an exchange check; i is a 1-based index.
struct ExchangeWitness {
  ExponentVector u;
  ExponentVector v;
  int index = 0;
};

struct ExchangeResult {
  bool holds = false;
  std::optional<ExchangeWitness> counterexample;  // lexicographically least
};

// Checks the requested exchange property. kSymmetric is the defining base-set
// axiom; kLeftStrong/kRightStrong are the one-sided strengthenings (swap
// partner restricted to the deficient side); kTwoSided is both.
ExchangeResult check_exchange(const BaseSet& b, ExchangeKind kind);

// True iff b is the base set of a discrete polymatroid, i.e. the symmetric
// exchange property holds.
bool is_base_set(const BaseSet& b);

}  // namespace plp

#endif  // PLP_EXCHANGE_HPP_
