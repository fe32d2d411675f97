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

#ifndef PLP_ORACLES_HPP_
#define PLP_ORACLES_HPP_

#include <cstdint>
#include <set>
#include <vector>

#include "plp/base_set.hpp"
#include "plp/core.hpp"
#include "plp/monomial_ideal.hpp"

namespace plp {

inline constexpr std::int64_t kDefaultWitnessGuard = 10'000'000;

// Associated primes of S/I by witness search: P_A is associated iff some
// monomial w dividing lcm(G(I)), w not in I, has (I : w) = P_A. Guarded by
// the size of the witness space.
std::set<Subset> ass_bruteforce(const MonomialIdeal& ideal,
                                std::int64_t witness_guard = kDefaultWitnessGuard);

enum class MonomialOrder { kLex, kRevLex };

struct LinearQuotientReport {
  int depth = 0;
  // Quotient variable set of each generator, in the chosen order (0-based).
  std::vector<std::vector<int>> quotient_variables;
};

// depth S/I via linear quotients: sorts the generators descending in the
// given order, verifies each colon (m_1,...,m_{q-1}) : m_q is generated by
// variables (errors with the offending index otherwise), and returns
// n - 1 - max quotient-set size. Independent of any closed-form formula.
LinearQuotientReport linear_quotient_depth(const MonomialIdeal& ideal, MonomialOrder order);

inline constexpr std::int64_t kDefaultSumsetGuard = 20'000'000;

// |B|, |B+B|, ..., |kmax-fold sumset|: the Hilbert function of the base ring
// in degrees 1..kmax (integer decomposition property). Guarded against
// sumset blowup.
std::vector<std::int64_t> hilbert_sumset(const BaseSet& b, int kmax,
                                         std::int64_t max_points = kDefaultSumsetGuard);

}  // namespace plp

#endif  // PLP_ORACLES_HPP_
