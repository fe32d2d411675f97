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

#ifndef PLP_FORMULAS_HPP_
#define PLP_FORMULAS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plp/core.hpp"
#include "plp/monomial_ideal.hpp"
#include "plp/plp_spec.hpp"

namespace plp {

// N(u) = #{i <= n-1 : u_i < b_i and u_1+...+u_i < beta_i} for a member u of a
// normalized spec (upper bounds clamped at d).
int slack_count(const PlpSpec& spec, const ExponentVector& u);

struct DepthReport {
  int depth = 0;
  Family family = Family::kGeneral;      // formula used
  std::optional<ExponentVector> argmax;  // generic path: a u attaining max N
  int max_slack = -1;                    // generic path: the max N value
  int equality_count = -1;               // left: #{alpha_i = beta_i}; right: s
  int delta = -1;                        // right: floor(alpha_k / beta_k)
};

// Closed-form depth: left family by the equality count, right family by
// s + max{0, d - beta_k - b([k+1,n]) + n - k - delta}, anything else by the
// generic n - 1 - max N(u) over enumerated bases.
DepthReport depth_formula(const PlpSpec& spec,
                          std::int64_t max_bases = kDefaultMaxBases);

// Smallest power where depth stabilizes. Closed forms exist for the left (1),
// right (ceil((n-k-delta)/(beta_k+b-d)) or 1) and LP (1) families; throws
// InputError for the general family.
int dstab_formula(const PlpSpec& spec);

// Smallest power where Ass stabilizes; same family support as dstab_formula.
int astab_formula(const PlpSpec& spec);

struct AssEntry {
  Subset support = 0;
  char clause = '?';      // which theorem clause admitted the prime
  int exponent = 0;       // d_P, the degree of generators of I(P)
};

struct AssReport {
  Family family = Family::kGeneral;
  std::vector<AssEntry> entries;  // sorted by (popcount, support)

  std::vector<Subset> supports() const;
};

// Closed-form Ass(S/I) for the LP, left and right families. Right specs with
// prefix equalities are factored into LP blocks and a tail block first; the
// per-clause exponents d_P come with each prime.
AssReport ass_formula(const PlpSpec& spec);

// Ass(S/I^m) for all m >> 0 (right family closed form; left/LP families are
// stable from the first power).
AssReport ass_infinity(const PlpSpec& spec);

struct PrimaryComponent {
  Subset support = 0;
  int exponent = 0;  // P_A^{d_P}

  bool operator==(const PrimaryComponent& other) const = default;
};

// The strong-intersection-type decomposition I = cap P_A^{d_P} over the
// associated primes. Families with closed-form Ass use it; any other spec
// falls back to the brute-force Ass oracle. Exponents come from the closed
// forms where defined and from deg I(P) otherwise.
std::vector<PrimaryComponent> primary_decomposition(const PlpSpec& spec,
                                                    std::int64_t max_bases = kDefaultMaxBases);

MonomialIdeal component_intersection(int nvars, const std::vector<PrimaryComponent>& comps);

// Equality test `intersection of the components == ideal` without building
// the intersection: containment one way is a degree count per support, the
// other way scans the minimal elements of the intersection (entries are
// bounded by the largest exponent).
bool decomposition_cuts_ideal(const MonomialIdeal& ideal,
                              const std::vector<PrimaryComponent>& comps);

std::string to_string(const PrimaryComponent& comp);

}  // namespace plp

#endif  // PLP_FORMULAS_HPP_
