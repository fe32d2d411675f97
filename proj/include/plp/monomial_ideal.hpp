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

#ifndef PLP_MONOMIAL_IDEAL_HPP_
#define PLP_MONOMIAL_IDEAL_HPP_

#include <vector>

#include "plp/base_set.hpp"
#include "plp/core.hpp"

namespace plp {

bool divides(const ExponentVector& a, const ExponentVector& b);
ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);

// A monomial ideal held by its unique minimal generating set, sorted.
class MonomialIdeal {
 public:
  // Minimalizes the generators. An empty list is the zero ideal.
  static MonomialIdeal from_generators(int nvars, std::vector<ExponentVector> gens);
  static MonomialIdeal from_base_set(const BaseSet& b);
  // The prime P_A = (x_i : i in A).
  static MonomialIdeal prime(int nvars, Subset support);

  int nvars() const { return nvars_; }
  bool is_zero() const { return gens_.empty(); }
  const std::vector<ExponentVector>& generators() const { return gens_; }

  bool contains(const ExponentVector& monomial) const;
  ExponentVector lcm_of_generators() const;

  // True iff the minimal generators are exactly {x_i : i in support}.
  bool equals_prime(Subset support) const;

  bool operator==(const MonomialIdeal& other) const = default;

 private:
  MonomialIdeal(int nvars, std::vector<ExponentVector> gens);
  int nvars_ = 0;
  std::vector<ExponentVector> gens_;
};

MonomialIdeal product(const MonomialIdeal& i, const MonomialIdeal& j);
MonomialIdeal power(const MonomialIdeal& i, int k);
MonomialIdeal colon_by_monomial(const MonomialIdeal& i, const ExponentVector& m);
MonomialIdeal intersect(const std::vector<MonomialIdeal>& ideals);

// The monomial localization I(P_A): image under x_i -> 1 for i outside A,
// written in the |A| variables of A (ascending original index order).
MonomialIdeal monomial_localization(const MonomialIdeal& ideal, Subset support);

Subset ideal_support(const MonomialIdeal& ideal);

}  // namespace plp

#endif  // PLP_MONOMIAL_IDEAL_HPP_
