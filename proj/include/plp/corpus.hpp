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

#ifndef PLP_CORPUS_HPP_
#define PLP_CORPUS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "plp/base_set.hpp"
#include "plp/core.hpp"
#include "plp/gorenstein.hpp"
#include "plp/plp_spec.hpp"

namespace plp {

// Deterministic cross-platform generator (splitmix64).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [lo, hi].
  int uniform(int lo, int hi);

 private:
  std::uint64_t state_;
};

// Random valid normalized specs (a = 0) mixing left, right, LP and general
// shapes; every spec has the given ground size and rank bounds.
std::vector<PlpSpec> random_spec_corpus(std::uint64_t seed, int count, int max_n, int max_d);

// Random left / right specs with the family's standing hypotheses; right
// specs additionally satisfy d < beta_k + b([k+1,n]) when strict_gap is set.
PlpSpec random_left_spec(Rng& rng, int max_n, int max_d);
PlpSpec random_right_spec(Rng& rng, int max_n, int max_d, bool strict_gap);

SplpSpec random_splp_spec(Rng& rng, int max_n, int max_d);

// Random discrete polymatroid base sets on ground set [4], built from random
// nondecreasing submodular rank functions (sums of capped modular pieces).
BaseSet random_polymatroid_base_set_dim4(Rng& rng);

// Runs the formula-vs-oracle property checks of the random corpus; returns a
// human-readable report and the number of mismatches. Used by `verify` and by
// the acceptance suite.
struct VerifyOutcome {
  int specs_checked = 0;
  int mismatches = 0;
  std::string report;  // one line per failing spec, in document format
};

VerifyOutcome verify_random_corpus(std::uint64_t seed, int count, int max_n, int max_d);

}  // namespace plp

#endif  // PLP_CORPUS_HPP_
