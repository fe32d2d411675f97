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

#include "plp/oracles.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace plp {
namespace {

// (I : w) as a variable set, or nullopt when the colon is not generated by
// variables. Avoids materializing the colon ideal.
std::optional<Subset> colon_support_if_prime(const MonomialIdeal& ideal,
                                             const ExponentVector& w) {
  const int n = ideal.nvars();
  Subset vars = 0;
  std::vector<const ExponentVector*> others;
  for (const auto& g : ideal.generators()) {
    int deg1_var = -1;
    bool bigger = false;
    for (int i = 0; i < n; ++i) {
      int q = g[i] - w[i];
      if (q <= 0) continue;
      if (q > 1 || deg1_var >= 0) {
        bigger = true;
        break;
      }
      deg1_var = i;
    }
    if (!bigger && deg1_var < 0) return std::nullopt;  // w in I
    if (!bigger)
      vars |= Subset{1} << deg1_var;
    else
      others.push_back(&g);
  }
  if (vars == 0) return std::nullopt;
  // Every non-variable quotient must be divisible by a collected variable.
  for (const auto* g : others) {
    bool covered = false;
    for (int i = 0; i < n && !covered; ++i)
      if ((vars >> i & 1u) && (*g)[i] - w[i] > 0) covered = true;
    if (!covered) return std::nullopt;
  }
  return vars;
}

}  // namespace

std::set<Subset> ass_bruteforce(const MonomialIdeal& ideal, std::int64_t witness_guard) {
  if (ideal.is_zero()) throw InputError("ass: zero ideal");
  const int n = ideal.nvars();
  const ExponentVector big = ideal.lcm_of_generators();

  // Witnesses may be normalized: coordinates inside the resulting support sit
  // at (generator exponent - 1), the rest at the lcm exponent. This subset of
  // the lcm-divisor search space is sufficient, so the computed set equals
  // the full divisor search.
  std::vector<std::vector<int>> candidates(n);
  for (int i = 0; i < n; ++i) {
    std::set<int> c;
    c.insert(big[i]);
    for (const auto& g : ideal.generators())
      if (g[i] >= 1) c.insert(g[i] - 1);
    candidates[i].assign(c.begin(), c.end());
  }

  std::int64_t space = 1;
  for (int i = 0; i < n; ++i) {
    space *= static_cast<std::int64_t>(candidates[i].size());
    if (space > witness_guard)
      throw ResourceError("ass: witness search space exceeds the guard");
  }

  std::set<Subset> found;
  ExponentVector w(n, 0);
  std::vector<int> idx(n, 0);
  for (int i = 0; i < n; ++i) w[i] = candidates[i][0];
  while (true) {
    if (auto vars = colon_support_if_prime(ideal, w)) found.insert(*vars);
    int i = 0;
    while (i < n && idx[i] + 1 == static_cast<int>(candidates[i].size())) {
      idx[i] = 0;
      w[i] = candidates[i][0];
      ++i;
    }
    if (i == n) break;
    ++idx[i];
    w[i] = candidates[i][idx[i]];
  }
  return found;
}

namespace {

bool lex_greater(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

// Graded reverse lexicographic, x_1 > ... > x_n; generators share a degree
// for polymatroidal ideals but mixed degrees are handled too.
bool revlex_greater(const ExponentVector& a, const ExponentVector& b) {
  int da = modulus(a), db = modulus(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

LinearQuotientReport linear_quotient_depth(const MonomialIdeal& ideal, MonomialOrder order) {
  if (ideal.is_zero()) throw InputError("linear quotients: zero ideal");
  const int n = ideal.nvars();
  std::vector<ExponentVector> gens = ideal.generators();
  std::sort(gens.begin(), gens.end(),
            order == MonomialOrder::kLex ? lex_greater : revlex_greater);

  LinearQuotientReport report;
  report.quotient_variables.resize(gens.size());
  int max_size = 0;
  for (std::size_t q = 1; q < gens.size(); ++q) {
    // (m_1,...,m_{q-1}) : m_q, generator by generator.
    std::vector<ExponentVector> quotients;
    for (std::size_t l = 0; l < q; ++l) {
      ExponentVector quot(n);
      for (int i = 0; i < n; ++i) quot[i] = std::max(gens[l][i] - gens[q][i], 0);
      quotients.push_back(std::move(quot));
    }
    std::vector<int> vars;
    for (const auto& quot : quotients) {
      int deg = modulus(quot);
      if (deg == 1)
        for (int i = 0; i < n; ++i)
          if (quot[i] == 1) vars.push_back(i);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (const auto& quot : quotients) {
      bool covered = false;
      for (int i : vars)
        if (quot[i] > 0) covered = true;
      if (!covered)
        throw InputError("not linear quotients in this order at generator index " +
                         std::to_string(q + 1));
    }
    report.quotient_variables[q] = vars;
    max_size = std::max(max_size, static_cast<int>(vars.size()));
  }
  report.depth = n - 1 - max_size;
  return report;
}

std::vector<std::int64_t> hilbert_sumset(const BaseSet& b, int kmax,
                                         std::int64_t max_points) {
  if (kmax < 1) throw InputError("hilbert sumset: kmax must be positive");
  std::vector<std::int64_t> counts;
  BaseSet acc = b;
  counts.push_back(acc.size());
  for (int k = 2; k <= kmax; ++k) {
    acc = polymatroidal_sum(acc, b);
    if (static_cast<std::int64_t>(acc.size()) > max_points)
      throw ResourceError("hilbert sumset: sumset exceeds the point guard");
    counts.push_back(acc.size());
  }
  return counts;
}

}  // namespace plp
