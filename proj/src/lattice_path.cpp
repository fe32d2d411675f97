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

#include "plp/lattice_path.hpp"

#include <algorithm>

namespace plp {

LatticePath::LatticePath(int n_in, int r_in, std::vector<int> north)
    : n(n_in), r(r_in), north_steps(std::move(north)) {
  if (n < 1 || r < 1) throw InputError("lattice path: grid dimensions must be positive");
  std::sort(north_steps.begin(), north_steps.end());
  if (static_cast<int>(north_steps.size()) != r - 1)
    throw InputError("lattice path: expected r-1 north steps");
  for (std::size_t i = 0; i < north_steps.size(); ++i) {
    if (north_steps[i] < 1 || north_steps[i] > n + r - 2)
      throw InputError("lattice path: step index out of range");
    if (i > 0 && north_steps[i] == north_steps[i - 1])
      throw InputError("lattice path: duplicate step index");
  }
}

std::vector<int> LatticePath::east_steps() const {
  std::vector<int> east;
  std::size_t t = 0;
  for (int s = 1; s <= n + r - 2; ++s) {
    if (t < north_steps.size() && north_steps[t] == s)
      ++t;
    else
      east.push_back(s);
  }
  return east;
}

std::vector<int> LatticePath::north_vector() const {
  std::vector<int> v(north_steps.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = north_steps[i] - static_cast<int>(i);
  return v;
}

std::vector<int> LatticePath::east_vector() const {
  std::vector<int> east = east_steps();
  std::vector<int> v(east.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = east[i] - static_cast<int>(i);
  return v;
}

LatticePath path_from_east_vector(int n, int r, const std::vector<int>& east_vec) {
  if (static_cast<int>(east_vec.size()) != n - 1)
    throw InputError("path: east vector must have n-1 entries");
  std::vector<int> east(east_vec.size());
  for (std::size_t i = 0; i < east.size(); ++i) east[i] = east_vec[i] + static_cast<int>(i);
  std::vector<int> north;
  std::size_t t = 0;
  for (int s = 1; s <= n + r - 2; ++s) {
    if (t < east.size() && east[t] == s)
      ++t;
    else
      north.push_back(s);
  }
  if (t != east.size()) throw InputError("path: east vector is not weakly increasing in range");
  return LatticePath(n, r, std::move(north));
}

ExponentVector path_monomial(const LatticePath& path) {
  // prefix_i(u) = E_sigma(i) - 1; |u| = r - 1.
  std::vector<int> east = path.east_vector();
  ExponentVector u(path.n, 0);
  int prev = 0;
  for (int i = 0; i < path.n - 1; ++i) {
    int prefix = east[i] - 1;
    if (prefix < prev) throw InputError("path: malformed east vector");
    u[i] = prefix - prev;
    prev = prefix;
  }
  u[path.n - 1] = path.r - 1 - prev;
  if (u[path.n - 1] < 0) throw InputError("path: malformed north count");
  return u;
}

PlpSpec lp_spec_from_paths(const LatticePath& upper, const LatticePath& lower) {
  if (upper.n != lower.n || upper.r != lower.r)
    throw InputError("paths: grid mismatch");
  const int n = upper.n;
  const int d = upper.r - 1;
  std::vector<int> hi = upper.east_vector();
  std::vector<int> lo = lower.east_vector();
  std::vector<int> alpha(n), beta(n);
  for (int i = 0; i + 1 < n; ++i) {
    alpha[i] = lo[i] - 1;
    beta[i] = hi[i] - 1;
    if (alpha[i] > beta[i]) throw InputError("paths: lower path is not below the upper path");
  }
  alpha[n - 1] = beta[n - 1] = d;
  return PlpSpec(n, d, std::vector<int>(n, 0), std::vector<int>(n, d), std::move(alpha),
                 std::move(beta));
}

TransversalPresentation lp_to_transversal(const PlpSpec& spec) {
  const int n = spec.n();
  const int d = spec.d();
  if (!spec.lower_is_zero())
    throw InputError("to-transversal: spec must have a = 0");
  for (int i = 0; i < n; ++i)
    if (spec.upper()[i] < d)
      throw InputError("to-transversal: spec is pruned (b_i < d); not an LP spec");
  TransversalPresentation t;
  t.n = n;
  for (int j = 1; j <= d; ++j) {
    int s = 1;
    for (int i = 0; i < n; ++i)
      if (spec.prefix_max()[i] < j) s = i + 2;
    int e = n;
    for (int i = n - 1; i >= 0; --i)
      if (spec.prefix_min()[i] >= j) e = i + 1;
    t.factors.push_back({s, e});
  }
  return t;
}

PlpSpec transversal_to_lp(const TransversalPresentation& t) {
  const int n = t.n;
  const int d = static_cast<int>(t.factors.size());
  if (n < 1) throw InputError("transversal: n must be positive");
  if (d < 1) throw InputError("transversal: at least one factor required");
  for (const auto& [s, e] : t.factors)
    if (s < 1 || s > e || e > n) throw InputError("transversal: bad interval");
  std::vector<std::pair<int, int>> sorted = t.factors;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 1; j < sorted.size(); ++j)
    if (sorted[j].second < sorted[j - 1].second)
      throw InputError("not LP-orderable: no ordering makes both endpoint lists nondecreasing");
  std::vector<int> alpha(n, 0), beta(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (const auto& [s, e] : sorted) {
      if (e <= i) ++alpha[i - 1];
      if (s <= i) ++beta[i - 1];
    }
  }
  return PlpSpec(n, d, std::vector<int>(n, 0), std::vector<int>(n, d), std::move(alpha),
                 std::move(beta));
}

}  // namespace plp
