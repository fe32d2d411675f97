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

#include "plp/gorenstein.hpp"

#include <algorithm>
#include <numeric>

#include "plp/oracles.hpp"

namespace plp {

SplpSpec::SplpSpec(int n_in, int d_in, int k_in, std::vector<int> box_in,
                   std::vector<int> prefix_max_in)
    : n(n_in), d(d_in), k(k_in), box(std::move(box_in)), prefix_max(std::move(prefix_max_in)) {
  if (n < 2) throw InputError("splp: n must be at least 2");
  if (d < 1) throw InputError("splp: d must be positive");
  // k = 0 is the pure prefix-chain shape; beta_{n-1} must always exist.
  if (k < 0 || k > n - 2) throw InputError("splp: k must lie in [0, n-2]");
  if (static_cast<int>(box.size()) != k) throw InputError("splp: expected k box bounds");
  if (static_cast<int>(prefix_max.size()) != n - 1 - k)
    throw InputError("splp: expected n-1-k prefix bounds");
  for (int b : box)
    if (b < 1) throw InputError("splp: box bounds must be positive");
  int prev = 1;
  for (int b : prefix_max) {
    if (b < prev) throw InputError("splp: prefix bounds must be nondecreasing and >= 1");
    prev = b;
  }
  if (prefix_max.back() > d) throw InputError("splp: prefix bounds must not exceed d");
}

PlpSpec SplpSpec::to_plp_spec() const {
  std::vector<int> b(n, d), alpha(n, 0), beta(n, d);
  for (int i = 0; i < k; ++i) b[i] = std::min(box[i], d);
  // beta_i = beta_{k+1} on [1,k] keeps the windows nondecreasing and vacuous.
  for (int i = k; i < n - 1; ++i) beta[i] = prefix_max[i - k];
  int first = n - 1 - k > 0 ? prefix_max[0] : d;
  for (int i = 0; i < k; ++i) beta[i] = std::min(first, std::min(beta[i], d));
  alpha[n - 1] = d;
  return PlpSpec(n, d, std::vector<int>(n, 0), std::move(b), std::move(alpha), std::move(beta));
}

std::optional<SplpSpec> as_splp(const PlpSpec& spec) {
  if (!spec.lower_is_zero() || spec.n() < 2) return std::nullopt;
  Classification cls = classify(spec);
  if (cls.has(Family::kSplp) && cls.left_k <= spec.n() - 2) {
    int k = cls.left_k;
    std::vector<int> box(spec.upper().begin(), spec.upper().begin() + k);
    std::vector<int> pm(spec.prefix_max().begin() + k, spec.prefix_max().end() - 1);
    return SplpSpec(spec.n(), spec.d(), k, std::move(box), std::move(pm));
  }
  bool lower_free = true;
  for (int i = 0; i + 1 < spec.n(); ++i)
    if (spec.prefix_min()[i] != 0) lower_free = false;
  if (cls.has(Family::kLatticePath) && lower_free && spec.prefix_max()[0] >= 1) {
    // No boxes at all: the k = 0 prefix-chain shape.
    std::vector<int> pm(spec.prefix_max().begin(), spec.prefix_max().end() - 1);
    return SplpSpec(spec.n(), spec.d(), 0, {}, std::move(pm));
  }
  return std::nullopt;
}

GorensteinResult gorenstein_criterion(const SplpSpec& spec) {
  // Ratios (|A|+1)/rho(A) over the closed-inseparable families: {j} with
  // b_j < beta_{k+1}, [i] with beta_i < beta_{i+1} (k < i < n-1), and [n-1].
  const int n = spec.n;
  const int k = spec.k;
  auto beta = [&spec, n, k](int i) {  // 1-based, i in [k+1, n-1]
    return i == n ? spec.d : spec.prefix_max[i - k - 1];
  };
  std::vector<std::pair<int, int>> required;  // (numerator, denominator)
  const int beta_first = beta(k + 1);
  for (int j = 1; j <= k; ++j)
    if (spec.box[j - 1] < beta_first) required.push_back({2, spec.box[j - 1]});
  for (int i = k + 1; i <= n - 2; ++i)
    if (beta(i) < beta(i + 1)) required.push_back({i + 1, beta(i)});
  required.push_back({n, beta(n - 1)});

  GorensteinResult result;
  const auto& [num0, den0] = required.front();
  if (num0 % den0 != 0) return result;
  const int ratio = num0 / den0;
  for (const auto& [num, den] : required)
    if (num != ratio * den) return result;
  result.gorenstein = true;
  result.ratio = ratio;
  return result;
}

int krull_dimension(const BaseSet& b) {
  // 1 + rank of the lattice spanned by differences; fraction-free Gaussian
  // elimination over the integers (entries stay tiny).
  const int n = b.ground_size();
  std::vector<std::vector<long long>> rows;
  const ExponentVector& first = b[0];
  for (int t = 1; t < b.size(); ++t) {
    std::vector<long long> row(n);
    for (int i = 0; i < n; ++i) row[i] = b[t][i] - first[i];
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] == 0) continue;
      long long a = rows[rank][col], c = rows[r][col];
      long long g = std::gcd(a, c);
      long long ma = c / g, mb = a / g;
      long long row_gcd = 0;
      for (int i = col; i < n; ++i) {
        rows[r][i] = rows[r][i] * mb - rows[rank][i] * ma;
        row_gcd = std::gcd(row_gcd, rows[r][i]);
      }
      if (row_gcd > 1)
        for (int i = col; i < n; ++i) rows[r][i] /= row_gcd;
    }
    ++rank;
  }
  return rank + 1;
}

std::vector<std::int64_t> h_vector(const BaseSet& b, int kmax) {
  const int dim = krull_dimension(b);
  if (kmax < dim) throw InputError("h-vector: kmax smaller than the Krull dimension");
  std::vector<std::int64_t> hilbert{1};
  for (std::int64_t c : hilbert_sumset(b, kmax)) hilbert.push_back(c);

  // h(t) = (1-t)^dim * sum H(m) t^m, truncated at kmax.
  std::vector<std::int64_t> binom(dim + 1);
  binom[0] = 1;
  for (int j = 1; j <= dim; ++j) binom[j] = binom[j - 1] * (dim - j + 1) / j;

  std::vector<std::int64_t> h(kmax + 1, 0);
  for (int i = 0; i <= kmax; ++i) {
    std::int64_t v = 0;
    for (int j = 0; j <= std::min(i, dim); ++j)
      v += (j % 2 == 0 ? 1 : -1) * binom[j] * hilbert[i - j];
    h[i] = v;
  }
  for (std::int64_t v : h)
    if (v < 0) throw InputError("h-vector: kmax too small (differencing went negative)");
  // The series denominator is exactly (1-t)^dim, so h vanishes from index dim
  // on; a nonzero tail means the Hilbert data was inconsistent.
  for (int i = dim; i <= kmax; ++i)
    if (h[i] != 0) throw InputError("h-vector: kmax too small (nonzero tail)");
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

std::vector<std::int64_t> h_vector(const BaseSet& b) {
  return h_vector(b, krull_dimension(b) + 1);
}

bool is_symmetric(const std::vector<std::int64_t>& h) {
  for (std::size_t i = 0; i < h.size() / 2; ++i)
    if (h[i] != h[h.size() - 1 - i]) return false;
  return true;
}

}  // namespace plp
