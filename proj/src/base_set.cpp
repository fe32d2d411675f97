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

#include "plp/base_set.hpp"

#include <algorithm>

namespace plp {

BaseSet::BaseSet(int ground_size, std::vector<ExponentVector> vectors)
    : n_(ground_size), vectors_(std::move(vectors)) {
  if (n_ <= 0) throw InputError("base set: ground size must be positive");
  if (vectors_.empty()) throw InputError("base set: empty vector set");
  for (const auto& u : vectors_) {
    if (static_cast<int>(u.size()) != n_)
      throw InputError("base set: vector length differs from ground size");
    for (int e : u)
      if (e < 0) throw InputError("base set: negative entry");
  }
  rank_ = modulus(vectors_.front());
  for (const auto& u : vectors_)
    if (modulus(u) != rank_) throw InputError("base set: mixed moduli");
  std::sort(vectors_.begin(), vectors_.end());
  vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
}

bool BaseSet::contains(const ExponentVector& u) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), u);
}

BaseSet polymatroidal_sum(const BaseSet& b, const BaseSet& c) {
  if (b.ground_size() != c.ground_size())
    throw InputError("polymatroidal sum: ground set size mismatch");
  // Deduplicate in chunks so the working set tracks the result size rather
  // than the full |B| x |C| product.
  std::vector<ExponentVector> sums;
  std::size_t flush_at = 1u << 16;
  auto flush = [&sums, &flush_at] {
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    flush_at = std::max<std::size_t>(1u << 16, 2 * sums.size());
  };
  for (const auto& u : b.vectors())
    for (const auto& v : c.vectors()) {
      ExponentVector w(u);
      for (int i = 0; i < b.ground_size(); ++i) w[i] += v[i];
      sums.push_back(std::move(w));
      if (sums.size() >= flush_at) flush();
    }
  return BaseSet(b.ground_size(), std::move(sums));
}

BaseSet iterated_sumset(const BaseSet& b, int k) {
  if (k < 1) throw InputError("iterated sumset: k must be positive");
  BaseSet acc = b;
  for (int i = 1; i < k; ++i) acc = polymatroidal_sum(acc, b);
  return acc;
}

BaseSet permute(const BaseSet& b, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != b.ground_size())
    throw InputError("permute: permutation length mismatch");
  std::vector<ExponentVector> out;
  out.reserve(b.size());
  for (const auto& u : b.vectors()) {
    ExponentVector w(b.ground_size(), 0);
    for (int i = 0; i < b.ground_size(); ++i) w[perm[i]] = u[i];
    out.push_back(std::move(w));
  }
  return BaseSet(b.ground_size(), std::move(out));
}

}  // namespace plp
