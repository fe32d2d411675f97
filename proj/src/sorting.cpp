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

#include "plp/sorting.hpp"

#include <algorithm>
#include <map>

namespace plp {

std::vector<int> sign_sequence(const ExponentVector& u, const ExponentVector& v) {
  if (u.size() != v.size() || modulus(u) != modulus(v))
    throw InputError("sign sequence: vectors must have equal length and modulus");
  std::vector<int> signs;
  for (std::size_t i = 0; i < u.size(); ++i) {
    int d = u[i] - v[i];
    if (d == 0) continue;
    if (d != 1 && d != -1)
      throw InputError("sign sequence: |u_i - v_i| >= 2 at index " + std::to_string(i + 1));
    signs.push_back(d);
  }
  return signs;
}

std::pair<ExponentVector, ExponentVector> sort_pair(const ExponentVector& u,
                                                    const ExponentVector& v) {
  if (u.size() != v.size() || modulus(u) != modulus(v))
    throw InputError("sort: vectors must have equal length and modulus");
  ExponentVector a(u.size(), 0), b(u.size(), 0);
  int pos = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (int c = 0; c < u[i] + v[i]; ++c) {
      if (pos % 2 == 0)
        ++a[i];
      else
        ++b[i];
      ++pos;
    }
  return {std::move(a), std::move(b)};
}

bool is_sorted_pair(const ExponentVector& u, const ExponentVector& v) {
  return sort_pair(u, v) == std::make_pair(u, v);
}

SortabilityResult is_sortable(const BaseSet& b) {
  for (const auto& u : b.vectors())
    for (const auto& v : b.vectors()) {
      auto [p, q] = sort_pair(u, v);
      if (!b.contains(p) || !b.contains(q)) return {false, std::make_pair(u, v)};
    }
  return {true, std::nullopt};
}

FiberConnectivityResult exchange_fiber_connected(const BaseSet& b) {
  const int n = b.ground_size();
  // Unordered pairs {u, v} grouped by fiber sum w.
  std::map<ExponentVector, std::vector<std::pair<int, int>>> fibers;
  for (int i = 0; i < b.size(); ++i)
    for (int j = i; j < b.size(); ++j) {
      ExponentVector w(b[i]);
      for (int t = 0; t < n; ++t) w[t] += b[j][t];
      fibers[std::move(w)].push_back({i, j});
    }

  auto vector_index = [&b](const ExponentVector& u) {
    const auto& vs = b.vectors();
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), u) - vs.begin());
  };

  for (const auto& [w, pairs] : fibers) {
    if (pairs.size() <= 1) continue;
    std::map<std::pair<int, int>, int> node_of;
    for (std::size_t t = 0; t < pairs.size(); ++t) node_of[pairs[t]] = static_cast<int>(t);

    std::vector<int> parent(pairs.size());
    for (std::size_t t = 0; t < parent.size(); ++t) parent[t] = static_cast<int>(t);
    auto find = [&parent](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };

    for (const auto& [ui, vi] : pairs) {
      const ExponentVector& u = b[ui];
      const ExponentVector& v = b[vi];
      for (int i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          ExponentVector u2(u), v2(v);
          --u2[i], ++u2[j];
          ++v2[i], --v2[j];
          if (v2[j] < 0 || !b.contains(u2) || !b.contains(v2)) continue;
          int a = vector_index(u2), c = vector_index(v2);
          auto key = std::minmax(a, c);
          auto it = node_of.find({key.first, key.second});
          if (it == node_of.end()) continue;
          int x = find(node_of[{ui, vi}]), y = find(it->second);
          if (x != y) parent[x] = y;
        }
      }
    }
    int root = find(0);
    for (std::size_t t = 1; t < pairs.size(); ++t)
      if (find(static_cast<int>(t)) != root) return {false, w};
  }
  return {true, std::nullopt};
}

std::int64_t sorted_chain_count(const BaseSet& b, int k) {
  if (k < 1 || k > 3) throw ResourceError("sorted chain count: k must be in [1,3]");
  if (k == 1) return b.size();
  std::int64_t count = 0;
  if (k == 2) {
    for (const auto& u : b.vectors())
      for (const auto& v : b.vectors())
        if (is_sorted_pair(u, v)) ++count;
    return count;
  }
  // k = 3: all pairs (u_i, u_j), i < j, sorted.
  const int m = b.size();
  std::vector<std::vector<bool>> sorted(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) sorted[i][j] = is_sorted_pair(b[i], b[j]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (!sorted[i][j]) continue;
      for (int t = 0; t < m; ++t)
        if (sorted[i][t] && sorted[j][t]) ++count;
    }
  return count;
}

bool sorted_count_equals_sumset(const BaseSet& b, int k) {
  if (k < 1 || k > 3) throw ResourceError("sorted count: k must be in [1,3]");
  return sorted_chain_count(b, k) == iterated_sumset(b, k).size();
}

}  // namespace plp
