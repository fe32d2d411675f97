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

#include "plp/exchange.hpp"

namespace plp {
namespace {

ExponentVector swapped(const ExponentVector& u, int add, int sub) {
  ExponentVector w(u);
  ++w[add];
  --w[sub];
  return w;
}

// Symmetric axiom at (u, v, i) with u_i < v_i: some j with u_j > v_j admits
// the double swap.
bool symmetric_at(const BaseSet& b, const ExponentVector& u, const ExponentVector& v, int i) {
  for (int j = 0; j < b.ground_size(); ++j) {
    if (u[j] <= v[j]) continue;
    if (b.contains(swapped(u, i, j)) && b.contains(swapped(v, j, i))) return true;
  }
  return false;
}

// Left-sided condition at (u, v, i) with u_i > v_i and a deficient prefix:
// some j < i with u_j < v_j admits the swap.
bool left_at(const BaseSet& b, const ExponentVector& u, const ExponentVector& v, int i) {
  for (int j = 0; j < i; ++j) {
    if (u[j] >= v[j]) continue;
    if (b.contains(swapped(u, j, i)) && b.contains(swapped(v, i, j))) return true;
  }
  return false;
}

bool right_at(const BaseSet& b, const ExponentVector& u, const ExponentVector& v, int i) {
  for (int j = i + 1; j < b.ground_size(); ++j) {
    if (u[j] >= v[j]) continue;
    if (b.contains(swapped(u, j, i)) && b.contains(swapped(v, i, j))) return true;
  }
  return false;
}

bool strong_at(const BaseSet& b, const ExponentVector& u, const ExponentVector& v, int i) {
  // Every j with u_j > v_j must admit the swap at (i, j).
  for (int j = 0; j < b.ground_size(); ++j) {
    if (u[j] <= v[j]) continue;
    if (!b.contains(swapped(u, i, j)) || !b.contains(swapped(v, j, i))) return false;
  }
  return true;
}

ExchangeResult scan(const BaseSet& b, ExchangeKind kind) {
  const int n = b.ground_size();
  for (const auto& u : b.vectors()) {
    for (const auto& v : b.vectors()) {
      for (int i = 0; i < n; ++i) {
        bool ok = true;
        switch (kind) {
          case ExchangeKind::kSymmetric:
            if (u[i] < v[i]) ok = symmetric_at(b, u, v, i);
            break;
          case ExchangeKind::kStrong:
            if (u[i] < v[i]) ok = strong_at(b, u, v, i);
            break;
          case ExchangeKind::kLeftStrong:
            if (u[i] > v[i] && prefix_sum(u, i) < prefix_sum(v, i)) ok = left_at(b, u, v, i);
            break;
          case ExchangeKind::kRightStrong:
            if (u[i] > v[i] &&
                modulus(u) - prefix_sum(u, i + 1) < modulus(v) - prefix_sum(v, i + 1))
              ok = right_at(b, u, v, i);
            break;
          case ExchangeKind::kTwoSided:
            break;  // handled by the caller
        }
        if (!ok) return {false, ExchangeWitness{u, v, i + 1}};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace

ExchangeKind exchange_kind_from_string(const std::string& name) {
  if (name == "symmetric") return ExchangeKind::kSymmetric;
  if (name == "strong") return ExchangeKind::kStrong;
  if (name == "left_strong" || name == "left") return ExchangeKind::kLeftStrong;
  if (name == "right_strong" || name == "right") return ExchangeKind::kRightStrong;
  if (name == "two_sided" || name == "two-sided") return ExchangeKind::kTwoSided;
  throw InputError("unknown exchange kind: " + name);
}

std::string to_string(ExchangeKind kind) {
  switch (kind) {
    case ExchangeKind::kSymmetric: return "symmetric";
    case ExchangeKind::kStrong: return "strong";
    case ExchangeKind::kLeftStrong: return "left_strong";
    case ExchangeKind::kRightStrong: return "right_strong";
    case ExchangeKind::kTwoSided: return "two_sided";
  }
  return "?";
}

ExchangeResult check_exchange(const BaseSet& b, ExchangeKind kind) {
  if (kind == ExchangeKind::kTwoSided) {
    ExchangeResult left = scan(b, ExchangeKind::kLeftStrong);
    if (!left.holds) return left;
    return scan(b, ExchangeKind::kRightStrong);
  }
  return scan(b, kind);
}

bool is_base_set(const BaseSet& b) {
  return check_exchange(b, ExchangeKind::kSymmetric).holds;
}

}  // namespace plp
