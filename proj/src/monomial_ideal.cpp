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

#include "plp/monomial_ideal.hpp"

#include <algorithm>
#include <bit>

namespace plp {

bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector g(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) g[i] = std::min(a[i], b[i]);
  return g;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

namespace {

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && divides(gens[j], gens[i])) redundant = true;
    if (!redundant) minimal.push_back(gens[i]);
  }
  return minimal;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int nvars, std::vector<ExponentVector> gens)
    : nvars_(nvars), gens_(std::move(gens)) {}

MonomialIdeal MonomialIdeal::from_generators(int nvars, std::vector<ExponentVector> gens) {
  if (nvars < 0) throw InputError("monomial ideal: negative variable count");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != nvars)
      throw InputError("monomial ideal: generator length differs from variable count");
    for (int e : g)
      if (e < 0) throw InputError("monomial ideal: negative exponent");
  }
  return MonomialIdeal(nvars, minimalize(std::move(gens)));
}

MonomialIdeal MonomialIdeal::from_base_set(const BaseSet& b) {
  return from_generators(b.ground_size(), b.vectors());
}

MonomialIdeal MonomialIdeal::prime(int nvars, Subset support) {
  std::vector<ExponentVector> gens;
  for (int i = 0; i < nvars; ++i)
    if (support >> i & 1u) {
      ExponentVector g(nvars, 0);
      g[i] = 1;
      gens.push_back(std::move(g));
    }
  return from_generators(nvars, std::move(gens));
}

bool MonomialIdeal::contains(const ExponentVector& monomial) const {
  for (const auto& g : gens_)
    if (divides(g, monomial)) return true;
  return false;
}

ExponentVector MonomialIdeal::lcm_of_generators() const {
  if (gens_.empty()) throw InputError("lcm of generators: zero ideal");
  ExponentVector l(nvars_, 0);
  for (const auto& g : gens_) l = lcm(l, g);
  return l;
}

bool MonomialIdeal::equals_prime(Subset support) const {
  if (static_cast<int>(gens_.size()) != std::popcount(support)) return false;
  for (const auto& g : gens_) {
    int nz = -1;
    for (int i = 0; i < nvars_; ++i) {
      if (g[i] == 0) continue;
      if (g[i] > 1 || nz >= 0) return false;
      nz = i;
    }
    if (nz < 0 || !(support >> nz & 1u)) return false;
  }
  return true;
}

MonomialIdeal product(const MonomialIdeal& i, const MonomialIdeal& j) {
  if (i.nvars() != j.nvars()) throw InputError("product: variable count mismatch");
  std::vector<ExponentVector> gens;
  gens.reserve(i.generators().size() * j.generators().size());
  for (const auto& a : i.generators())
    for (const auto& b : j.generators()) {
      ExponentVector g(a);
      for (int t = 0; t < i.nvars(); ++t) g[t] += b[t];
      gens.push_back(std::move(g));
    }
  return MonomialIdeal::from_generators(i.nvars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& i, int k) {
  if (k < 1) throw InputError("power: exponent must be positive");
  MonomialIdeal acc = i;
  for (int t = 1; t < k; ++t) acc = product(acc, i);
  return acc;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& i, const ExponentVector& m) {
  std::vector<ExponentVector> gens;
  gens.reserve(i.generators().size());
  for (const auto& g : i.generators()) {
    ExponentVector q(i.nvars());
    for (int t = 0; t < i.nvars(); ++t) q[t] = std::max(g[t] - m[t], 0);
    gens.push_back(std::move(q));
  }
  return MonomialIdeal::from_generators(i.nvars(), std::move(gens));
}

MonomialIdeal intersect(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty()) throw InputError("intersect: empty list");
  MonomialIdeal acc = ideals.front();
  for (std::size_t t = 1; t < ideals.size(); ++t) {
    if (ideals[t].nvars() != acc.nvars())
      throw InputError("intersect: variable count mismatch");
    std::vector<ExponentVector> gens;
    gens.reserve(acc.generators().size() * ideals[t].generators().size());
    for (const auto& a : acc.generators())
      for (const auto& b : ideals[t].generators()) gens.push_back(lcm(a, b));
    acc = MonomialIdeal::from_generators(acc.nvars(), std::move(gens));
  }
  return acc;
}

MonomialIdeal monomial_localization(const MonomialIdeal& ideal, Subset support) {
  std::vector<int> vars;
  for (int i = 0; i < ideal.nvars(); ++i)
    if (support >> i & 1u) vars.push_back(i);
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    ExponentVector image(vars.size());
    for (std::size_t t = 0; t < vars.size(); ++t) image[t] = g[vars[t]];
    gens.push_back(std::move(image));
  }
  return MonomialIdeal::from_generators(static_cast<int>(vars.size()), std::move(gens));
}

Subset ideal_support(const MonomialIdeal& ideal) {
  Subset s = 0;
  for (const auto& g : ideal.generators())
    for (int i = 0; i < ideal.nvars(); ++i)
      if (g[i] > 0) s |= Subset{1} << i;
  return s;
}

}  // namespace plp
