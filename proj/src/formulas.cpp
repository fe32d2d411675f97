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

#include "plp/formulas.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "plp/oracles.hpp"

namespace plp {
namespace {

Subset interval_mask(int s, int t) {  // 1-based inclusive
  Subset m = 0;
  for (int i = s; i <= t; ++i) m |= Subset{1} << (i - 1);
  return m;
}

// Prop-4.7-style data: an LP window chain alpha_1..alpha_m <= beta_1..beta_m
// with alpha_m = beta_m = top degree. Indices are local (1-based).
struct LpWindows {
  std::vector<int> alpha, beta;

  int a(int i) const { return i == 0 ? 0 : alpha[i - 1]; }
  int b(int i) const { return i == 0 ? 0 : beta[i - 1]; }
  int size() const { return static_cast<int>(alpha.size()); }
};

// Associated primes of an LP ideal: P_[s,t] is associated iff
// alpha_i < beta_i on [s,t-1], beta_{s-1} < beta_s, beta_{s-1} < alpha_t and
// alpha_{t-1} < alpha_t (beta_0 = alpha_0 = 0). The exponent d_P is
// alpha_t - beta_{s-1}.
std::vector<std::pair<std::pair<int, int>, int>> lp_ass_intervals(const LpWindows& w) {
  std::vector<std::pair<std::pair<int, int>, int>> out;
  const int m = w.size();
  for (int s = 1; s <= m; ++s) {
    if (!(w.b(s - 1) < w.b(s))) continue;
    bool strict = true;
    for (int t = s; t <= m; ++t) {
      if (t > s && !(w.a(t - 1) < w.b(t - 1))) strict = false;
      if (!strict) break;
      if (w.b(s - 1) < w.a(t) && w.a(t - 1) < w.a(t))
        out.push_back({{s, t}, w.a(t) - w.b(s - 1)});
    }
  }
  return out;
}

int lp_depth(const LpWindows& w) {
  int eq = 0;
  for (int i = 1; i < w.size(); ++i)
    if (w.a(i) == w.b(i)) ++eq;
  return eq;
}

struct RightView {
  int k = 0;      // 1-based boundary
  int n = 0;
  int d = 0;
  std::vector<int> alpha, beta;  // on [1,k]
  std::vector<int> box;          // b_{k+1}..b_n
  int box_sum = 0;
};

RightView right_view(const PlpSpec& spec, int k) {
  RightView v;
  v.k = k;
  v.n = spec.n();
  v.d = spec.d();
  v.alpha.assign(spec.prefix_min().begin(), spec.prefix_min().begin() + k);
  v.beta.assign(spec.prefix_max().begin(), spec.prefix_max().begin() + k);
  v.box.assign(spec.upper().begin() + k, spec.upper().end());
  for (int b : v.box) v.box_sum += b;
  return v;
}

void append_shifted(const std::vector<std::pair<std::pair<int, int>, int>>& intervals,
                    int offset, char clause, std::vector<AssEntry>* out) {
  for (const auto& [st, exp] : intervals)
    out->push_back({interval_mask(offset + st.first, offset + st.second), clause, exp});
}

// Associated primes of the Veronese tail {0 <= u_i <= box_i, |u| = degree}
// living on 1-based variables [lo, hi]: P_B for nonempty B with
// 1 <= degree - box(complement) <= box(B) - |B| + 1.
void veronese_ass(const std::vector<int>& box, int degree, int lo, char clause,
                  std::vector<AssEntry>* out) {
  const int m = static_cast<int>(box.size());
  int total = 0;
  for (int b : box) total += b;
  for (Subset bset = 1; bset < (Subset{1} << m); ++bset) {
    int in = 0, cnt = 0;
    for (int i = 0; i < m; ++i)
      if (bset >> i & 1u) {
        in += box[i];
        ++cnt;
      }
    int local = degree - (total - in);  // degree of the localization at B
    if (1 <= local && local <= in - cnt + 1) {
      Subset support = 0;
      for (int i = 0; i < m; ++i)
        if (bset >> i & 1u) support |= Subset{1} << (lo - 1 + i);
      out->push_back({support, clause, local});
    }
  }
}

// Clauses for a right block with strict windows (alpha_i < beta_i on [1,k'])
// on 1-based variables [lo, n]; `view` holds the block-local data.
void strict_right_ass(const RightView& v, int lo, std::vector<AssEntry>* out) {
  const int kk = v.k;
  auto alpha = [&v](int i) { return i == 0 ? 0 : v.alpha[i - 1]; };
  auto beta = [&v](int i) { return i == 0 ? 0 : v.beta[i - 1]; };

  // (a) intervals inside the window part. The localization I([1,k]) is the
  // LP ideal of degree D1 = max(alpha_k, d - box_sum) with windows capped at
  // D1; D1 = 0 means the localization is the unit ideal.
  const int d1 = std::max(alpha(kk), v.d - v.box_sum);
  if (d1 >= 1) {
    LpWindows w;
    for (int i = 1; i < kk; ++i) {
      w.alpha.push_back(alpha(i));
      w.beta.push_back(std::min(beta(i), d1));
    }
    w.alpha.push_back(d1);
    w.beta.push_back(d1);
    append_shifted(lp_ass_intervals(w), lo - 1, 'a', out);
  }

  // (b) subsets of the box part: the localization is Veronese of degree
  // d - beta_k - box(complement).
  veronese_ass(v.box, v.d - beta(kk), lo + kk, 'b', out);

  // (c) [s,k] joined with a nonempty box subset.
  const int m = static_cast<int>(v.box.size());
  for (int s = 1; s <= kk; ++s) {
    if (!(beta(s - 1) < beta(s))) continue;
    for (Subset bset = 1; bset < (Subset{1} << m); ++bset) {
      int in = 0, cnt = 0;
      for (int i = 0; i < m; ++i)
        if (bset >> i & 1u) {
          in += v.box[i];
          ++cnt;
        }
      int outsum = v.box_sum - in;
      if (!(outsum + std::max(beta(s - 1), alpha(kk)) < v.d)) continue;
      if (!(v.d <= beta(kk) + v.box_sum - cnt)) continue;
      Subset support = interval_mask(lo - 1 + s, lo - 1 + kk);
      for (int i = 0; i < m; ++i)
        if (bset >> i & 1u) support |= Subset{1} << (lo + kk - 1 + i);
      out->push_back({support, 'c', v.d - beta(s - 1) - outsum});
    }
  }
}

// Splits a right spec at the window equality indices and collects Ass from
// the LP blocks and the tail block.
std::vector<AssEntry> right_ass(const PlpSpec& spec, int k) {
  std::vector<AssEntry> entries;
  const auto& alpha = spec.prefix_min();
  const auto& beta = spec.prefix_max();

  if (alpha[k - 1] == spec.d()) {
    // Degenerate: the window part absorbs the whole degree and the box
    // variables are dead; I is the LP ideal on [1,k] (tensored up).
    LpWindows w;
    for (int i = 0; i < k - 1; ++i) {
      w.alpha.push_back(alpha[i]);
      w.beta.push_back(beta[i]);
    }
    w.alpha.push_back(spec.d());
    w.beta.push_back(spec.d());
    append_shifted(lp_ass_intervals(w), 0, 'a', &entries);
    return entries;
  }

  std::vector<int> eq;  // 1-based window equality indices
  for (int i = 1; i <= k; ++i)
    if (alpha[i - 1] == beta[i - 1]) eq.push_back(i);

  int prev = 0, base = 0;  // block start (exclusive) and its beta offset
  for (int e : eq) {
    LpWindows w;
    for (int i = prev + 1; i <= e; ++i) {
      w.alpha.push_back(std::max(alpha[i - 1] - base, 0));
      w.beta.push_back(beta[i - 1] - base);
    }
    append_shifted(lp_ass_intervals(w), prev, 'L', &entries);
    prev = e;
    base = beta[e - 1];
  }

  if (prev == k) {
    // Tail is pure Veronese on the box variables.
    std::vector<int> box(spec.upper().begin() + k, spec.upper().end());
    veronese_ass(box, spec.d() - base, k + 1, 'b', &entries);
    return entries;
  }

  RightView tail;
  tail.k = k - prev;
  tail.n = spec.n() - prev;
  tail.d = spec.d() - base;
  for (int i = prev + 1; i <= k; ++i) {
    tail.alpha.push_back(std::max(alpha[i - 1] - base, 0));
    tail.beta.push_back(beta[i - 1] - base);
  }
  tail.box.assign(spec.upper().begin() + k, spec.upper().end());
  for (int b : tail.box) tail.box_sum += b;
  strict_right_ass(tail, prev + 1, &entries);
  return entries;
}

std::vector<AssEntry> left_ass(const PlpSpec& spec, int k) {
  std::vector<AssEntry> entries;
  const int n = spec.n();
  const auto& b = spec.upper();
  auto alpha = [&spec, k](int i) { return i <= k ? 0 : spec.prefix_min()[i - 1]; };
  auto beta = [&spec](int i) { return spec.prefix_max()[i - 1]; };

  // (a) B union [k+1,t] for B inside the pruned part.
  for (int t = k + 1; t <= n; ++t) {
    if (!(alpha(t - 1) < alpha(t))) continue;
    bool strict = true;
    for (int i = k + 1; i < t && strict; ++i)
      if (!(alpha(i) < beta(i))) strict = false;
    if (!strict) continue;
    const int cap = std::min(alpha(t), beta(k + 1));
    for (Subset bs = 0; bs < (Subset{1} << k); ++bs) {
      int outsum = 0;
      for (int i = 0; i < k; ++i)
        if (!(bs >> i & 1u)) outsum += b[i];
      if (outsum < cap)
        entries.push_back({bs | interval_mask(k + 1, t), 'a', alpha(t) - outsum});
    }
  }

  // (b) intervals inside [k+2, n].
  for (int s = k + 2; s <= n; ++s) {
    if (!(beta(s - 1) < beta(s))) continue;
    bool strict = true;
    for (int t = s; t <= n; ++t) {
      if (t > s && !(alpha(t - 1) < beta(t - 1))) strict = false;
      if (!strict) break;
      if (beta(s - 1) < alpha(t) && alpha(t - 1) < alpha(t))
        entries.push_back({interval_mask(s, t), 'b', alpha(t) - beta(s - 1)});
    }
  }
  return entries;
}

void sort_entries(std::vector<AssEntry>* entries) {
  std::sort(entries->begin(), entries->end(), [](const AssEntry& x, const AssEntry& y) {
    int px = std::popcount(x.support), py = std::popcount(y.support);
    if (px != py) return px > py;
    return x.support < y.support;
  });
  entries->erase(std::unique(entries->begin(), entries->end(),
                             [](const AssEntry& x, const AssEntry& y) {
                               return x.support == y.support;
                             }),
                 entries->end());
}

}  // namespace

int slack_count(const PlpSpec& spec, const ExponentVector& u) {
  if (!spec.lower_is_zero()) throw InputError("N(u): spec must be normalized (a = 0)");
  if (!spec.member(u)) throw InputError("N(u): u is not a member of the base set");
  int count = 0, prefix = 0;
  for (int i = 0; i + 1 <= spec.n() - 1; ++i) {
    prefix += u[i];
    if (u[i] < spec.upper()[i] && prefix < spec.prefix_max()[i]) ++count;
  }
  return count;
}

DepthReport depth_formula(const PlpSpec& spec, std::int64_t max_bases) {
  if (!spec.lower_is_zero()) {
    if (modulus(spec.lower()) == spec.d()) {
      // Principal ideal x^a.
      DepthReport r;
      r.depth = spec.n() - 1;
      r.family = Family::kGeneral;
      return r;
    }
    return depth_formula(normalize(spec).spec, max_bases);
  }
  Classification cls = classify(spec);
  DepthReport r;

  if (cls.has(Family::kLeft)) {
    const int k = cls.left_k;
    int eq = 0;
    for (int i = k + 1; i <= spec.n() - 1; ++i)
      if (spec.prefix_min()[i - 1] == spec.prefix_max()[i - 1]) ++eq;
    r.depth = eq;
    r.family = Family::kLeft;
    r.equality_count = eq;
    return r;
  }

  if (cls.has(Family::kRight)) {
    const int k = cls.right_k;
    RightView v = right_view(spec, k);
    r.family = Family::kRight;
    if (v.alpha[k - 1] == v.d) {
      // Dead box variables; LP block depth plus the free variables.
      LpWindows w;
      for (int i = 0; i < k - 1; ++i) {
        w.alpha.push_back(v.alpha[i]);
        w.beta.push_back(v.beta[i]);
      }
      w.alpha.push_back(v.d);
      w.beta.push_back(v.d);
      r.depth = lp_depth(w) + (spec.n() - k);
      r.equality_count = lp_depth(w);
      r.delta = 1;
      return r;
    }
    int s = 0;
    for (int i = 0; i < k; ++i)
      if (v.alpha[i] == v.beta[i]) ++s;
    int delta = v.alpha[k - 1] == v.beta[k - 1] ? 1 : 0;
    r.depth = s + std::max(0, v.d - v.beta[k - 1] - v.box_sum + spec.n() - k - delta);
    r.equality_count = s;
    r.delta = delta;
    return r;
  }

  // Generic: n - 1 - max N(u) over the enumerated base set.
  BaseSet bases = generate_bases(spec, max_bases);
  int best = -1;
  ExponentVector argmax;
  for (const auto& u : bases.vectors()) {
    int nu = slack_count(spec, u);
    if (nu > best) {
      best = nu;
      argmax = u;
    }
  }
  r.depth = spec.n() - 1 - best;
  r.family = cls.has(Family::kLatticePath) ? Family::kLatticePath : Family::kGeneral;
  r.argmax = argmax;
  r.max_slack = best;
  return r;
}

int dstab_formula(const PlpSpec& spec) {
  if (!spec.lower_is_zero()) {
    if (modulus(spec.lower()) == spec.d()) return 1;  // principal
    return dstab_formula(normalize(spec).spec);
  }
  Classification cls = classify(spec);
  if (cls.has(Family::kLeft)) return 1;
  if (cls.has(Family::kRight)) {
    const int k = cls.right_k;
    RightView v = right_view(spec, k);
    if (v.alpha[k - 1] == v.d) return 1;       // dead box variables
    if (v.d == v.beta[k - 1] + v.box_sum) return 1;
    int delta = v.alpha[k - 1] == v.beta[k - 1] ? 1 : 0;
    int gap = v.beta[k - 1] + v.box_sum - v.d;
    int num = spec.n() - k - delta;
    return std::max(1, (num + gap - 1) / gap);
  }
  if (cls.has(Family::kLatticePath)) return 1;
  throw InputError("dstab: no closed form for this family");
}

int astab_formula(const PlpSpec& spec) {
  if (!spec.lower_is_zero()) {
    if (modulus(spec.lower()) == spec.d()) return 1;
    return astab_formula(normalize(spec).spec);
  }
  Classification cls = classify(spec);
  if (cls.has(Family::kLeft)) return 1;
  if (cls.has(Family::kRight)) {
    const int k = cls.right_k;
    RightView v = right_view(spec, k);
    if (v.alpha[k - 1] == v.d) return 1;
    if (v.d == v.beta[k - 1] + v.box_sum) return 1;
    int delta = v.alpha[k - 1] == v.beta[k - 1] ? 1 : 0;
    int gap = v.beta[k - 1] + v.box_sum - v.d;
    int num = spec.n() - k - delta;
    return std::max(1, (num + gap - 1) / gap);
  }
  if (cls.has(Family::kLatticePath)) return 1;
  throw InputError("astab: no closed form for this family");
}

std::vector<Subset> AssReport::supports() const {
  std::vector<Subset> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.support);
  return out;
}

AssReport ass_formula(const PlpSpec& spec) {
  if (!spec.lower_is_zero())
    throw InputError("ass: closed forms require a normalized spec (a = 0)");
  Classification cls = classify(spec);
  AssReport report;

  if (cls.has(Family::kLeft)) {
    report.family = Family::kLeft;
    report.entries = left_ass(spec, cls.left_k);
  } else if (cls.has(Family::kRight)) {
    report.family = Family::kRight;
    report.entries = right_ass(spec, cls.right_k);
  } else if (cls.has(Family::kLatticePath)) {
    report.family = Family::kLatticePath;
    LpWindows w{spec.prefix_min(), spec.prefix_max()};
    append_shifted(lp_ass_intervals(w), 0, 'l', &report.entries);
  } else {
    throw InputError("ass: no closed form for this family (try the oracle)");
  }
  sort_entries(&report.entries);
  return report;
}

AssReport ass_infinity(const PlpSpec& spec) {
  if (!spec.lower_is_zero())
    throw InputError("ass-inf: closed forms require a normalized spec (a = 0)");
  Classification cls = classify(spec);
  if (cls.has(Family::kLeft) || cls.has(Family::kLatticePath)) return ass_formula(spec);
  if (!cls.has(Family::kRight)) throw InputError("ass-inf: no closed form for this family");
  int stable = astab_formula(spec);
  AssReport report = ass_formula(power_spec(spec, stable));
  report.family = Family::kRight;
  return report;
}

std::vector<PrimaryComponent> primary_decomposition(const PlpSpec& spec,
                                                    std::int64_t max_bases) {
  std::vector<PrimaryComponent> comps;
  std::vector<AssEntry> entries;
  bool have_formula = true;
  try {
    entries = ass_formula(spec).entries;
  } catch (const InputError&) {
    have_formula = false;
  }
  if (have_formula) {
    for (const auto& e : entries) comps.push_back({e.support, e.exponent});
    return comps;
  }
  // Oracle fallback: brute-force Ass plus localization degrees.
  MonomialIdeal ideal = MonomialIdeal::from_base_set(generate_bases(spec, max_bases));
  for (Subset support : ass_bruteforce(ideal)) {
    MonomialIdeal local = monomial_localization(ideal, support);
    int deg = modulus(local.generators().front());
    for (const auto& g : local.generators()) deg = std::min(deg, modulus(g));
    comps.push_back({support, deg});
  }
  std::sort(comps.begin(), comps.end(), [](const PrimaryComponent& x, const PrimaryComponent& y) {
    int px = std::popcount(x.support), py = std::popcount(y.support);
    if (px != py) return px > py;
    return x.support < y.support;
  });
  return comps;
}

MonomialIdeal component_intersection(int nvars, const std::vector<PrimaryComponent>& comps) {
  if (comps.empty()) throw InputError("component intersection: empty list");
  std::vector<MonomialIdeal> powers;
  powers.reserve(comps.size());
  for (const auto& c : comps) powers.push_back(power(MonomialIdeal::prime(nvars, c.support), c.exponent));
  return intersect(powers);
}

bool decomposition_cuts_ideal(const MonomialIdeal& ideal,
                              const std::vector<PrimaryComponent>& comps) {
  if (comps.empty()) return false;
  const int n = ideal.nvars();
  for (const auto& g : ideal.generators())
    for (const auto& c : comps)
      if (entry_sum(g, c.support) < c.exponent) return false;

  int emax = 0;
  for (const auto& c : comps) emax = std::max(emax, c.exponent);
  auto in_intersection = [&comps](const ExponentVector& w) {
    for (const auto& c : comps)
      if (entry_sum(w, c.support) < c.exponent) return false;
    return true;
  };
  // Minimal elements of the intersection have all entries <= emax.
  ExponentVector w(n, 0);
  for (;;) {
    if (in_intersection(w)) {
      bool minimal = true;
      for (int i = 0; i < n && minimal; ++i) {
        if (w[i] == 0) continue;
        --w[i];
        if (in_intersection(w)) minimal = false;
        ++w[i];
      }
      if (minimal && !ideal.contains(w)) return false;
    }
    int i = 0;
    while (i < n && w[i] == emax) w[i++] = 0;
    if (i == n) break;
    ++w[i];
  }
  return true;
}

std::string to_string(const PrimaryComponent& comp) {
  std::ostringstream out;
  out << subset_to_string(comp.support) << '^' << comp.exponent;
  return out.str();
}

}  // namespace plp
