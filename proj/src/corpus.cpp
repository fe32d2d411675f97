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

#include "plp/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "plp/document.hpp"
#include "plp/exchange.hpp"
#include "plp/lattice_path.hpp"
#include "plp/formulas.hpp"
#include "plp/monomial_ideal.hpp"
#include "plp/oracles.hpp"
#include "plp/rank.hpp"
#include "plp/sorting.hpp"

namespace plp {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int Rng::uniform(int lo, int hi) {
  return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

namespace {

// Nondecreasing chain of given length inside [lo, hi].
std::vector<int> random_chain(Rng& rng, int length, int lo, int hi) {
  std::vector<int> v(length);
  for (int& x : v) x = rng.uniform(lo, hi);
  std::sort(v.begin(), v.end());
  return v;
}

// Window chains: mixes tight windows (alpha close to beta) with wide ones so
// the corpus exercises both large base sets and forced-equality corners.
void random_windows(Rng& rng, int n, int d, std::vector<int>* alpha, std::vector<int>* beta) {
  int style = rng.uniform(0, 2);
  *alpha = random_chain(rng, n, 0, style == 1 ? std::max(0, d / 3) : d);
  *beta = random_chain(rng, n, style == 1 ? (2 * d) / 3 : 0, d);
  (*alpha)[n - 1] = (*beta)[n - 1] = d;
  for (int i = 0; i < n; ++i) (*beta)[i] = std::max((*beta)[i], (*alpha)[i]);
  for (int i = 1; i < n; ++i) (*beta)[i] = std::max((*beta)[i], (*beta)[i - 1]);
}

PlpSpec random_lp_spec(Rng& rng, int max_n, int max_d) {
  for (;;) {
    int n = rng.uniform(2, max_n);
    int d = rng.uniform(1, max_d);
    std::vector<int> alpha, beta;
    random_windows(rng, n, d, &alpha, &beta);
    try {
      return PlpSpec(n, d, std::vector<int>(n, 0), std::vector<int>(n, d), alpha, beta);
    } catch (const InputError&) {
    }
  }
}

PlpSpec random_general_spec(Rng& rng, int max_n, int max_d) {
  for (;;) {
    int n = rng.uniform(2, max_n);
    int d = rng.uniform(1, max_d);
    std::vector<int> a(n, 0), b(n);
    if (rng.uniform(0, 3) == 0)
      for (int& x : a) x = rng.uniform(0, 1);
    for (int i = 0; i < n; ++i) b[i] = rng.uniform(a[i], d);
    std::vector<int> alpha, beta;
    random_windows(rng, n, d, &alpha, &beta);
    try {
      return PlpSpec(n, d, a, b, alpha, beta);
    } catch (const InputError&) {
    }
  }
}

}  // namespace

PlpSpec random_left_spec(Rng& rng, int max_n, int max_d) {
  for (;;) {
    int n = rng.uniform(3, std::max(3, max_n));
    int d = rng.uniform(2, std::max(2, max_d));
    int k = rng.uniform(1, n - 1);
    std::vector<int> b(n, d);
    for (int i = 0; i < k; ++i) b[i] = rng.uniform(1, d);
    b[k - 1] = rng.uniform(1, d - 1);  // ensure pruning ends exactly at k
    std::vector<int> alpha(n, 0), beta(n, d);
    int style = rng.uniform(0, 2);
    std::vector<int> tail_alpha =
        random_chain(rng, n - k, 0, style == 1 ? std::max(0, d / 3) : d);
    std::vector<int> tail_beta = random_chain(rng, n - k, style == 1 ? (2 * d) / 3 : 1, d);
    tail_alpha[n - k - 1] = tail_beta[n - k - 1] = d;
    for (int i = 0; i < n - k; ++i) {
      tail_beta[i] = std::max(tail_beta[i], std::max(tail_alpha[i], 1));
      if (i > 0) tail_beta[i] = std::max(tail_beta[i], tail_beta[i - 1]);
    }
    for (int i = k; i < n; ++i) {
      alpha[i] = tail_alpha[i - k];
      beta[i] = tail_beta[i - k];
    }
    for (int i = 0; i < k; ++i) beta[i] = beta[k];
    try {
      return PlpSpec(n, d, std::vector<int>(n, 0), b, alpha, beta);
    } catch (const InputError&) {
    }
  }
}

PlpSpec random_right_spec(Rng& rng, int max_n, int max_d, bool strict_gap) {
  for (;;) {
    int n = rng.uniform(3, std::max(3, max_n));
    int d = rng.uniform(2, std::max(2, max_d));
    int k = rng.uniform(1, n - 1);
    std::vector<int> b(n, d);
    for (int i = k; i < n; ++i) b[i] = rng.uniform(1, d);
    b[k] = rng.uniform(1, d - 1);  // pruning starts exactly at k+1
    int style = rng.uniform(0, 2);
    std::vector<int> head_beta = random_chain(rng, k, style == 1 ? std::max(1, (2 * d) / 3) : 1, d);
    std::vector<int> head_alpha =
        random_chain(rng, k, 0, style == 1 ? std::max(0, d / 3) : d);
    for (int i = 0; i < k; ++i) head_alpha[i] = std::min(head_alpha[i], head_beta[i]);
    for (int i = 1; i < k; ++i) head_alpha[i] = std::max(head_alpha[i], head_alpha[i - 1]);
    std::vector<int> alpha(n), beta(n);
    for (int i = 0; i < k; ++i) {
      alpha[i] = head_alpha[i];
      beta[i] = head_beta[i];
    }
    for (int i = k; i < n - 1; ++i) {
      alpha[i] = head_alpha[k - 1];
      beta[i] = d;
    }
    alpha[n - 1] = beta[n - 1] = d;
    int box_sum = 0;
    for (int i = k; i < n; ++i) box_sum += b[i];
    if (d > head_beta[k - 1] + box_sum) continue;
    if (strict_gap && d >= head_beta[k - 1] + box_sum) continue;
    try {
      return PlpSpec(n, d, std::vector<int>(n, 0), b, alpha, beta);
    } catch (const InputError&) {
    }
  }
}

SplpSpec random_splp_spec(Rng& rng, int max_n, int max_d) {
  for (;;) {
    int n = rng.uniform(2, std::max(2, max_n));
    int d = rng.uniform(1, max_d);
    int k = rng.uniform(0, n - 2);
    std::vector<int> box(k);
    for (int& x : box) x = rng.uniform(1, d);
    std::vector<int> pm = random_chain(rng, n - 1 - k, 1, d);
    try {
      SplpSpec spec(n, d, k, box, pm);
      generate_bases(spec.to_plp_spec());
      return spec;
    } catch (const InputError&) {
    }
  }
}

BaseSet random_polymatroid_base_set_dim4(Rng& rng) {
  const int n = 4;
  const Subset full = 15;
  // rho = sum of capped modular pieces min(w_j, c_j(A)): nondecreasing and
  // submodular, so the lattice points of the base polytope form a base set.
  int pieces = rng.uniform(1, 3);
  std::vector<int> values(16, 0);
  for (int p = 0; p < pieces; ++p) {
    int cap = rng.uniform(1, 3);
    std::vector<int> c(n);
    for (int& x : c) x = rng.uniform(0, 2);
    for (Subset a = 1; a <= full; ++a) {
      int s = 0;
      for (int i = 0; i < n; ++i)
        if (a >> i & 1u) s += c[i];
      values[a] += std::min(cap, s);
    }
  }
  int d = values[full];
  std::vector<ExponentVector> bases;
  ExponentVector u(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      if (left == 0) {
        for (Subset a = 1; a <= full; ++a)
          if (entry_sum(u, a) > values[a]) return;
        bases.push_back(u);
      }
      return;
    }
    for (int e = 0; e <= std::min(left, values[Subset{1} << i]); ++e) {
      u[i] = e;
      self(self, i + 1, left - e);
    }
    u[i] = 0;
  };
  if (d == 0) return BaseSet(n, {ExponentVector(n, 0)});
  rec(rec, 0, d);
  return BaseSet(n, std::move(bases));
}

std::vector<PlpSpec> random_spec_corpus(std::uint64_t seed, int count, int max_n, int max_d) {
  Rng rng(seed);
  std::vector<PlpSpec> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    switch (i % 4) {
      case 0: out.push_back(random_left_spec(rng, max_n, max_d)); break;
      case 1: out.push_back(random_right_spec(rng, max_n, max_d, rng.uniform(0, 1) == 0)); break;
      case 2: out.push_back(random_lp_spec(rng, max_n, max_d)); break;
      default: out.push_back(random_general_spec(rng, max_n, max_d)); break;
    }
  }
  return out;
}

namespace {

struct CheckContext {
  const PlpSpec& spec;
  std::ostringstream& report;
  int& mismatches;

  void mismatch(const std::string& what) {
    ++mismatches;
    report << "mismatch: " << what << "\n" << print_spec(spec);
  }
};

void verify_one(const PlpSpec& spec, CheckContext& ctx) {
  BaseSet bases = generate_bases(spec);

  if (!is_base_set(bases)) ctx.mismatch("generated set fails the symmetric exchange axiom");
  if (!check_exchange(bases, ExchangeKind::kTwoSided).holds)
    ctx.mismatch("generated set fails the two-sided strong exchange property");
  if (!is_sortable(bases).sortable) ctx.mismatch("generated set is not sortable");
  if (!exchange_fiber_connected(bases).connected)
    ctx.mismatch("an exchange fiber is disconnected");
  if (!sorted_count_equals_sumset(bases, 2))
    ctx.mismatch("sorted pair count differs from |B+B|");
  if (spec.n() <= 10) {
    RankFunction rho = rank_function(bases);
    if (!rho.is_nondecreasing() || !rho.is_submodular())
      ctx.mismatch("rank function violates monotonicity or submodularity");
  }

  MonomialIdeal ideal = MonomialIdeal::from_base_set(bases);
  DepthReport depth = depth_formula(spec);
  LinearQuotientReport lex = linear_quotient_depth(ideal, MonomialOrder::kLex);
  if (depth.depth != lex.depth)
    ctx.mismatch("depth formula " + std::to_string(depth.depth) + " vs linear quotients " +
                 std::to_string(lex.depth));
  if (linear_quotient_depth(ideal, MonomialOrder::kRevLex).depth != lex.depth)
    ctx.mismatch("lex and revlex linear quotient depths disagree");

  if (!spec.lower_is_zero()) {
    // Shifted spec: the normalized residual must regenerate the translate.
    if (modulus(spec.lower()) < spec.d()) {
      NormalizedSpec norm = normalize(spec);
      BaseSet residual = generate_bases(norm.spec);
      std::vector<ExponentVector> raised;
      for (auto u : residual.vectors()) {
        for (int i = 0; i < spec.n(); ++i) u[i] += norm.shift[i];
        raised.push_back(std::move(u));
      }
      if (BaseSet(spec.n(), raised) != bases)
        ctx.mismatch("normalization does not translate the base set");
    }
    return;  // family formulas want normalized specs
  }

  Classification cls = classify(spec);
  if (cls.has(Family::kLatticePath)) {
    TransversalPresentation t = lp_to_transversal(spec);
    if (generate_bases(transversal_to_lp(t)) != bases)
      ctx.mismatch("transversal round trip changes the base set");
  }
  if (cls.has(Family::kLeft) || cls.has(Family::kRight) || cls.has(Family::kLatticePath)) {
    auto expected = ass_bruteforce(ideal);
    auto got = ass_formula(spec).supports();
    std::set<Subset> got_set(got.begin(), got.end());
    if (got_set != expected) ctx.mismatch("ass formula differs from the witness-search oracle");
    bool maximal_assoc = expected.count((Subset{1} << spec.n()) - 1) > 0;
    if (maximal_assoc != (lex.depth == 0))
      ctx.mismatch("maximal-ideal membership disagrees with depth zero");
    // Strong intersection type: the components cut out the ideal again.
    auto comps = primary_decomposition(spec);
    if (!decomposition_cuts_ideal(ideal, comps))
      ctx.mismatch("primary decomposition does not intersect back to the ideal");
  }

  for (int k = 2; k <= 3; ++k) {
    BaseSet powered = generate_bases(power_spec(spec, k));
    if (powered != iterated_sumset(bases, k)) {
      ctx.mismatch("power spec base set differs from the " + std::to_string(k) +
                   "-fold sumset");
      continue;
    }
    const auto& probe = powered[powered.size() / 2];
    auto parts = split_power_generator(spec, probe, k);
    ExponentVector sum(spec.n(), 0);
    for (const auto& part : parts) {
      if (!spec.member(part)) ctx.mismatch("split part is not a spec member");
      for (int i = 0; i < spec.n(); ++i) sum[i] += part[i];
    }
    if (sum != probe) ctx.mismatch("split parts do not sum to the generator");
  }
}

}  // namespace

VerifyOutcome verify_random_corpus(std::uint64_t seed, int count, int max_n, int max_d) {
  VerifyOutcome outcome;
  auto corpus = random_spec_corpus(seed, count, max_n, max_d);

  // Worker pool over spec indices; the report is assembled in index order so
  // the output is deterministic regardless of scheduling.
  std::vector<std::string> reports(corpus.size());
  std::vector<int> mismatches(corpus.size(), 0);
  std::atomic<std::size_t> next{0};
  unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      std::ostringstream report;
      CheckContext ctx{corpus[i], report, mismatches[i]};
      try {
        verify_one(corpus[i], ctx);
      } catch (const std::exception& err) {
        ctx.mismatch(std::string("exception: ") + err.what());
      }
      reports[i] = report.str();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::ostringstream merged;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    merged << reports[i];
    outcome.mismatches += mismatches[i];
    ++outcome.specs_checked;
  }
  outcome.report = merged.str();
  return outcome;
}

}  // namespace plp
