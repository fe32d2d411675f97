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
//
// End-to-end acceptance suite: one pass/fail line per criterion, exact
// integer comparisons throughout, exit code = number of failures.

#include <algorithm>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "plp/corpus.hpp"
#include "plp/document.hpp"
#include "plp/exchange.hpp"
#include "plp/formulas.hpp"
#include "plp/gorenstein.hpp"
#include "plp/lattice_path.hpp"
#include "plp/monomial_ideal.hpp"
#include "plp/oracles.hpp"
#include "plp/plp_spec.hpp"
#include "plp/rank.hpp"
#include "plp/sorting.hpp"

using plp::BaseSet;
using plp::ExponentVector;
using plp::MonomialIdeal;
using plp::PlpSpec;
using plp::Subset;

namespace {

int failures = 0;

struct Criterion {
  int id;
  const char* label;
  std::ostringstream notes;
  bool ok = true;

  Criterion(int id_in, const char* label_in) : id(id_in), label(label_in) {}

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      notes << "    failed: " << what << '\n';
    }
  }

  ~Criterion() {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << label << '\n';
    if (!ok) {
      std::cout << notes.str();
      ++failures;
    }
  }
};

PlpSpec example512() {
  return PlpSpec(5, 5, {0, 0, 0, 0, 0}, {2, 2, 3, 5, 5}, {0, 0, 0, 2, 5}, {4, 4, 4, 4, 5});
}

BaseSet prime_product_bases(int n, const std::vector<std::vector<int>>& supports) {
  std::vector<ExponentVector> acc{ExponentVector(n, 0)};
  for (const auto& support : supports) {
    std::vector<ExponentVector> next;
    for (const auto& u : acc)
      for (int i : support) {
        ExponentVector w(u);
        ++w[i - 1];
        next.push_back(std::move(w));
      }
    acc = std::move(next);
  }
  return BaseSet(n, std::move(acc));
}

std::set<Subset> support_set(const std::vector<Subset>& v) { return {v.begin(), v.end()}; }

int oracle_depth(const BaseSet& b) {
  return plp::linear_quotient_depth(MonomialIdeal::from_base_set(b), plp::MonomialOrder::kLex)
      .depth;
}

// ---- criterion 1: Example 5.12 end to end ------------------------------

void criterion_1() {
  Criterion c(1, "worked five-variable decomposition, formulas vs oracle");
  const std::string doc_text =
      "polymatroid plp\nn 5\nd 5\na 0 0 0 0 0\nb 2 2 3 5 5\n"
      "alpha 0 0 0 2 5\nbeta 4 4 4 4 5\n";
  auto doc = plp::parse_document(doc_text);
  c.require(doc.is_plp(), "document parses to a plp spec");
  PlpSpec spec = doc.plp();
  c.require(spec == example512(), "parsed spec matches the embedded one");

  const std::set<Subset> expected_supports{0b11111, 0b01111, 0b11011,
                                           0b11110, 0b11101, 0b10000};
  auto report = plp::ass_formula(spec);
  c.require(support_set(report.supports()) == expected_supports,
            "ass formula returns the six supports");

  std::set<std::pair<Subset, int>> expected_components{
      {0b11111, 5}, {0b01111, 2}, {0b11011, 2}, {0b11110, 3}, {0b11101, 3}, {0b10000, 1}};
  auto comps = plp::primary_decomposition(spec);
  std::set<std::pair<Subset, int>> got;
  for (const auto& comp : comps) got.insert({comp.support, comp.exponent});
  c.require(got == expected_components, "decomposition lists the six components");

  auto ideal = MonomialIdeal::from_base_set(plp::generate_bases(spec));
  c.require(plp::component_intersection(5, comps) == ideal,
            "intersecting the components reproduces the ideal");
  c.require(plp::ass_bruteforce(ideal) == expected_supports, "witness-search oracle agrees");
}

// ---- criterion 2: lattice path round trip ------------------------------

void criterion_2() {
  Criterion c(2, "lattice path data to interval primes and back");
  plp::LatticePath upper(8, 5, {1, 2, 3, 7});
  plp::LatticePath lower(8, 5, {3, 7, 10, 11});
  PlpSpec spec = plp::lp_spec_from_paths(upper, lower);
  auto t = plp::lp_to_transversal(spec);
  std::vector<std::pair<int, int>> expected{{1, 3}, {1, 6}, {1, 8}, {4, 8}};
  c.require(t.factors == expected, "transversal is P[1,3] P[1,6] P[1,8] P[4,8]");

  PlpSpec back = plp::transversal_to_lp(t);
  c.require(plp::generate_bases(back) == plp::generate_bases(spec),
            "round trip preserves the base set");
  c.require(plp::lp_to_transversal(back).factors == expected,
            "round trip preserves the factors");

  auto sigma = plp::path_from_east_vector(8, 5, {2, 3, 3, 3, 5, 5, 5});
  c.require(plp::path_monomial(sigma) == ExponentVector{1, 1, 0, 0, 2, 0, 0, 0},
            "marked path monomial is x1 x2 x5^2");
}

// ---- criterion 3: spanning tree system equivalence ---------------------

// 2x4 grid graph; edge e1..e10 as in the worked example: verticals
// 1,4,7,10, top rungs 2,5,8, bottom rungs 3,6,9.
const int kGridEdges[10][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4},
                               {3, 5}, {4, 5}, {4, 6}, {5, 7}, {6, 7}};

bool is_spanning_tree(Subset edges) {
  // 8 vertices, 7 edges, connected and acyclic.
  int parent[8];
  for (int i = 0; i < 8; ++i) parent[i] = i;
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int merged = 0;
  for (int e = 0; e < 10; ++e) {
    if (!(edges >> e & 1u)) continue;
    int a = find(kGridEdges[e][0]), b = find(kGridEdges[e][1]);
    if (a == b) return false;
    parent[a] = b;
    ++merged;
  }
  return merged == 7;
}

void criterion_3() {
  Criterion c(3, "grid graph spanning trees match both inequality systems");
  std::vector<ExponentVector> from_tree_system;
  std::vector<ExponentVector> from_trees;
  for (Subset mask = 0; mask < (1u << 10); ++mask) {
    ExponentVector u(10, 0);
    int total = 0;
    for (int e = 0; e < 10; ++e)
      if (mask >> e & 1u) {
        u[e] = 1;
        ++total;
      }
    if (total != 7) continue;
    auto window = [&u](int lo, int hi) {  // 1-based inclusive
      int s = 0;
      for (int i = lo; i <= hi; ++i) s += u[i - 1];
      return s;
    };
    bool tree_system = window(1, 4) <= 3 && window(1, 7) <= 5 && window(4, 7) <= 3 &&
                       window(7, 10) <= 3 && window(4, 10) <= 5;
    if (tree_system) from_tree_system.push_back(u);
    if (is_spanning_tree(mask)) from_trees.push_back(u);
  }
  BaseSet tree_bases(10, from_trees);
  c.require(BaseSet(10, from_tree_system) == tree_bases,
            "five-inequality system enumerates the spanning trees");

  PlpSpec plp_system(10, 7, ExponentVector(10, 0), ExponentVector(10, 1),
                     {0, 0, 2, 2, 2, 4, 4, 4, 4, 7}, {3, 3, 3, 3, 5, 5, 5, 7, 7, 7});
  BaseSet from_plp = plp::generate_bases(plp_system);
  c.require(from_plp == tree_bases, "four-inequality PLP system is equivalent");
  c.require(from_plp.size() == static_cast<int>(from_trees.size()),
            "counts agree with the exhaustive enumerator");
  c.require(plp::is_base_set(from_plp), "the tree set is a base set");
  c.require(plp::check_exchange(from_plp, plp::ExchangeKind::kTwoSided).holds,
            "two-sided strong exchange holds");
}

// ---- criterion 4: the crossing product needs a permutation -------------

void criterion_4() {
  Criterion c(4, "crossing prime product is PLP only up to permutation");
  BaseSet b = prime_product_bases(4, {{1, 3}, {2, 4}});
  c.require(plp::check_exchange(b, plp::ExchangeKind::kTwoSided).holds,
            "two-sided strong exchange holds");
  c.require(!plp::is_plp_representable(b, false).representable,
            "not representable as-is");
  auto with_perm = plp::is_plp_representable(b, true);
  c.require(with_perm.representable, "representable up to permutation");
  c.require(with_perm.witness_permutation.has_value() &&
                *with_perm.witness_permutation == std::vector<int>{0, 2, 1, 3},
            "the witness swaps coordinates 2 and 3");
}

// ---- criterion 5: an LP product that is not LP --------------------------

void criterion_5() {
  Criterion c(5, "product of LP ideals escaping the LP family");
  PlpSpec i1(3, 5, {0, 0, 0}, {5, 5, 5}, {0, 3, 5}, {1, 4, 5});
  PlpSpec i2(3, 1, {0, 0, 0}, {1, 1, 1}, {0, 0, 1}, {1, 1, 1});
  BaseSet prod = plp::polymatroidal_sum(plp::generate_bases(i1), plp::generate_bases(i2));
  c.require(!plp::is_lp_representable(prod).representable,
            "prefix-window re-derivation fails to recover the product");
}

// ---- criterion 6: one-sided failures of a shifted product ---------------

void criterion_6() {
  Criterion c(6, "interval product sum fails both one-sided properties");
  BaseSet cset = prime_product_bases(4, {{2, 3}, {1, 2, 3, 4}});
  BaseSet sum = plp::polymatroidal_sum(BaseSet(4, {ExponentVector(4, 0)}), cset);
  c.require(!plp::check_exchange(sum, plp::ExchangeKind::kLeftStrong).holds,
            "left-sided check fails");
  c.require(!plp::check_exchange(sum, plp::ExchangeKind::kRightStrong).holds,
            "right-sided check fails");
}

// ---- criterion 7: randomized property suite ------------------------------

void criterion_7() {
  Criterion c(7, "randomized formula-vs-oracle suite (200 specs, n<=6, d<=6)");
  auto outcome = plp::verify_random_corpus(88911, 200, 6, 6);
  c.require(outcome.specs_checked == 200, "200 specs checked");
  c.require(outcome.mismatches == 0,
            "zero mismatches; report:\n" + outcome.report);
}

// ---- criterion 8: stability indices --------------------------------------

void criterion_8() {
  Criterion c(8, "dstab/astab closed forms match oracle sweeps");
  plp::Rng rng(424242);
  int right_checked = 0;
  while (right_checked < 20) {
    PlpSpec spec = plp::random_right_spec(rng, 4, 3, /*strict_gap=*/true);
    int dstab = plp::dstab_formula(spec);
    int astab = plp::astab_formula(spec);
    if (dstab != astab) {
      c.require(false, "dstab != astab on a right spec:\n" + plp::print_spec(spec));
      return;
    }
    std::vector<int> depths;
    std::vector<std::set<Subset>> asses;
    const int sweep = astab + 2;
    for (int m = 1; m <= sweep; ++m) {
      BaseSet powered = plp::generate_bases(plp::power_spec(spec, m));
      depths.push_back(oracle_depth(powered));
      asses.push_back(plp::ass_bruteforce(MonomialIdeal::from_base_set(powered)));
    }
    auto measure = [sweep](auto& values) {
      int stable = sweep;
      for (int m = sweep - 1; m >= 1; --m) {
        if (!(values[m - 1] == values[sweep - 1])) break;
        stable = m;
      }
      return stable;
    };
    if (measure(depths) != dstab)
      c.require(false, "measured dstab " + std::to_string(measure(depths)) + " vs formula " +
                           std::to_string(dstab) + ":\n" + plp::print_spec(spec));
    if (measure(asses) != astab)
      c.require(false, "measured astab " + std::to_string(measure(asses)) + " vs formula " +
                           std::to_string(astab) + ":\n" + plp::print_spec(spec));
    ++right_checked;
  }

  int left_checked = 0;
  while (left_checked < 20) {
    PlpSpec spec = plp::random_left_spec(rng, 4, 3);
    if (plp::dstab_formula(spec) != 1 || plp::astab_formula(spec) != 1) {
      c.require(false, "left closed forms are not 1:\n" + plp::print_spec(spec));
      return;
    }
    BaseSet b1 = plp::generate_bases(spec);
    std::set<Subset> a1 = plp::ass_bruteforce(MonomialIdeal::from_base_set(b1));
    int d1 = oracle_depth(b1);
    for (int m = 2; m <= 3; ++m) {
      BaseSet bm = plp::generate_bases(plp::power_spec(spec, m));
      if (oracle_depth(bm) != d1)
        c.require(false, "left depth moved at power " + std::to_string(m) + ":\n" +
                             plp::print_spec(spec));
      if (plp::ass_bruteforce(MonomialIdeal::from_base_set(bm)) != a1)
        c.require(false, "left Ass moved at power " + std::to_string(m) + ":\n" +
                             plp::print_spec(spec));
    }
    ++left_checked;
  }
}

// ---- criterion 9: gorenstein vs h-vector symmetry ------------------------

void criterion_9() {
  Criterion c(9, "gorenstein criterion equals h-vector symmetry (50 specs)");
  plp::Rng rng(5150);
  int tested = 0;
  while (tested < 50) {
    plp::SplpSpec spec = plp::random_splp_spec(rng, 6, 6);
    BaseSet b = plp::generate_bases(spec.to_plp_spec());
    if (b.size() > 200) continue;
    ++tested;
    bool criterion = plp::gorenstein_criterion(spec).gorenstein;
    bool symmetric = plp::is_symmetric(plp::h_vector(b));
    if (criterion != symmetric) {
      std::ostringstream what;
      what << "criterion " << criterion << " vs symmetry " << symmetric << " on\n"
           << plp::print_spec(spec.to_plp_spec());
      c.require(false, what.str());
    }
  }
}

// ---- criterion 10: one-sided exchange vs representability ----------------

void criterion_10() {
  Criterion c(10, "left-sided exchange equals PLP-representability on [4]");
  plp::Rng rng(31337);
  int tested = 0;
  while (tested < 100) {
    BaseSet b = plp::random_polymatroid_base_set_dim4(rng);
    auto rho = plp::rank_function(b);
    bool hypotheses = true;
    for (int i = 0; i < 2; ++i) {
      int self = rho(Subset{1} << i);
      int with3 = rho((Subset{1} << i) | 0b0100);
      int with4 = rho((Subset{1} << i) | 0b1000);
      if (!(self > 0 && self < std::min(with3, with4))) hypotheses = false;
    }
    if (!hypotheses) continue;
    ++tested;
    bool left = plp::check_exchange(b, plp::ExchangeKind::kLeftStrong).holds;
    bool representable = plp::is_plp_representable(b, false).representable;
    if (left != representable) {
      std::ostringstream what;
      what << "left=" << left << " representable=" << representable << " on\n"
           << plp::print_bases(b);
      c.require(false, what.str());
    }
  }
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << '\n';
  return failures;
}
