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

#include <set>

#include "doctest.h"
#include "plp/monomial_ideal.hpp"
#include "plp/oracles.hpp"
#include "plp/plp_spec.hpp"

using plp::ExponentVector;
using plp::MonomialIdeal;
using plp::PlpSpec;

namespace {

PlpSpec example512() {
  return PlpSpec(5, 5, {0, 0, 0, 0, 0}, {2, 2, 3, 5, 5}, {0, 0, 0, 2, 5}, {4, 4, 4, 4, 5});
}

}  // namespace

TEST_CASE("minimal generating sets") {
  auto ideal = MonomialIdeal::from_generators(2, {{2, 0}, {1, 1}, {2, 1}, {1, 1}});
  CHECK(ideal.generators() == std::vector<ExponentVector>{{1, 1}, {2, 0}});
  CHECK(ideal.contains({3, 5}));
  CHECK_FALSE(ideal.contains({0, 9}));
}

TEST_CASE("products, powers and colons") {
  auto p12 = MonomialIdeal::prime(2, 0b11);
  CHECK(plp::product(p12, p12) ==
        MonomialIdeal::from_generators(2, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(plp::power(p12, 2) == plp::product(p12, p12));
  auto ideal = MonomialIdeal::from_generators(2, {{2, 0}, {1, 1}});
  CHECK(plp::colon_by_monomial(ideal, {0, 1}) ==
        MonomialIdeal::from_generators(2, {{1, 0}}));
}

TEST_CASE("intersection via pairwise lcm") {
  auto x1 = MonomialIdeal::from_generators(2, {{1, 0}});
  auto x2 = MonomialIdeal::from_generators(2, {{0, 1}});
  CHECK(plp::intersect({x1, x2}) == MonomialIdeal::from_generators(2, {{1, 1}}));
}

TEST_CASE("monomial localization") {
  auto ideal = MonomialIdeal::from_generators(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  SUBCASE("substitute x3 = 1") {
    auto local = plp::monomial_localization(ideal, 0b011);
    CHECK(local == MonomialIdeal::from_generators(2, {{1, 0}, {0, 1}}));
  }
  SUBCASE("full support is the identity") {
    CHECK(plp::monomial_localization(ideal, 0b111) == ideal);
  }
  SUBCASE("products commute with localization") {
    auto j = MonomialIdeal::from_generators(3, {{2, 0, 0}, {0, 0, 1}});
    plp::Subset a = 0b101;
    CHECK(plp::monomial_localization(plp::product(ideal, j), a) ==
          plp::product(plp::monomial_localization(ideal, a),
                       plp::monomial_localization(j, a)));
  }
  SUBCASE("drop-one localization of a polymatroidal ideal") {
    // I(P) keeps the generators attaining the maximal dropped exponent.
    auto bases = plp::generate_bases(example512());
    auto ideal512 = MonomialIdeal::from_base_set(bases);
    int drop = 3;  // variable x4 (0-based 3)
    int max_e = 0;
    for (const auto& u : bases.vectors()) max_e = std::max(max_e, u[drop]);
    std::vector<ExponentVector> expected;
    for (const auto& u : bases.vectors())
      if (u[drop] == max_e) {
        ExponentVector v;
        for (int i = 0; i < 5; ++i)
          if (i != drop) v.push_back(u[i]);
        expected.push_back(v);
      }
    CHECK(plp::monomial_localization(ideal512, 0b10111) ==
          MonomialIdeal::from_generators(4, expected));
  }
}

TEST_CASE("brute-force associated primes") {
  SUBCASE("(x1^2, x1 x2)") {
    auto ideal = MonomialIdeal::from_generators(2, {{2, 0}, {1, 1}});
    CHECK(plp::ass_bruteforce(ideal) == std::set<plp::Subset>{0b01, 0b11});
  }
  SUBCASE("principal (x1 x2)") {
    auto ideal = MonomialIdeal::from_generators(2, {{1, 1}});
    CHECK(plp::ass_bruteforce(ideal) == std::set<plp::Subset>{0b01, 0b10});
  }
  SUBCASE("example 5.12 supports") {
    auto ideal = MonomialIdeal::from_base_set(plp::generate_bases(example512()));
    std::set<plp::Subset> expected{
        0b11111,   // [1,5]
        0b01111,   // [1,4]
        0b11011,   // [1,5] minus 3
        0b11110,   // [2,5]
        0b11101,   // [1,5] minus 2
        0b10000};  // {5}
    CHECK(plp::ass_bruteforce(ideal) == expected);
  }
  SUBCASE("witness guard") {
    auto ideal = MonomialIdeal::from_base_set(plp::generate_bases(example512()));
    CHECK_THROWS_AS(plp::ass_bruteforce(ideal, 10), plp::ResourceError);
  }
}

TEST_CASE("linear quotient depth") {
  SUBCASE("(x1, x2) has depth zero") {
    auto report =
        plp::linear_quotient_depth(MonomialIdeal::prime(2, 0b11), plp::MonomialOrder::kLex);
    CHECK(report.depth == 0);
    CHECK(report.quotient_variables[1] == std::vector<int>{0});
  }
  SUBCASE("example 5.12 has depth zero") {
    auto ideal = MonomialIdeal::from_base_set(plp::generate_bases(example512()));
    CHECK(plp::linear_quotient_depth(ideal, plp::MonomialOrder::kLex).depth == 0);
    CHECK(plp::linear_quotient_depth(ideal, plp::MonomialOrder::kRevLex).depth == 0);
  }
  SUBCASE("principal ideals have depth n - 1") {
    auto ideal = MonomialIdeal::from_generators(3, {{1, 2, 0}});
    CHECK(plp::linear_quotient_depth(ideal, plp::MonomialOrder::kLex).depth == 2);
  }
  SUBCASE("an ideal without linear quotients errors") {
    // (x1 x2, x3 x4): the colon is generated in degree 2.
    auto ideal = MonomialIdeal::from_generators(4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    CHECK_THROWS_WITH_AS(plp::linear_quotient_depth(ideal, plp::MonomialOrder::kLex),
                         doctest::Contains("not linear quotients"), plp::InputError);
  }
}

TEST_CASE("hilbert sumset counts") {
  SUBCASE("a single base is constant") {
    CHECK(plp::hilbert_sumset(plp::BaseSet(2, {{1, 1}}), 4) ==
          std::vector<std::int64_t>{1, 1, 1, 1});
  }
  SUBCASE("the segment grows linearly") {
    CHECK(plp::hilbert_sumset(plp::BaseSet(2, {{1, 0}, {0, 1}}), 5) ==
          std::vector<std::int64_t>{2, 3, 4, 5, 6});
  }
  SUBCASE("example 5.12 counts match the power enumeration") {
    auto bases = plp::generate_bases(example512());
    auto counts = plp::hilbert_sumset(bases, 2);
    CHECK(counts[0] == bases.size());
    CHECK(counts[1] ==
          plp::generate_bases(plp::power_spec(example512(), 2)).size());
    CHECK(counts[0] < counts[1]);
  }
}
