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

#include "doctest.h"
#include "plp/corpus.hpp"
#include "plp/gorenstein.hpp"
#include "plp/plp_spec.hpp"

using plp::BaseSet;
using plp::SplpSpec;

TEST_CASE("gorenstein criterion examples") {
  SUBCASE("n=4, k=1, b=(1), beta=(2,2) is gorenstein with ratio 2") {
    SplpSpec spec(4, 2, 1, {1}, {2, 2});
    auto result = plp::gorenstein_criterion(spec);
    CHECK(result.gorenstein);
    CHECK(result.ratio == 2);
    auto h = plp::h_vector(plp::generate_bases(spec.to_plp_spec()));
    CHECK(plp::is_symmetric(h));
  }
  SUBCASE("n=4, k=1, b=(1), beta=(1,2) is not gorenstein") {
    SplpSpec spec(4, 2, 1, {1}, {1, 2});
    CHECK_FALSE(plp::gorenstein_criterion(spec).gorenstein);
    auto h = plp::h_vector(plp::generate_bases(spec.to_plp_spec()));
    CHECK_FALSE(plp::is_symmetric(h));
  }
  SUBCASE("n=2 chains") {
    SplpSpec one(2, 3, 0, {}, {3});
    // Only the ratio n / beta_{n-1} = 2/3 occurs: not an integer.
    CHECK_FALSE(plp::gorenstein_criterion(one).gorenstein);
    SplpSpec two(2, 2, 0, {}, {1});
    // 2/1 = 2: an integer.
    CHECK(plp::gorenstein_criterion(two).gorenstein);
    CHECK(plp::gorenstein_criterion(two).ratio == 2);
  }
  SUBCASE("the full simplex is gorenstein iff d divides n") {
    plp::PlpSpec simplex4(4, 2, {0, 0, 0, 0}, {2, 2, 2, 2}, {0, 0, 0, 2}, {2, 2, 2, 2});
    auto splp = plp::as_splp(simplex4);
    REQUIRE(splp.has_value());
    CHECK(plp::gorenstein_criterion(*splp).gorenstein);
    plp::PlpSpec simplex32(3, 2, {0, 0, 0}, {2, 2, 2}, {0, 0, 2}, {2, 2, 2});
    auto splp32 = plp::as_splp(simplex32);
    REQUIRE(splp32.has_value());
    CHECK_FALSE(plp::gorenstein_criterion(*splp32).gorenstein);
  }
}

TEST_CASE("h-vectors") {
  SUBCASE("points and segments are polynomial rings") {
    CHECK(plp::h_vector(BaseSet(2, {{1, 1}})) == std::vector<std::int64_t>{1});
    CHECK(plp::h_vector(BaseSet(2, {{1, 0}, {0, 1}})) == std::vector<std::int64_t>{1});
  }
  SUBCASE("entries are non-negative with h_0 = 1") {
    plp::Rng rng(11);
    for (int t = 0; t < 10; ++t) {
      SplpSpec spec = plp::random_splp_spec(rng, 5, 4);
      BaseSet b = plp::generate_bases(spec.to_plp_spec());
      if (b.size() > 200) continue;
      auto h = plp::h_vector(b);
      REQUIRE(!h.empty());
      CHECK(h[0] == 1);
      for (auto v : h) CHECK(v >= 0);
    }
  }
  SUBCASE("kmax below the dimension errors") {
    BaseSet square(2, {{1, 0}, {0, 1}});
    CHECK_THROWS_AS(plp::h_vector(square, 1), plp::InputError);
  }
}

TEST_CASE("criterion agrees with h-vector symmetry on a random corpus") {
  plp::Rng rng(20260807);
  int tested = 0;
  while (tested < 25) {
    SplpSpec spec = plp::random_splp_spec(rng, 5, 5);
    BaseSet b = plp::generate_bases(spec.to_plp_spec());
    if (b.size() > 200) continue;
    ++tested;
    bool criterion = plp::gorenstein_criterion(spec).gorenstein;
    bool symmetric = plp::is_symmetric(plp::h_vector(b));
    CHECK(criterion == symmetric);
  }
}

TEST_CASE("splp extraction") {
  SUBCASE("example 5.12 is not SPLP") {
    plp::PlpSpec spec(5, 5, {0, 0, 0, 0, 0}, {2, 2, 3, 5, 5}, {0, 0, 0, 2, 5},
                      {4, 4, 4, 4, 5});
    CHECK_FALSE(plp::as_splp(spec).has_value());
  }
  SUBCASE("pruned chains round-trip through PlpSpec") {
    SplpSpec spec(4, 3, 2, {1, 2}, {2});
    auto plpspec = spec.to_plp_spec();
    auto back = plp::as_splp(plpspec);
    REQUIRE(back.has_value());
    CHECK(back->k == 2);
    CHECK(back->box == std::vector<int>{1, 2});
    CHECK(back->prefix_max == std::vector<int>{2});
  }
}
