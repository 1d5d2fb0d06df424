/**
 * Copyright 2026 The semiconv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <json.hpp>
#include <set>

#include "../oracles/naive_holonomy.hpp"
#include "semiconv/error.hpp"
#include "semiconv/holonomy.hpp"

using namespace semiconv;

namespace {
  oracle::Set to_set(StateSet s, int r) {
    auto const v = states_of(s, r);
    return oracle::Set(v.begin(), v.end());
  }

  Semigroup build(int r, int a) {
    return a < 0 ? enumerate_closure(make_generators(r)) : subsemigroup(r, a);
  }

  Permutation compose_perm(Permutation const& a, Permutation const& b) {
    Permutation out;
    for (auto i : a.images) {
      out.images.push_back(b.images[i]);
    }
    return out;
  }
}  // namespace

TEST_SUITE("holonomy") {
  TEST_CASE("state set helpers") {
    CHECK(states_of(0b101, 1) == std::vector<State>{-1, 1});
    CHECK(format_set(0b011, 3) == "{-3,-2}");
    CHECK(format_set(0, 2) == "{}");
  }

  TEST_CASE("skeleton sizes") {
    CHECK(compute_skeleton(build(1, -1)).size() == 6);
    CHECK(compute_skeleton(build(2, -1)).size() == 26);
    CHECK(compute_skeleton(build(3, -1)).size() == 80);
    CHECK(compute_skeleton(build(3, 0)).size() == 28);
    CHECK(compute_skeleton(build(7, 0)).size() == 120);
  }

  TEST_CASE("skeleton agrees with the brute-force oracle") {
    for (auto [r, a] : {std::pair{1, -1}, {2, -1}, {2, 0}, {3, 0}, {3, -1}}) {
      CAPTURE(r);
      CAPTURE(a);
      auto const sg  = build(r, a);
      auto const sk  = compute_skeleton(sg);
      auto const ref = oracle::naive_skeleton(
          oracle::closure(oracle::generators(r, a < 0 ? r : a), r), r);
      REQUIRE(sk.size() == ref.sets.size());
      for (std::size_t i = 0; i < sk.size(); ++i) {
        REQUIRE(to_set(sk.set(i), r) == ref.sets[i]);
        CHECK(sk.height(i) == static_cast<std::size_t>(ref.height[i]));
        std::vector<std::size_t> tiles = sk.tiles(i);
        std::sort(tiles.begin(), tiles.end());
        CHECK(tiles == ref.tiles(i));
        for (std::size_t j = 0; j < sk.size(); ++j) {
          bool const same = sk.class_of(i) == sk.class_of(j);
          REQUIRE(same == (ref.cls[i] == ref.cls[j]));
        }
      }
      // Subduction, sampled against brute force.
      for (std::size_t p = 0; p < sk.size(); p += 3) {
        for (std::size_t q = 0; q < sk.size(); q += 2) {
          REQUIRE(sk.subduces(p, q) == ref.subduces(p, q));
        }
      }
      for (auto const& g : holonomy_groups(sk, sg)) {
        CHECK(g.order() == ref.group_order(g.image));
      }
      CHECK(level_counts(sk) == oracle::naive_level_points(ref));
    }
  }

  TEST_CASE("height is monotone under inclusion") {
    auto const sk = compute_skeleton(build(3, -1));
    for (std::size_t i = 0; i < sk.size(); ++i) {
      for (std::size_t j = 0; j < sk.size(); ++j) {
        if ((sk.set(i) & sk.set(j)) == sk.set(i)) {
          REQUIRE(sk.height(i) <= sk.height(j));
        }
      }
    }
  }

  TEST_CASE("level counts") {
    CHECK(level_counts(compute_skeleton(build(1, -1))) == std::vector<std::size_t>{3, 3});
    CHECK(level_counts(compute_skeleton(build(2, -1))) == std::vector<std::size_t>{4, 5, 4, 3});
    CHECK(level_counts(compute_skeleton(build(3, -1)))
          == std::vector<std::size_t>{4, 5, 5, 9, 5, 5, 5, 4, 3});
    CHECK(level_counts(compute_skeleton(build(3, 0))) == std::vector<std::size_t>{3, 3, 3, 3, 3, 3});
  }

  TEST_CASE("holonomy groups satisfy the group axioms") {
    for (int r = 1; r <= 3; ++r) {
      auto const sg = build(r, -1);
      auto const sk = compute_skeleton(sg);
      for (auto const& g : holonomy_groups(sk, sg)) {
        REQUIRE(!g.permutations.empty());
        std::set<Permutation> const elems(g.permutations.begin(), g.permutations.end());
        Permutation id;
        for (std::size_t i = 0; i < g.tiles.size(); ++i) {
          id.images.push_back(static_cast<std::uint16_t>(i));
        }
        CHECK(g.permutations.front() == id);
        for (auto const& p : g.permutations) {
          bool has_inverse = false;
          for (auto const& q : g.permutations) {
            REQUIRE(elems.count(compose_perm(p, q)) == 1);
            has_inverse = has_inverse || compose_perm(p, q) == id;
          }
          CHECK(has_inverse);
        }
        CHECK(g.order() <= 2);
      }
    }
  }

  TEST_CASE("decomposition report") {
    auto const rep = decompose(build(3, -1));
    CHECK(rep.levels.size() == 9);
    CHECK(rep.points() == std::vector<std::size_t>{4, 5, 5, 9, 5, 5, 5, 4, 3});
    CHECK(rep.tile_points() == std::vector<std::size_t>{3, 4, 4, 8, 4, 4, 4, 3, 2});
    CHECK(rep.max_group_order() == 2);
    CHECK(rep.levels[3].shared);
    CHECK(rep.levels[3].classes.size() == 2);
    auto const j = nlohmann::json::parse(rep.to_json());
    CHECK(j.at("points").get<std::vector<std::size_t>>() == rep.points());
    CHECK(j.at("skeleton_size") == 80);
    CHECK(rep.to_text().find("points=(4, 5, 5, 9, 5, 5, 5, 4, 3)") != std::string::npos);

    auto const sub = decompose(build(3, 0), 0);
    CHECK(sub.points() == std::vector<std::size_t>{3, 3, 3, 3, 3, 3});
    CHECK(nlohmann::json::parse(sub.to_json()).at("a") == 0);
  }

  TEST_CASE("radius cap") {
    auto const sg = subsemigroup(8, 0);
    CHECK_THROWS_AS(compute_skeleton(sg), InvalidParameter);
    CHECK_NOTHROW(compute_skeleton(sg, true));
  }
}
