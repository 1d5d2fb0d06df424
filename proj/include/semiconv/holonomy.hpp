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

#ifndef SEMICONV_HOLONOMY_HPP_
#define SEMICONV_HOLONOMY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiconv/semigroup.hpp"

namespace semiconv {

  // Subset of X_r as a bitmask; bit i is the state i - r.
  using StateSet = std::uint64_t;

  std::vector<State> states_of(StateSet set, int r);
  std::string        format_set(StateSet set, int r);

  // Extended image set of (X_r, S) ordered by (size, lexicographic states),
  // with the subduction preorder P <= Q iff P is contained in Q*s for some
  // s in S^1. Equivalence classes are the mutually-reachable sets; heights
  // are longest strict subduction chains, singletons at height 0.
  class Skeleton {
   public:
    struct EquivalenceClass {
      std::vector<std::size_t> members;  // skeleton indices, skeleton order
      std::size_t              height;
      std::size_t representative() const noexcept {
        return members.front();
      }
    };

    int radius() const noexcept {
      return r_;
    }
    std::size_t size() const noexcept {
      return sets_.size();
    }
    StateSet set(std::size_t i) const noexcept {
      return sets_[i];
    }
    std::vector<StateSet> const& sets() const noexcept {
      return sets_;
    }
    std::optional<std::size_t> index_of(StateSet s) const;
    std::size_t full_set_index() const noexcept {
      return sets_.size() - 1;
    }

    std::size_t height(std::size_t i) const noexcept {
      return classes_[class_of_[i]].height;
    }
    std::size_t max_height() const noexcept {
      return height(full_set_index());
    }
    std::size_t class_of(std::size_t i) const noexcept {
      return class_of_[i];
    }
    std::vector<EquivalenceClass> const& classes() const noexcept {
      return classes_;
    }

    // Maximal skeleton members strictly contained in set i.
    std::vector<std::size_t> const& tiles(std::size_t i) const noexcept {
      return tiles_[i];
    }

    // P <= Q. Walks Q's orbit under the generators.
    bool subduces(std::size_t p, std::size_t q) const;
    StateSet act(StateSet set, std::size_t generator) const noexcept;

   private:
    friend Skeleton compute_skeleton(Semigroup const&, bool);
    Skeleton() = default;

    int                                   r_ = 1;
    std::vector<std::vector<std::uint8_t>> gen_images_;
    std::vector<StateSet>                 sets_;
    std::vector<std::size_t>              class_of_;
    std::vector<EquivalenceClass>         classes_;
    std::vector<std::vector<std::size_t>> tiles_;
  };

  // Largest radius decomposed without an explicit override.
  inline constexpr int default_holonomy_radius_cap = 7;

  // Throws InvalidParameter for r above the default cap unless
  // `allow_large` is set, or above 31 (bitmask width).
  Skeleton compute_skeleton(Semigroup const& sg, bool allow_large = false);

  struct Permutation {
    std::vector<std::uint16_t> images;
    auto operator<=>(Permutation const&) const = default;
  };

  struct HolonomyGroup {
    std::size_t              image;  // skeleton index of the class representative
    std::vector<std::size_t> tiles;
    std::vector<Permutation> permutations;  // sorted, identity first
    std::size_t order() const noexcept {
      return permutations.size();
    }
  };

  // Permutations of each non-singleton class representative's tiles induced
  // by the elements that map the representative onto itself.
  std::vector<HolonomyGroup> holonomy_groups(Skeleton const& sk, Semigroup const& sg);

  struct LevelClass {
    std::size_t representative;
    std::size_t class_size;
    std::size_t tile_count;
    std::size_t group_order;
  };

  struct Level {
    std::size_t             depth;   // 1 at the top
    std::size_t             height;  // skeleton height of the classes on this level
    std::vector<LevelClass> classes;
    std::size_t             tile_points;  // tiles summed over the classes
    std::size_t             points;       // tile_points plus one filler coordinate
    bool                    shared = false;  // more than one tile set on this level
  };

  inline constexpr char const* level_count_convention
      = "points = sum of tile counts of the class representatives at each "
        "height, plus one shared filler coordinate per level; heights use "
        "the subduction order, singletons at height 0";

  std::vector<Level> decompose_levels(Skeleton const&                   sk,
                                      std::vector<HolonomyGroup> const& groups);

  // Points per level, top to bottom, under level_count_convention.
  std::vector<std::size_t> level_counts(Skeleton const& sk);

  struct DecompositionReport {
    int                        r;
    std::optional<int>         a;
    std::size_t                semigroup_size;
    std::size_t                generator_count;
    std::size_t                skeleton_size;
    std::size_t                class_count;
    std::vector<Level>         levels;
    std::vector<HolonomyGroup> groups;
    Skeleton                   skeleton;

    std::vector<std::size_t> points() const;
    std::vector<std::size_t> tile_points() const;
    std::size_t              max_group_order() const;

    std::string to_json() const;
    std::string to_text() const;
  };

  DecompositionReport decompose(Semigroup const& sg, std::optional<int> a = std::nullopt,
                                bool allow_large = false);

}  // namespace semiconv

#endif  // SEMICONV_HOLONOMY_HPP_
