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

#ifndef SEMICONV_TESTS_NAIVE_HOLONOMY_HPP_
#define SEMICONV_TESTS_NAIVE_HOLONOMY_HPP_

// Brute-force skeleton: subduction is decided by trying every element of
// S^1, heights by longest strict chains over all pairs. Only practical for
// small semigroups (r <= 3).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "naive_semigroup.hpp"

namespace oracle {

  using Set = std::set<int>;

  struct NaiveSkeleton {
    std::vector<Set>         sets;
    std::vector<int>         height;
    std::vector<int>         cls;  // equivalence class id (index of first member)
    std::vector<Map>         monoid;
    int                      r = 0;

    bool subduces(std::size_t p, std::size_t q) const {
      for (auto const& s : monoid) {
        Set img;
        for (int x : sets[q]) {
          img.insert(s[static_cast<std::size_t>(x + r)]);
        }
        if (std::includes(img.begin(), img.end(), sets[p].begin(), sets[p].end())) {
          return true;
        }
      }
      return false;
    }

    std::vector<std::size_t> tiles(std::size_t i) const {
      std::vector<std::size_t> out;
      auto strict_sub = [&](Set const& a, Set const& b) {
        return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
      };
      for (std::size_t j = 0; j < sets.size(); ++j) {
        if (!strict_sub(sets[j], sets[i])) {
          continue;
        }
        bool maximal = true;
        for (std::size_t k = 0; k < sets.size() && maximal; ++k) {
          if (strict_sub(sets[j], sets[k]) && strict_sub(sets[k], sets[i])) {
            maximal = false;
          }
        }
        if (maximal) {
          out.push_back(j);
        }
      }
      return out;
    }

    std::size_t index(Set const& s) const {
      return static_cast<std::size_t>(std::find(sets.begin(), sets.end(), s) - sets.begin());
    }

    // Distinct tile permutations induced by elements stabilising set i.
    std::size_t group_order(std::size_t i) const {
      auto const                        t = tiles(i);
      std::set<std::vector<std::size_t>> perms;
      for (auto const& s : monoid) {
        auto image = [&](Set const& a) {
          Set img;
          for (int x : a) {
            img.insert(s[static_cast<std::size_t>(x + r)]);
          }
          return img;
        };
        if (image(sets[i]) != sets[i]) {
          continue;
        }
        std::vector<std::size_t> perm;
        for (auto tj : t) {
          perm.push_back(index(image(sets[tj])));
        }
        perms.insert(perm);
      }
      return perms.size();
    }
  };

  inline NaiveSkeleton naive_skeleton(std::set<Map> const& sg, int r) {
    NaiveSkeleton sk;
    sk.r = r;
    std::set<Set> all;
    for (auto const& m : sg) {
      all.insert(Set(m.begin(), m.end()));
    }
    Set full;
    for (int x = -r; x <= r; ++x) {
      full.insert(x);
      all.insert(Set{x});
    }
    all.insert(full);
    sk.sets.assign(all.begin(), all.end());
    std::stable_sort(sk.sets.begin(), sk.sets.end(),
                     [](Set const& a, Set const& b) { return a.size() < b.size(); });
    sk.monoid.assign(sg.begin(), sg.end());
    sk.monoid.push_back(tabulate(r, [](int x) { return x; }));

    std::size_t const n = sk.sets.size();
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        le[p][q] = sk.subduces(p, q);
      }
    }
    sk.cls.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = 0;
      while (!(le[i][j] && le[j][i])) {
        ++j;
      }
      sk.cls[i] = static_cast<int>(j);
    }
    sk.height.assign(n, -1);
    std::function<int(std::size_t)> h = [&](std::size_t i) -> int {
      if (sk.height[i] >= 0) {
        return sk.height[i];
      }
      int best = 0;
      if (sk.sets[i].size() > 1) {
        for (std::size_t j = 0; j < n; ++j) {
          if (le[j][i] && !le[i][j]) {
            best = std::max(best, h(j) + 1);
          }
        }
      }
      return sk.height[i] = best;
    };
    for (std::size_t i = 0; i < n; ++i) {
      h(i);
    }
    return sk;
  }

  // Per height, top to bottom: (sum of representative tile counts) + 1.
  inline std::vector<std::size_t> naive_level_points(NaiveSkeleton const& sk) {
    int const top = *std::max_element(sk.height.begin(), sk.height.end());
    std::vector<std::size_t> out;
    for (int hgt = top; hgt >= 1; --hgt) {
      std::size_t sum = 0;
      for (std::size_t i = 0; i < sk.sets.size(); ++i) {
        if (sk.height[i] == hgt && sk.cls[i] == static_cast<int>(i)) {
          sum += sk.tiles(i).size();
        }
      }
      out.push_back(sum + 1);
    }
    return out;
  }

}  // namespace oracle

#endif  // SEMICONV_TESTS_NAIVE_HOLONOMY_HPP_
