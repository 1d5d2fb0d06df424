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

#include "semiconv/holonomy.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "semiconv/error.hpp"

namespace semiconv {

  namespace {
    // Size first, then lexicographic order of the sorted state lists: among
    // equal-size sets the one holding the lowest differing state is smaller.
    bool skeleton_less(StateSet a, StateSet b) noexcept {
      int const pa = std::popcount(a);
      int const pb = std::popcount(b);
      if (pa != pb) {
        return pa < pb;
      }
      StateSet const diff = a ^ b;
      return diff != 0 && (a & (diff & (~diff + 1))) != 0;
    }

    StateSet image_of(StateSet set, std::span<std::uint8_t const> img) noexcept {
      StateSet out = 0;
      while (set != 0) {
        int const i = std::countr_zero(set);
        out |= StateSet{1} << img[i];
        set &= set - 1;
      }
      return out;
    }

    // Iterative Tarjan; returns a component id per node.
    std::vector<std::size_t> strongly_connected(std::vector<std::vector<std::size_t>> const& adj) {
      std::size_t const        n = adj.size();
      std::size_t const        unset = SIZE_MAX;
      std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset);
      std::vector<bool>        on_stack(n, false);
      std::vector<std::size_t> stack;
      std::size_t              counter = 0, ncomp = 0;
      std::vector<std::pair<std::size_t, std::size_t>> frames;

      for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unset) {
          continue;
        }
        frames.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
          auto& [v, next] = frames.back();
          if (next < adj[v].size()) {
            std::size_t const w = adj[v][next++];
            if (index[w] == unset) {
              index[w] = low[w] = counter++;
              stack.push_back(w);
              on_stack[w] = true;
              frames.emplace_back(w, 0);
            } else if (on_stack[w]) {
              low[v] = std::min(low[v], index[w]);
            }
            continue;
          }
          if (low[v] == index[v]) {
            std::size_t w;
            do {
              w = stack.back();
              stack.pop_back();
              on_stack[w] = false;
              comp[w]     = ncomp;
            } while (w != v);
            ++ncomp;
          }
          std::size_t const done = v;
          frames.pop_back();
          if (!frames.empty()) {
            auto const parent = frames.back().first;
            low[parent]       = std::min(low[parent], low[done]);
          }
        }
      }
      return comp;
    }
  }  // namespace

  std::vector<State> states_of(StateSet set, int r) {
    std::vector<State> out;
    while (set != 0) {
      out.push_back(std::countr_zero(set) - r);
      set &= set - 1;
    }
    return out;
  }

  std::string format_set(StateSet set, int r) {
    std::string out = "{";
    bool        first = true;
    for (State x : states_of(set, r)) {
      if (!first) {
        out += ',';
      }
      out += std::to_string(x);
      first = false;
    }
    return out + "}";
  }

  std::optional<std::size_t> Skeleton::index_of(StateSet s) const {
    auto it = std::lower_bound(sets_.begin(), sets_.end(), s, skeleton_less);
    if (it == sets_.end() || *it != s) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - sets_.begin());
  }

  StateSet Skeleton::act(StateSet set, std::size_t generator) const noexcept {
    return image_of(set, gen_images_[generator]);
  }

  bool Skeleton::subduces(std::size_t p, std::size_t q) const {
    StateSet const         target = sets_[p];
    std::vector<StateSet>  queue{sets_[q]};
    std::vector<bool>      seen(sets_.size(), false);
    seen[q] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      if ((target & ~queue[k]) == 0) {
        return true;
      }
      for (std::size_t g = 0; g < gen_images_.size(); ++g) {
        StateSet const next = act(queue[k], g);
        auto const     j    = *index_of(next);
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(next);
        }
      }
    }
    return false;
  }

  Skeleton compute_skeleton(Semigroup const& sg, bool allow_large) {
    int const r = sg.state_space().radius();
    if (2 * r + 1 > 64) {
      throw InvalidParameter("holonomy skeletons support r <= 31, got " + std::to_string(r));
    }
    if (r > default_holonomy_radius_cap && !allow_large) {
      throw InvalidParameter("holonomy decomposition is capped at r <= "
                             + std::to_string(default_holonomy_radius_cap)
                             + " without an explicit override, got r = " + std::to_string(r));
    }
    Skeleton sk;
    sk.r_ = r;
    for (auto const& g : sg.generators().generators()) {
      auto img = g.map.image_indices();
      sk.gen_images_.emplace_back(img.begin(), img.end());
    }

    std::size_t const degree = sg.degree();
    StateSet const    full   = degree == 64 ? ~StateSet{0} : (StateSet{1} << degree) - 1;
    std::vector<StateSet> sets;
    sets.reserve(sg.size() + degree + 1);
    for (std::size_t i = 0; i < sg.size(); ++i) {
      sets.push_back(image_of(full, sg.image_indices(i)));
    }
    sets.push_back(full);
    for (std::size_t i = 0; i < degree; ++i) {
      sets.push_back(StateSet{1} << i);
    }
    std::sort(sets.begin(), sets.end(), skeleton_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    sk.sets_ = std::move(sets);
    std::size_t const n = sk.sets_.size();

    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t g = 0; g < sk.gen_images_.size(); ++g) {
        auto j = sk.index_of(sk.act(sk.sets_[i], g));
        if (!j) {
          throw NotAnElement("skeleton is not closed under generator "
                             + sg.generators()[g].name);
        }
        adj[i].push_back(*j);
      }
    }

    // Renumber components so classes appear in skeleton order of their
    // first member.
    auto const               comp = strongly_connected(adj);
    std::vector<std::size_t> renumber(n, SIZE_MAX);
    sk.class_of_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (renumber[comp[i]] == SIZE_MAX) {
        renumber[comp[i]] = sk.classes_.size();
        sk.classes_.push_back({{}, 0});
      }
      sk.class_of_[i] = renumber[comp[i]];
      sk.classes_[sk.class_of_[i]].members.push_back(i);
    }

    sk.tiles_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      StateSet const           s = sk.sets_[i];
      std::vector<std::size_t> below;
      for (std::size_t j = 0; j < i; ++j) {
        if ((sk.sets_[j] & ~s) == 0 && sk.sets_[j] != s) {
          below.push_back(j);
        }
      }
      // Largest first; a candidate is maximal iff no kept tile contains it.
      std::vector<std::size_t> kept;
      for (auto it = below.rbegin(); it != below.rend(); ++it) {
        StateSet const t = sk.sets_[*it];
        if (std::none_of(kept.begin(), kept.end(),
                         [&](std::size_t k) { return (t & ~sk.sets_[k]) == 0; })) {
          kept.push_back(*it);
        }
      }
      std::sort(kept.begin(), kept.end());
      sk.tiles_[i] = std::move(kept);
    }

    // A strictly lower class is reached either through a generator edge
    // leaving the class or by dropping to a tile of one of its members.
    std::vector<std::optional<std::size_t>> memo(sk.classes_.size());
    std::function<std::size_t(std::size_t)> height = [&](std::size_t c) -> std::size_t {
      if (memo[c]) {
        return *memo[c];
      }
      auto const& members = sk.classes_[c].members;
      std::size_t h       = 0;
      if (std::popcount(sk.sets_[members.front()]) > 1) {
        for (std::size_t m : members) {
          for (std::size_t j : adj[m]) {
            if (sk.class_of_[j] != c) {
              h = std::max(h, height(sk.class_of_[j]) + 1);
            }
          }
          for (std::size_t t : sk.tiles_[m]) {
            h = std::max(h, height(sk.class_of_[t]) + 1);
          }
        }
      }
      memo[c] = h;
      return h;
    };
    for (std::size_t c = 0; c < sk.classes_.size(); ++c) {
      sk.classes_[c].height = height(c);
    }
    return sk;
  }

  std::vector<HolonomyGroup> holonomy_groups(Skeleton const& sk, Semigroup const& sg) {
    if (sg.state_space().radius() != sk.radius()) {
      throw Incompatible("skeleton and semigroup act on different state spaces");
    }
    std::vector<HolonomyGroup> out;
    for (auto const& cls : sk.classes()) {
      std::size_t const rep = cls.representative();
      StateSet const    P   = sk.set(rep);
      if (std::popcount(P) <= 1) {
        continue;
      }
      auto const&           tiles = sk.tiles(rep);
      std::set<Permutation> perms;
      for (std::size_t k = 0; k < sg.size(); ++k) {
        auto img = sg.image_indices(k);
        if (image_of(P, img) != P) {
          continue;
        }
        Permutation perm;
        perm.images.reserve(tiles.size());
        for (std::size_t t : tiles) {
          StateSet const moved = image_of(sk.set(t), img);
          auto const     pos   = std::find_if(tiles.begin(), tiles.end(),
                                              [&](std::size_t u) { return sk.set(u) == moved; });
          if (pos == tiles.end()) {
            throw NotAnElement("stabilizing element moves a tile of "
                               + format_set(P, sk.radius()) + " off the tile set");
          }
          perm.images.push_back(static_cast<std::uint16_t>(pos - tiles.begin()));
        }
        perms.insert(std::move(perm));
      }
      out.push_back({rep, tiles, std::vector<Permutation>(perms.begin(), perms.end())});
    }
    return out;
  }

  std::vector<Level> decompose_levels(Skeleton const&                   sk,
                                      std::vector<HolonomyGroup> const& groups) {
    std::unordered_map<std::size_t, std::size_t> order_of;
    for (auto const& g : groups) {
      order_of[g.image] = g.order();
    }
    std::size_t const  top = sk.max_height();
    std::vector<Level> levels;
    for (std::size_t h = top; h >= 1; --h) {
      Level level{top - h + 1, h, {}, 0, 0};
      for (auto const& cls : sk.classes()) {
        if (cls.height != h) {
          continue;
        }
        std::size_t const rep   = cls.representative();
        auto              it    = order_of.find(rep);
        std::size_t const order = it == order_of.end() ? 0 : it->second;
        level.classes.push_back({rep, cls.members.size(), sk.tiles(rep).size(), order});
        level.tile_points += sk.tiles(rep).size();
      }
      level.points = level.tile_points + 1;
      level.shared = level.classes.size() > 1;
      levels.push_back(std::move(level));
    }
    return levels;
  }

  std::vector<std::size_t> level_counts(Skeleton const& sk) {
    std::vector<std::size_t> out;
    for (auto const& level : decompose_levels(sk, {})) {
      out.push_back(level.points);
    }
    return out;
  }

  std::vector<std::size_t> DecompositionReport::points() const {
    std::vector<std::size_t> out;
    for (auto const& l : levels) {
      out.push_back(l.points);
    }
    return out;
  }

  std::vector<std::size_t> DecompositionReport::tile_points() const {
    std::vector<std::size_t> out;
    for (auto const& l : levels) {
      out.push_back(l.tile_points);
    }
    return out;
  }

  std::size_t DecompositionReport::max_group_order() const {
    std::size_t m = 1;
    for (auto const& g : groups) {
      m = std::max(m, g.order());
    }
    return m;
  }

  std::string DecompositionReport::to_json() const {
    nlohmann::ordered_json j;
    j["r"] = r;
    if (a) {
      j["a"] = *a;
    }
    j["semigroup_size"]     = semigroup_size;
    j["generators"]         = generator_count;
    j["skeleton_size"]      = skeleton_size;
    j["equivalence_classes"] = class_count;
    j["level_count"]        = levels.size();
    j["points"]             = points();
    j["tile_points"]        = tile_points();
    j["max_group_order"]    = max_group_order();
    j["convention"]         = level_count_convention;
    auto& lv                = j["levels"];
    lv                      = nlohmann::ordered_json::array();
    for (auto const& l : levels) {
      nlohmann::ordered_json e;
      e["depth"]       = l.depth;
      e["height"]      = l.height;
      e["points"]      = l.points;
      e["tile_points"] = l.tile_points;
      e["shared"]      = l.shared;
      e["classes"]     = nlohmann::ordered_json::array();
      for (auto const& c : l.classes) {
        e["classes"].push_back({{"representative", format_set(skeleton.set(c.representative), r)},
                                {"class_size", c.class_size},
                                {"tiles", c.tile_count},
                                {"group_order", c.group_order}});
      }
      lv.push_back(std::move(e));
    }
    return j.dump(2) + "\n";
  }

  std::string DecompositionReport::to_text() const {
    std::ostringstream out;
    out << "r=" << r;
    if (a) {
      out << " a=" << *a;
    }
    out << " size=" << semigroup_size << " generators=" << generator_count << "\n";
    out << "skeleton=" << skeleton_size << " classes=" << class_count
        << " levels=" << levels.size() << "\n";
    auto join = [](std::vector<std::size_t> const& v) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? ", " : "") + std::to_string(v[i]);
      }
      return s + ")";
    };
    out << "points=" << join(points()) << "\n";
    out << "tile_points=" << join(tile_points()) << "\n";
    out << "max_group_order=" << max_group_order() << "\n";
    for (auto const& l : levels) {
      out << "level " << l.depth << " (height " << l.height << "): " << l.points << " points"
          << (l.shared ? ", shared by several tile sets" : "") << "\n";
      for (auto const& c : l.classes) {
        out << "  " << format_set(skeleton.set(c.representative), r) << " class_size="
            << c.class_size << " tiles=" << c.tile_count << " group_order=" << c.group_order
            << "\n";
      }
    }
    out << "convention: " << level_count_convention << "\n";
    return out.str();
  }

  DecompositionReport decompose(Semigroup const& sg, std::optional<int> a, bool allow_large) {
    auto sk     = compute_skeleton(sg, allow_large);
    auto groups = holonomy_groups(sk, sg);
    auto levels = decompose_levels(sk, groups);
    return DecompositionReport{sg.state_space().radius(),
                               a,
                               sg.size(),
                               sg.generators().size(),
                               sk.size(),
                               sk.classes().size(),
                               std::move(levels),
                               std::move(groups),
                               std::move(sk)};
  }

}  // namespace semiconv
