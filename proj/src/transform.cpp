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

#include "semiconv/transform.hpp"

#include <algorithm>
#include <string_view>

#include "semiconv/error.hpp"

namespace semiconv {

  StateSpace::StateSpace(int r) : r_(r) {
    if (r < 1) {
      throw InvalidParameter("state space radius must be >= 1, got " + std::to_string(r));
    }
    if (r > max_radius) {
      throw InvalidParameter("state space radius must be <= "
                             + std::to_string(max_radius) + ", got " + std::to_string(r));
    }
  }

  std::size_t StateSpace::index_of(State x) const {
    if (!contains(x)) {
      throw InvalidState("state " + std::to_string(x) + " is outside -"
                         + std::to_string(r_) + ".." + std::to_string(r_));
    }
    return static_cast<std::size_t>(x + r_);
  }

  std::vector<State> StateSpace::states() const {
    std::vector<State> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = state_at(i);
    }
    return out;
  }

  StateSpace make_state_space(int r) {
    return StateSpace(r);
  }

  Transformation::Transformation(StateSpace space, std::vector<std::uint8_t> image)
      : space_(space), image_(std::move(image)) {
    if (image_.size() != space_.size()) {
      throw Incompatible("transformation has " + std::to_string(image_.size())
                         + " images for a state space of size "
                         + std::to_string(space_.size()));
    }
    for (auto i : image_) {
      if (i >= space_.size()) {
        throw InvalidState("transformation image index " + std::to_string(i)
                           + " is outside the state space");
      }
    }
  }

  Transformation Transformation::from_targets(StateSpace space, std::span<State const> targets) {
    if (targets.size() != space.size()) {
      throw Incompatible("expected " + std::to_string(space.size()) + " targets, got "
                         + std::to_string(targets.size()));
    }
    std::vector<std::uint8_t> img(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
      img[i] = static_cast<std::uint8_t>(space.index_of(targets[i]));
    }
    return Transformation(space, std::move(img));
  }

  Transformation Transformation::identity(StateSpace space) {
    return from_function(space, [](State x) { return x; });
  }

  std::vector<State> Transformation::targets() const {
    std::vector<State> out(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) {
      out[i] = space_.state_at(image_[i]);
    }
    return out;
  }

  State apply(Transformation const& t, State x) {
    return t(x);
  }

  Transformation compose(Transformation const& first, Transformation const& second) {
    if (first.space() != second.space()) {
      throw Incompatible("cannot compose transformations on X_"
                         + std::to_string(first.radius()) + " and X_"
                         + std::to_string(second.radius()));
    }
    auto                      a = first.image_indices();
    auto                      b = second.image_indices();
    std::vector<std::uint8_t> img(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      img[i] = b[a[i]];
    }
    return Transformation(first.space(), std::move(img));
  }

  std::size_t TransformationHash::operator()(Transformation const& t) const noexcept {
    auto bytes = t.image_indices();
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<char const*>(bytes.data()), bytes.size()));
  }

  GeneratorSet::GeneratorSet(StateSpace space, std::vector<Generator> generators)
      : space_(space), gens_(std::move(generators)) {
    if (gens_.empty()) {
      throw InvalidParameter("a generator set needs at least one generator");
    }
    if (gens_.size() > 255) {
      throw InvalidParameter("at most 255 generators are supported");
    }
    for (auto const& g : gens_) {
      if (g.map.space() != space_) {
        throw Incompatible("generator " + g.name + " acts on a different state space");
      }
    }
  }

  std::vector<std::string> GeneratorSet::names() const {
    std::vector<std::string> out;
    out.reserve(gens_.size());
    for (auto const& g : gens_) {
      out.push_back(g.name);
    }
    return out;
  }

  std::optional<std::size_t> GeneratorSet::find(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (gens_[i].name == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  GeneratorSet GeneratorSet::restrict_to(std::span<std::string const> names) const {
    std::vector<bool> keep(gens_.size(), false);
    for (auto const& n : names) {
      auto i = find(n);
      if (!i) {
        throw InvalidParameter("unknown generator name '" + n + "'");
      }
      keep[*i] = true;
    }
    std::vector<Generator> out;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (keep[i]) {
        out.push_back(gens_[i]);
      }
    }
    return GeneratorSet(space_, std::move(out));
  }

  Transformation GeneratorSet::evaluate(Word const& w) const {
    auto t = Transformation::identity(space_);
    for (auto letter : w) {
      t = compose(t, (*this)[letter].map);
    }
    return t;
  }

  std::string GeneratorSet::format(Word const& w) const {
    std::string out;
    for (auto letter : w) {
      out += (*this)[letter].name;
    }
    return out;
  }

  Word GeneratorSet::parse(std::string_view text) const {
    Word out;
    while (!text.empty()) {
      if (text.front() == ' ') {
        text.remove_prefix(1);
        continue;
      }
      std::optional<std::size_t> best;
      for (std::size_t i = 0; i < gens_.size(); ++i) {
        auto const& n = gens_[i].name;
        if (text.starts_with(n) && (!best || n.size() > gens_[*best].name.size())) {
          best = i;
        }
      }
      if (!best) {
        throw InvalidParameter("cannot parse word at '" + std::string(text) + "'");
      }
      out.push_back(static_cast<std::uint8_t>(*best));
      text.remove_prefix(gens_[*best].name.size());
    }
    return out;
  }

  std::vector<int> primes_up_to(int n) {
    std::vector<int> out;
    for (int p = 2; p <= n; ++p) {
      bool prime = true;
      for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          prime = false;
          break;
        }
      }
      if (prime) {
        out.push_back(p);
      }
    }
    return out;
  }

  GeneratorSet make_generators(int r, std::optional<int> max_prime) {
    StateSpace             space(r);
    auto                   clip = [r](int v) { return std::clamp(v, -r, r); };
    std::vector<Generator> gens;
    gens.push_back({"c", Transformation::from_function(space, [r](State x) {
                      return std::min(x + 1, r);
                    })});
    gens.push_back({"z", Transformation::from_function(space, [](State) { return 0; })});
    gens.push_back({"e", Transformation::identity(space)});
    gens.push_back({"n", Transformation::from_function(space, [](State x) { return -x; })});
    int const limit = max_prime ? std::min(*max_prime, r) : r;
    for (int p : primes_up_to(limit)) {
      gens.push_back({"m_" + std::to_string(p),
                      Transformation::from_function(space,
                                                    [&](State x) { return clip(p * x); })});
    }
    return GeneratorSet(space, std::move(gens));
  }

}  // namespace semiconv
