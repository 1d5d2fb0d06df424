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

#ifndef SEMICONV_TRANSFORM_HPP_
#define SEMICONV_TRANSFORM_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semiconv {

  using State = int;

  // The state space X_r = {-r, ..., 0, ..., r}. Points are addressed either
  // by value (State) or by index (value + r) in the range [0, 2r+1).
  class StateSpace {
   public:
    // Largest radius representable by the byte-indexed transformations.
    static constexpr int max_radius = 127;

    explicit StateSpace(int r);

    int radius() const noexcept {
      return r_;
    }
    std::size_t size() const noexcept {
      return static_cast<std::size_t>(2 * r_ + 1);
    }
    bool contains(State x) const noexcept {
      return x >= -r_ && x <= r_;
    }
    std::size_t index_of(State x) const;
    State state_at(std::size_t i) const noexcept {
      return static_cast<State>(i) - r_;
    }
    std::vector<State> states() const;

    bool operator==(StateSpace const&) const = default;

   private:
    int r_;
  };

  StateSpace make_state_space(int r);

  // A total map X_r -> X_r, stored densely as the index of each image.
  class Transformation {
   public:
    Transformation(StateSpace space, std::vector<std::uint8_t> image);

    // Builds the map x -> f(x). Throws InvalidState if f leaves X_r.
    template <typename F>
    static Transformation from_function(StateSpace space, F&& f) {
      std::vector<std::uint8_t> img(space.size());
      for (std::size_t i = 0; i < img.size(); ++i) {
        img[i] = static_cast<std::uint8_t>(space.index_of(f(space.state_at(i))));
      }
      return Transformation(space, std::move(img));
    }

    static Transformation from_targets(StateSpace space, std::span<State const> targets);
    static Transformation identity(StateSpace space);

    StateSpace const& space() const noexcept {
      return space_;
    }
    int radius() const noexcept {
      return space_.radius();
    }
    std::size_t degree() const noexcept {
      return image_.size();
    }

    // Image of each state, in state order -r..r.
    std::vector<State> targets() const;
    std::span<std::uint8_t const> image_indices() const noexcept {
      return image_;
    }

    State operator()(State x) const {
      return space_.state_at(image_[space_.index_of(x)]);
    }

    bool operator==(Transformation const&) const = default;

   private:
    StateSpace                space_;
    std::vector<std::uint8_t> image_;
  };

  // Value of t at x. Throws InvalidState when x is outside X_r.
  State apply(Transformation const& t, State x);

  // The map that applies `first` and then `second`.
  Transformation compose(Transformation const& first, Transformation const& second);

  struct TransformationHash {
    std::size_t operator()(Transformation const& t) const noexcept;
  };

  // Letters are indices into a GeneratorSet's alphabet.
  using Word = std::vector<std::uint8_t>;

  struct Generator {
    std::string    name;
    Transformation map;
  };

  // Named generators in a fixed alphabet order: c, z, e, n, m_2, m_3, m_5, ...
  class GeneratorSet {
   public:
    GeneratorSet(StateSpace space, std::vector<Generator> generators);

    StateSpace const& space() const noexcept {
      return space_;
    }
    int radius() const noexcept {
      return space_.radius();
    }
    std::size_t size() const noexcept {
      return gens_.size();
    }
    Generator const& operator[](std::size_t i) const {
      return gens_.at(i);
    }
    std::vector<Generator> const& generators() const noexcept {
      return gens_;
    }
    std::vector<std::string> names() const;

    std::optional<std::size_t> find(std::string_view name) const noexcept;

    // Subset in alphabet order. Throws InvalidParameter on unknown names.
    GeneratorSet restrict_to(std::span<std::string const> names) const;

    // Left-to-right evaluation; the empty word is the identity.
    Transformation evaluate(Word const& w) const;

    // Names concatenated, e.g. "ccn" or "nm_2ncn".
    std::string format(Word const& w) const;
    // Inverse of format(); tokens are matched greedily against the alphabet.
    Word parse(std::string_view text) const;

   private:
    StateSpace             space_;
    std::vector<Generator> gens_;
  };

  std::vector<int> primes_up_to(int n);

  // Increment, zero, identity, negation and the saturating multiplications
  // m_p(x) = clip(p * x) for every prime p <= min(r, max_prime).
  GeneratorSet make_generators(int r, std::optional<int> max_prime = std::nullopt);

}  // namespace semiconv

#endif  // SEMICONV_TRANSFORM_HPP_
