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

#ifndef SEMICONV_SEMIGROUP_HPP_
#define SEMICONV_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "semiconv/transform.hpp"

namespace semiconv {

  // A transformation semigroup enumerated from its generators.
  //
  // Elements are numbered in shortlex order of their canonical words: the
  // canonical word of an element is the shortlex-least word over the
  // generator alphabet that evaluates to it. Storage is a flat byte buffer
  // (degree bytes per element) plus a Schreier tree of (parent, letter)
  // pairs from which words are rebuilt on demand.
  class Semigroup {
   public:
    static constexpr std::size_t default_element_limit = 2'000'000;
    static constexpr std::uint32_t no_parent = UINT32_MAX;

    GeneratorSet const& generators() const noexcept {
      return gens_;
    }
    StateSpace const& state_space() const noexcept {
      return gens_.space();
    }
    std::size_t size() const noexcept {
      return parent_.size();
    }
    std::size_t degree() const noexcept {
      return degree_;
    }

    Transformation element(std::size_t i) const;
    std::span<std::uint8_t const> image_indices(std::size_t i) const noexcept {
      return {data_.data() + i * degree_, degree_};
    }

    Word word(std::size_t i) const;
    std::size_t word_length(std::size_t i) const noexcept {
      return length_[i];
    }
    // Index of the element reached from `i` by dropping its last letter,
    // or no_parent for generators.
    std::uint32_t parent(std::size_t i) const noexcept {
      return parent_[i];
    }
    std::uint8_t last_letter(std::size_t i) const noexcept {
      return last_[i];
    }

    std::optional<std::size_t> find(Transformation const& t) const;
    std::optional<std::size_t> find(std::span<std::uint8_t const> image) const;
    bool contains(Transformation const& t) const {
      return find(t).has_value();
    }

    // Index of compose(element(i), element(j)).
    std::size_t product(std::size_t i, std::size_t j) const;
    // Index of compose(element(i), generator g).
    std::size_t right_multiply(std::size_t i, std::size_t g) const;

    // One line per element: "word<TAB>t(-r),...,t(r)".
    void dump(std::ostream& out) const;

   private:
    friend Semigroup enumerate_closure(GeneratorSet const&, std::optional<std::size_t>);

    explicit Semigroup(GeneratorSet gens);

    std::size_t hash_at(std::span<std::uint8_t const> image) const noexcept;
    std::optional<std::size_t> lookup(std::span<std::uint8_t const> image) const;
    void insert_slot(std::uint32_t index);
    void grow_table();

    GeneratorSet               gens_;
    std::size_t                degree_;
    std::vector<std::uint8_t>  data_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t>  last_;
    std::vector<std::uint32_t> length_;
    std::vector<std::uint32_t> table_;  // open addressing, no_parent == empty
  };

  // Breadth-first closure in shortlex order. Throws EnumerationOverflow when
  // more than `element_limit` elements are found.
  Semigroup enumerate_closure(GeneratorSet const& gens,
                              std::optional<std::size_t> element_limit = std::nullopt);

  // CS_{r-a}: the four base generators plus m_p for primes p <= min(a, r).
  Semigroup subsemigroup(int r, int a, std::optional<std::size_t> element_limit = std::nullopt);

  // Throws NotAnElement when t is not in sg.
  Word canonical_word(Semigroup const& sg, Transformation const& t);

  class MultiplicationTable {
   public:
    explicit MultiplicationTable(Semigroup const& sg);

    std::size_t size() const noexcept {
      return n_;
    }
    // Index of the element for "apply i, then j".
    std::uint32_t at(std::size_t i, std::size_t j) const noexcept {
      return entries_[i * n_ + j];
    }
    std::span<std::uint32_t const> row(std::size_t i) const noexcept {
      return {entries_.data() + i * n_, n_};
    }

   private:
    std::size_t                n_;
    std::vector<std::uint32_t> entries_;
  };

  MultiplicationTable multiplication_table(Semigroup const& sg);

}  // namespace semiconv

#endif  // SEMICONV_SEMIGROUP_HPP_
