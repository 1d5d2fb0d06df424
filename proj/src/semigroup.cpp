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

#include "semiconv/semigroup.hpp"

#include <algorithm>
#include <ostream>
#include <string_view>

#include "semiconv/error.hpp"

namespace semiconv {

  namespace {
    std::string_view as_chars(std::span<std::uint8_t const> bytes) noexcept {
      return {reinterpret_cast<char const*>(bytes.data()), bytes.size()};
    }
  }  // namespace

  Semigroup::Semigroup(GeneratorSet gens)
      : gens_(std::move(gens)), degree_(gens_.space().size()), table_(1024, no_parent) {}

  std::size_t Semigroup::hash_at(std::span<std::uint8_t const> image) const noexcept {
    return std::hash<std::string_view>{}(as_chars(image));
  }

  std::optional<std::size_t> Semigroup::lookup(std::span<std::uint8_t const> image) const {
    std::size_t const mask = table_.size() - 1;
    for (std::size_t slot = hash_at(image) & mask;; slot = (slot + 1) & mask) {
      std::uint32_t const idx = table_[slot];
      if (idx == no_parent) {
        return std::nullopt;
      }
      if (std::equal(image.begin(), image.end(), data_.begin() + idx * degree_)) {
        return idx;
      }
    }
  }

  void Semigroup::insert_slot(std::uint32_t index) {
    std::size_t const mask = table_.size() - 1;
    std::size_t       slot = hash_at(image_indices(index)) & mask;
    while (table_[slot] != no_parent) {
      slot = (slot + 1) & mask;
    }
    table_[slot] = index;
  }

  void Semigroup::grow_table() {
    table_.assign(table_.size() * 2, no_parent);
    for (std::uint32_t i = 0; i < size(); ++i) {
      insert_slot(i);
    }
  }

  Transformation Semigroup::element(std::size_t i) const {
    auto img = image_indices(i);
    return Transformation(state_space(), std::vector<std::uint8_t>(img.begin(), img.end()));
  }

  Word Semigroup::word(std::size_t i) const {
    Word w(length_[i]);
    for (std::size_t k = w.size(); k-- > 0;) {
      w[k] = last_[i];
      i    = parent_[i];
    }
    return w;
  }

  std::optional<std::size_t> Semigroup::find(Transformation const& t) const {
    if (t.space() != state_space()) {
      return std::nullopt;
    }
    return lookup(t.image_indices());
  }

  std::optional<std::size_t> Semigroup::find(std::span<std::uint8_t const> image) const {
    if (image.size() != degree_) {
      return std::nullopt;
    }
    return lookup(image);
  }

  std::size_t Semigroup::product(std::size_t i, std::size_t j) const {
    auto                      a = image_indices(i);
    auto                      b = image_indices(j);
    std::vector<std::uint8_t> img(degree_);
    for (std::size_t k = 0; k < degree_; ++k) {
      img[k] = b[a[k]];
    }
    auto found = lookup(img);
    if (!found) {
      throw NotAnElement("product of elements " + std::to_string(i) + " and "
                         + std::to_string(j) + " is not in the semigroup");
    }
    return *found;
  }

  std::size_t Semigroup::right_multiply(std::size_t i, std::size_t g) const {
    auto                      a = image_indices(i);
    auto                      b = gens_[g].map.image_indices();
    std::vector<std::uint8_t> img(degree_);
    for (std::size_t k = 0; k < degree_; ++k) {
      img[k] = b[a[k]];
    }
    auto found = lookup(img);
    if (!found) {
      throw NotAnElement("semigroup is not closed under generator "
                         + gens_[g].name);
    }
    return *found;
  }

  void Semigroup::dump(std::ostream& out) const {
    int const r = state_space().radius();
    for (std::size_t i = 0; i < size(); ++i) {
      out << gens_.format(word(i)) << '\t';
      auto img = image_indices(i);
      for (std::size_t k = 0; k < img.size(); ++k) {
        if (k != 0) {
          out << ',';
        }
        out << static_cast<int>(img[k]) - r;
      }
      out << '\n';
    }
  }

  Semigroup enumerate_closure(GeneratorSet const& gens, std::optional<std::size_t> element_limit) {
    std::size_t const limit = element_limit.value_or(Semigroup::default_element_limit);
    if (limit == 0) {
      throw InvalidParameter("element limit must be positive");
    }
    Semigroup   sg(gens);
    std::size_t d = sg.degree_;

    auto append = [&](std::span<std::uint8_t const> img, std::uint32_t parent,
                      std::uint8_t letter, std::uint32_t length) {
      if (sg.size() >= limit) {
        throw EnumerationOverflow(sg.size() + 1, limit);
      }
      if (2 * (sg.size() + 1) > sg.table_.size()) {
        sg.grow_table();
      }
      sg.data_.insert(sg.data_.end(), img.begin(), img.end());
      sg.parent_.push_back(parent);
      sg.last_.push_back(letter);
      sg.length_.push_back(length);
      sg.insert_slot(static_cast<std::uint32_t>(sg.size() - 1));
    };

    for (std::size_t g = 0; g < gens.size(); ++g) {
      auto img = gens[g].map.image_indices();
      if (!sg.lookup(img)) {
        append(img, Semigroup::no_parent, static_cast<std::uint8_t>(g), 1);
      }
    }

    // Parents are visited in shortlex order and letters in alphabet order, so
    // the first word to reach an element is its shortlex-least word.
    std::vector<std::uint8_t> img(d);
    for (std::size_t i = 0; i < sg.size(); ++i) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto gi = gens[g].map.image_indices();
        auto ai = sg.data_.data() + i * d;
        for (std::size_t k = 0; k < d; ++k) {
          img[k] = gi[ai[k]];
        }
        if (!sg.lookup(img)) {
          append(img, static_cast<std::uint32_t>(i), static_cast<std::uint8_t>(g),
                 sg.length_[i] + 1);
        }
      }
    }
    return sg;
  }

  Semigroup subsemigroup(int r, int a, std::optional<std::size_t> element_limit) {
    if (a < 0) {
      throw InvalidParameter("subsemigroup parameter a must be >= 0, got " + std::to_string(a));
    }
    return enumerate_closure(make_generators(r, a), element_limit);
  }

  Word canonical_word(Semigroup const& sg, Transformation const& t) {
    auto i = sg.find(t);
    if (!i) {
      throw NotAnElement("transformation is not an element of the semigroup");
    }
    return sg.word(*i);
  }

  MultiplicationTable::MultiplicationTable(Semigroup const& sg)
      : n_(sg.size()), entries_(sg.size() * sg.size()) {
    // Row i is filled by walking each column's Schreier path: i * j is
    // (i * parent(j)) * last_letter(j), and parents precede children.
    for (std::size_t i = 0; i < n_; ++i) {
      auto row = entries_.data() + i * n_;
      for (std::size_t j = 0; j < n_; ++j) {
        auto p = sg.parent(j);
        if (p == Semigroup::no_parent) {
          row[j] = static_cast<std::uint32_t>(sg.right_multiply(i, sg.last_letter(j)));
        } else {
          row[j] = static_cast<std::uint32_t>(sg.right_multiply(row[p], sg.last_letter(j)));
        }
      }
    }
  }

  MultiplicationTable multiplication_table(Semigroup const& sg) {
    return MultiplicationTable(sg);
  }

}  // namespace semiconv
