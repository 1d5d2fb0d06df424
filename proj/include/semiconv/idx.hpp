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

#ifndef SEMICONV_IDX_HPP_
#define SEMICONV_IDX_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "semiconv/tensor.hpp"

namespace semiconv {

  // Raw IDX array: unsigned-byte payload, big-endian dimension header.
  struct IdxArray {
    std::vector<std::uint32_t> dims;
    std::vector<std::uint8_t>  values;
  };

  // Throws FormatError (with byte offset) for a bad magic, an element type
  // other than unsigned byte, or a payload shorter than the header claims.
  IdxArray parse_idx(std::span<std::uint8_t const> bytes);
  IdxArray read_idx(std::filesystem::path const& path);

  // Labeled images, pixels stored as bytes and scaled to [0, 1] on access.
  class Dataset {
   public:
    Dataset() = default;
    Dataset(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> pixels,
            std::vector<std::uint8_t> labels);

    std::size_t size() const noexcept {
      return labels_.size();
    }
    Shape image_shape() const noexcept {
      return {rows_, cols_, 1};
    }
    TensorF image(std::size_t i) const;
    std::uint8_t label(std::size_t i) const;
    std::span<std::uint8_t const> pixels(std::size_t i) const;

   private:
    std::size_t               rows_ = 0;
    std::size_t               cols_ = 0;
    std::vector<std::uint8_t> pixels_;
    std::vector<std::uint8_t> labels_;
  };

  // Image file must be 3-D, label file 1-D, with equal counts.
  Dataset load_mnist(std::filesystem::path const& images, std::filesystem::path const& labels);
  // The t10k pair inside `dir`.
  Dataset load_mnist_dir(std::filesystem::path const& dir);

}  // namespace semiconv

#endif  // SEMICONV_IDX_HPP_
