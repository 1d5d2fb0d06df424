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

#include "semiconv/idx.hpp"

#include <fstream>
#include <iterator>

#include "semiconv/error.hpp"

namespace semiconv {

  namespace {
    std::uint32_t be32(std::span<std::uint8_t const> b, std::size_t at) {
      return (std::uint32_t{b[at]} << 24) | (std::uint32_t{b[at + 1]} << 16)
             | (std::uint32_t{b[at + 2]} << 8) | std::uint32_t{b[at + 3]};
    }

    std::vector<std::uint8_t> slurp(std::filesystem::path const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw IoError("cannot open " + path.string());
      }
      return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }

    constexpr std::uint8_t unsigned_byte = 0x08;
  }  // namespace

  IdxArray parse_idx(std::span<std::uint8_t const> bytes) {
    if (bytes.size() < 4) {
      throw FormatError("IDX header truncated", bytes.size());
    }
    if (bytes[0] != 0 || bytes[1] != 0) {
      throw FormatError("bad IDX magic", 0);
    }
    if (bytes[2] != unsigned_byte) {
      throw FormatError("unsupported IDX element type " + std::to_string(bytes[2]), 2);
    }
    std::size_t const ndim = bytes[3];
    if (ndim == 0) {
      throw FormatError("IDX file declares zero dimensions", 3);
    }
    std::size_t const header = 4 + 4 * ndim;
    if (bytes.size() < header) {
      throw FormatError("IDX header truncated", bytes.size());
    }
    IdxArray    out;
    std::size_t count = 1;
    for (std::size_t d = 0; d < ndim; ++d) {
      out.dims.push_back(be32(bytes, 4 + 4 * d));
      count *= out.dims.back();
    }
    if (bytes.size() - header < count) {
      throw FormatError("IDX payload truncated: expected " + std::to_string(count) + " bytes",
                        bytes.size());
    }
    if (bytes.size() - header > count) {
      throw FormatError("trailing bytes after IDX payload", header + count);
    }
    out.values.assign(bytes.begin() + static_cast<std::ptrdiff_t>(header), bytes.end());
    return out;
  }

  IdxArray read_idx(std::filesystem::path const& path) {
    auto const bytes = slurp(path);
    return parse_idx(bytes);
  }

  Dataset::Dataset(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> pixels,
                   std::vector<std::uint8_t> labels)
      : rows_(rows), cols_(cols), pixels_(std::move(pixels)), labels_(std::move(labels)) {
    if (pixels_.size() != rows_ * cols_ * labels_.size()) {
      throw InvalidShape("dataset pixel count does not match " + std::to_string(labels_.size())
                         + " images of " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }

  std::span<std::uint8_t const> Dataset::pixels(std::size_t i) const {
    if (i >= size()) {
      throw InvalidParameter("image index " + std::to_string(i) + " out of range");
    }
    return std::span<std::uint8_t const>(pixels_).subspan(i * rows_ * cols_, rows_ * cols_);
  }

  TensorF Dataset::image(std::size_t i) const {
    auto const         px = pixels(i);
    std::vector<float> v(px.size());
    for (std::size_t k = 0; k < px.size(); ++k) {
      v[k] = static_cast<float>(px[k]) / 255.0f;
    }
    return TensorF(image_shape(), std::move(v));
  }

  std::uint8_t Dataset::label(std::size_t i) const {
    if (i >= size()) {
      throw InvalidParameter("label index " + std::to_string(i) + " out of range");
    }
    return labels_[i];
  }

  Dataset load_mnist(std::filesystem::path const& images, std::filesystem::path const& labels) {
    IdxArray img = read_idx(images);
    IdxArray lab = read_idx(labels);
    if (img.dims.size() != 3) {
      throw FormatError(images.string() + ": image file must have 3 dimensions", 3);
    }
    if (lab.dims.size() != 1) {
      throw FormatError(labels.string() + ": label file must have 1 dimension", 3);
    }
    if (img.dims[0] != lab.dims[0]) {
      throw FormatError("image count " + std::to_string(img.dims[0]) + " differs from label count "
                            + std::to_string(lab.dims[0]),
                        4);
    }
    return Dataset(img.dims[1], img.dims[2], std::move(img.values), std::move(lab.values));
  }

  Dataset load_mnist_dir(std::filesystem::path const& dir) {
    return load_mnist(dir / "t10k-images-idx3-ubyte", dir / "t10k-labels-idx1-ubyte");
  }

}  // namespace semiconv
