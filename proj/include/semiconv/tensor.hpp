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

#ifndef SEMICONV_TENSOR_HPP_
#define SEMICONV_TENSOR_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "semiconv/quantizer.hpp"

namespace semiconv {

  struct Shape {
    std::size_t height   = 0;
    std::size_t width    = 0;
    std::size_t channels = 0;

    std::size_t size() const noexcept {
      return height * width * channels;
    }
    std::string str() const;
    bool operator==(Shape const&) const = default;
  };

  // Height x width x channels, row-major with channels innermost.
  template <typename T>
  class Tensor {
   public:
    Tensor() = default;
    explicit Tensor(Shape shape, T fill = T{}) : shape_(shape), data_(shape.size(), fill) {}
    Tensor(Shape shape, std::vector<T> data);

    Shape const& shape() const noexcept {
      return shape_;
    }
    std::size_t size() const noexcept {
      return data_.size();
    }
    std::vector<T> const& data() const noexcept {
      return data_;
    }
    std::vector<T>& data() noexcept {
      return data_;
    }

    std::size_t offset(std::size_t y, std::size_t x, std::size_t c) const noexcept {
      return (y * shape_.width + x) * shape_.channels + c;
    }
    T& at(std::size_t y, std::size_t x, std::size_t c) noexcept {
      return data_[offset(y, x, c)];
    }
    T const& at(std::size_t y, std::size_t x, std::size_t c) const noexcept {
      return data_[offset(y, x, c)];
    }

    bool operator==(Tensor const&) const = default;

   private:
    Shape          shape_;
    std::vector<T> data_;
  };

  using TensorF = Tensor<float>;

  // Finite-state tensor: every value lies in -r..r.
  class TensorQ {
   public:
    TensorQ(Shape shape, std::int64_t r);
    TensorQ(Shape shape, std::vector<QState> data, std::int64_t r);

    Shape const& shape() const noexcept {
      return values_.shape();
    }
    std::int64_t radius() const noexcept {
      return r_;
    }
    std::vector<QState> const& data() const noexcept {
      return values_.data();
    }
    QState at(std::size_t y, std::size_t x, std::size_t c) const noexcept {
      return values_.at(y, x, c);
    }
    void set(std::size_t y, std::size_t x, std::size_t c, QState v);

    bool operator==(TensorQ const&) const = default;

   private:
    Tensor<QState> values_;
    std::int64_t   r_;
  };

  TensorQ quantize(TensorF const& x, QuantParams const& p);
  TensorF dequantize(TensorQ const& x, QuantParams const& p);

}  // namespace semiconv

#endif  // SEMICONV_TENSOR_HPP_
