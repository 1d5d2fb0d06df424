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

#include "semiconv/tensor.hpp"

#include "semiconv/error.hpp"

namespace semiconv {

  std::string Shape::str() const {
    return std::to_string(height) + "x" + std::to_string(width) + "x" + std::to_string(channels);
  }

  template <typename T>
  Tensor<T>::Tensor(Shape shape, std::vector<T> data) : shape_(shape), data_(std::move(data)) {
    if (data_.size() != shape_.size()) {
      throw InvalidShape("tensor of shape " + shape_.str() + " needs " + std::to_string(shape_.size())
                         + " values, got " + std::to_string(data_.size()));
    }
  }

  template class Tensor<float>;
  template class Tensor<QState>;

  TensorQ::TensorQ(Shape shape, std::int64_t r) : values_(shape, 0), r_(r) {
    if (r < 1) {
      throw InvalidParameter("tensor radius must be >= 1");
    }
  }

  TensorQ::TensorQ(Shape shape, std::vector<QState> data, std::int64_t r)
      : values_(shape, std::move(data)), r_(r) {
    if (r < 1) {
      throw InvalidParameter("tensor radius must be >= 1");
    }
    for (QState v : values_.data()) {
      if (v < -r || v > r) {
        throw InvalidState("tensor value " + std::to_string(v) + " is outside -"
                           + std::to_string(r) + ".." + std::to_string(r));
      }
    }
  }

  void TensorQ::set(std::size_t y, std::size_t x, std::size_t c, QState v) {
    if (v < -r_ || v > r_) {
      throw InvalidState("tensor value " + std::to_string(v) + " is outside -"
                         + std::to_string(r_) + ".." + std::to_string(r_));
    }
    values_.at(y, x, c) = v;
  }

  TensorQ quantize(TensorF const& x, QuantParams const& p) {
    std::vector<QState> out(x.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = quantize(static_cast<double>(x.data()[i]), p);
    }
    return TensorQ(x.shape(), std::move(out), p.radius());
  }

  TensorF dequantize(TensorQ const& x, QuantParams const& p) {
    if (x.radius() != p.radius()) {
      throw Incompatible("tensor radius " + std::to_string(x.radius())
                         + " does not match quantization radius " + std::to_string(p.radius()));
    }
    std::vector<float> out(x.data().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = static_cast<float>(dequantize(x.data()[i], p));
    }
    return TensorF(x.shape(), std::move(out));
  }

}  // namespace semiconv
