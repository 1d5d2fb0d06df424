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

#ifndef SEMICONV_QUANTIZER_HPP_
#define SEMICONV_QUANTIZER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "semiconv/transform.hpp"

namespace semiconv {

  // Integer states of the quantized domain. Radii here go far past the
  // semigroup engine's 127 (the r -> infinity proxy uses 2^20), so these
  // are 64-bit.
  using QState = std::int64_t;

  enum class Rounding { half_away_from_zero, half_to_even };

  // Symmetric linear map [-q, q] -> {-r, ..., r}.
  class QuantParams {
   public:
    QuantParams(std::int64_t r, double q, Rounding rounding = Rounding::half_away_from_zero);

    std::int64_t radius() const noexcept {
      return r_;
    }
    double clip_magnitude() const noexcept {
      return q_;
    }
    Rounding rounding() const noexcept {
      return rounding_;
    }
    // States per unit of real value, r / q.
    double scale() const noexcept {
      return static_cast<double>(r_) / q_;
    }
    // Width of one quantization bin, q / r.
    double bin_width() const noexcept {
      return q_ / static_cast<double>(r_);
    }

    bool operator==(QuantParams const&) const = default;

   private:
    std::int64_t r_;
    double       q_;
    Rounding     rounding_;
  };

  constexpr QState clip(QState x, std::int64_t r) noexcept {
    return x < -r ? -r : (x > r ? r : x);
  }

  double round_to_integer(double v, Rounding mode) noexcept;

  // Clip to [-q, q], scale by r/q, round. Throws InvalidValue for NaN/inf.
  QState quantize(double v, QuantParams const& p);
  // x * q / r. Throws InvalidState if x is outside -r..r.
  double dequantize(QState x, QuantParams const& p);

  // Row-major 2-D patch view.
  template <typename T>
  struct Patch {
    std::size_t         height;
    std::size_t         width;
    std::span<T const> values;

    T const& at(std::size_t row, std::size_t col) const {
      return values[row * width + col];
    }
    std::size_t center() const noexcept {
      return (height / 2) * width + width / 2;
    }
  };

  // x -> clip(clip(m * x) + b): one sub-convolution acting on its centre
  // state. m is the quantized kernel centre; b the exact dot product of the
  // remaining window and kernel entries.
  struct SemigroupAction {
    QState m = 1;
    QState b = 0;
    bool operator==(SemigroupAction const&) const = default;
  };

  enum class OffsetAccumulation {
    exact,          // wide-integer dot product, range handled by the outer clip
    clip_per_term,  // running sum clipped to +-bound after every term
  };

  // From already-quantized patches. Both patches must share odd dimensions.
  SemigroupAction make_action(Patch<QState> const& window, Patch<QState> const& kernel,
                              OffsetAccumulation accumulation = OffsetAccumulation::exact,
                              std::int64_t       bound        = 0);

  // From real patches; the window uses `activations`, the kernel `weights`.
  SemigroupAction make_action(Patch<double> const& window, Patch<double> const& kernel,
                              QuantParams const& activations, QuantParams const& weights);
  SemigroupAction make_action(Patch<double> const& window, Patch<double> const& kernel,
                              QuantParams const& p);

  // clip(clip(m * x) + b) with both clips at +-r. Total over all integers x;
  // for x in -r..r the result stays in -r..r.
  constexpr QState apply_action(QState x, SemigroupAction const& act, std::int64_t r) noexcept {
    return clip(clip(act.m * x, r) + act.b, r);
  }

  // A word over c, z, e, n, m_p equal to the action on every state of X_r:
  // z for m = 0; otherwise n (when m < 0) followed by the prime factors of
  // |m| ascending; then c^b for b > 0 or (n c n)^|b| for b < 0. The identity
  // action is the single letter e. Throws UnrepresentableMultiplier for
  // |m| > r.
  Word action_to_word(SemigroupAction const& act, GeneratorSet const& gens);
  Word action_to_word(SemigroupAction const& act, int r);

}  // namespace semiconv

#endif  // SEMICONV_QUANTIZER_HPP_
