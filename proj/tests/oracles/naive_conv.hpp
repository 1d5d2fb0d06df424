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

#ifndef SEMICONV_TESTS_NAIVE_CONV_HPP_
#define SEMICONV_TESTS_NAIVE_CONV_HPP_

// Loop-nest references for the network layers. The float versions share no
// code with the library. The quantized reference rebuilds every window as
// a Patch and goes through make_action/apply_action one sub-convolution at
// a time, which is the definition the optimised path must agree with.

#include <algorithm>
#include <cmath>
#include <vector>

#include "semiconv/network.hpp"
#include "semiconv/quantizer.hpp"

namespace oracle {

  // x: H*W*C row-major HWC. w: [o][ky][kx][c]. Zero padding.
  inline std::vector<double> conv_float(std::vector<double> const& x, int H, int W, int C,
                                        std::vector<double> const& w, std::vector<double> const& b,
                                        int K, int O, int stride, int pad, int& OH, int& OW) {
    OH = (H + 2 * pad - K) / stride + 1;
    OW = (W + 2 * pad - K) / stride + 1;
    std::vector<double> y(static_cast<std::size_t>(OH * OW * O));
    for (int oy = 0; oy < OH; ++oy) {
      for (int ox = 0; ox < OW; ++ox) {
        for (int o = 0; o < O; ++o) {
          double s = b[static_cast<std::size_t>(o)];
          for (int ky = 0; ky < K; ++ky) {
            for (int kx = 0; kx < K; ++kx) {
              int const iy = oy * stride + ky - pad, ix = ox * stride + kx - pad;
              if (iy < 0 || iy >= H || ix < 0 || ix >= W) {
                continue;
              }
              for (int c = 0; c < C; ++c) {
                s += x[static_cast<std::size_t>((iy * W + ix) * C + c)]
                     * w[static_cast<std::size_t>(((o * K + ky) * K + kx) * C + c)];
              }
            }
          }
          y[static_cast<std::size_t>((oy * OW + ox) * O + o)] = s;
        }
      }
    }
    return y;
  }

  inline std::vector<double> dense_float(std::vector<double> const& x, std::vector<double> const& w,
                                         std::vector<double> const& b) {
    std::size_t const   out = b.size(), in = x.size();
    std::vector<double> y(out);
    for (std::size_t j = 0; j < out; ++j) {
      y[j] = b[j];
      for (std::size_t i = 0; i < in; ++i) {
        y[j] += w[j * in + i] * x[i];
      }
    }
    return y;
  }

  inline std::vector<double> maxpool2_float(std::vector<double> const& x, int H, int W, int C) {
    std::vector<double> y(static_cast<std::size_t>((H / 2) * (W / 2) * C));
    for (int oy = 0; oy < H / 2; ++oy) {
      for (int ox = 0; ox < W / 2; ++ox) {
        for (int c = 0; c < C; ++c) {
          double m = -INFINITY;
          for (int dy = 0; dy < 2; ++dy) {
            for (int dx = 0; dx < 2; ++dx) {
              m = std::max(m, x[static_cast<std::size_t>(((2 * oy + dy) * W + 2 * ox + dx) * C + c)]);
            }
          }
          y[static_cast<std::size_t>((oy * (W / 2) + ox) * C + c)] = m;
        }
      }
    }
    return y;
  }

  // Per-window action reference for QuantizedLayer::apply on a conv layer.
  inline semiconv::TensorQ conv_by_actions(semiconv::TensorQ const& x,
                                           semiconv::QuantizedLayer const& ql,
                                           semiconv::LayerSpec const& s,
                                           semiconv::QuantOptions const& opts) {
    using namespace semiconv;
    auto const  out = s.output_shape(x.shape());
    auto const  R   = ql.bound();
    auto const& k   = ql.kernel_states();
    long const  H = static_cast<long>(x.shape().height), W = static_cast<long>(x.shape().width);
    TensorQ     y(out, x.radius());
    for (std::size_t oy = 0; oy < out.height; ++oy) {
      for (std::size_t ox = 0; ox < out.width; ++ox) {
        for (std::size_t o = 0; o < s.out_channels; ++o) {
          std::int64_t acc = 0;
          for (std::size_t c = 0; c < s.in_channels; ++c) {
            std::vector<QState> window, kernel;
            for (std::size_t ky = 0; ky < s.kernel_h; ++ky) {
              for (std::size_t kx = 0; kx < s.kernel_w; ++kx) {
                long const iy = static_cast<long>(oy * s.stride + ky) - static_cast<long>(s.padding);
                long const ix = static_cast<long>(ox * s.stride + kx) - static_cast<long>(s.padding);
                bool const in = iy >= 0 && iy < H && ix >= 0 && ix < W;
                window.push_back(in ? x.at(static_cast<std::size_t>(iy), static_cast<std::size_t>(ix), c) : 0);
                kernel.push_back(k[((o * s.kernel_h + ky) * s.kernel_w + kx) * s.in_channels + c]);
              }
            }
            Patch<QState> const wp{s.kernel_h, s.kernel_w, window};
            Patch<QState> const kp{s.kernel_h, s.kernel_w, kernel};
            auto const act = make_action(wp, kp, opts.offsets, R);
            QState const sub = apply_action(wp.values[wp.center()], act, R);
            acc = opts.sum_policy == SumPolicy::exact ? acc + sub : clip(acc + sub, R);
          }
          y.set(oy, ox, o, clip(requantize(acc, ql.activations(), ql.weights()) + ql.bias_states()[o],
                                x.radius()));
        }
      }
    }
    return y;
  }

}  // namespace oracle

#endif  // SEMICONV_TESTS_NAIVE_CONV_HPP_
