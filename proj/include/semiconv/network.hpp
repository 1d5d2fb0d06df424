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

#ifndef SEMICONV_NETWORK_HPP_
#define SEMICONV_NETWORK_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiconv/quantizer.hpp"
#include "semiconv/tensor.hpp"

namespace semiconv {

  // Values double as the SGCW kind tags.
  enum class LayerKind : std::uint8_t {
    conv2d  = 1,
    relu6   = 2,
    maxpool = 3,
    flatten = 4,
    dense   = 5,
  };

  std::string to_string(LayerKind kind);

  struct LayerSpec {
    LayerKind   kind = LayerKind::relu6;
    // conv2d
    std::size_t kernel_h     = 0;
    std::size_t kernel_w     = 0;
    std::size_t in_channels  = 0;
    std::size_t out_channels = 0;
    std::size_t stride       = 1;
    std::size_t padding      = 0;
    // dense
    std::size_t in_features  = 0;
    std::size_t out_features = 0;

    static LayerSpec conv2d(std::size_t kh, std::size_t kw, std::size_t in, std::size_t out,
                            std::size_t stride = 1, std::size_t padding = 0);
    static LayerSpec dense(std::size_t in, std::size_t out);
    static LayerSpec relu6();
    static LayerSpec maxpool2();
    static LayerSpec flatten();

    // Weight and bias element counts (zero for parameter-free layers).
    std::size_t weight_count() const noexcept;
    std::size_t bias_count() const noexcept;

    // Throws InvalidShape for even kernels, zero sizes or zero stride.
    void validate() const;
    Shape output_shape(Shape const& in) const;

    bool operator==(LayerSpec const&) const = default;
  };

  // Conv weights are laid out [out][kh][kw][in], dense weights [out][in].
  struct Layer {
    LayerSpec          spec;
    std::vector<float> weights;
    std::vector<float> bias;

    bool operator==(Layer const&) const = default;
  };

  class Network {
   public:
    Network() = default;
    explicit Network(std::vector<Layer> layers);

    std::vector<Layer> const& layers() const noexcept {
      return layers_;
    }
    std::size_t parameter_count() const noexcept;

    // Shape after each layer; throws InvalidShape on any mismatch.
    std::vector<Shape> infer_shapes(Shape const& input) const;

    bool operator==(Network const&) const = default;

   private:
    std::vector<Layer> layers_;
  };

  // pad 28x28 -> 32x32 (as conv padding 2), conv 5x5x1->6, relu6, maxpool2,
  // conv 5x5x6->16, relu6, maxpool2, flatten, dense 400->120, relu6,
  // dense 120->84, relu6, dense 84->10.
  std::vector<LayerSpec> lenet5_variant();
  inline constexpr Shape mnist_input_shape{28, 28, 1};

  // Zero-initialised parameters for a list of specs.
  Network make_network(std::vector<LayerSpec> const& specs);

  // Per-output-channel sum over input channels of 2-D cross-correlation,
  // plus bias, zero padding.
  TensorF conv2d_float(TensorF const& x, Layer const& layer);

  enum class SumPolicy {
    exact,              // wide-integer channel sum, clipped once
    clip_per_channel,   // accumulator clipped after every channel
  };

  enum class WeightScale {
    activation_map,  // kernels use the same (r, q) map as the activations
    layer_max,       // per-layer q_w = max |w|
  };

  struct QuantOptions {
    SumPolicy          sum_policy     = SumPolicy::exact;
    WeightScale        weight_scale   = WeightScale::activation_map;
    OffsetAccumulation offsets        = OffsetAccumulation::exact;
    bool               include_bias   = true;
    bool               quantize_dense = false;

    bool operator==(QuantOptions const&) const = default;
  };

  // Products of an activation state and a weight state carry the scale
  // (r/q) * (r/q_w). This is the bound, in those units, that corresponds
  // to +-r activation states: floor(r^2 / q_w), at least 1.
  std::int64_t accumulator_bound(QuantParams const& activations, QuantParams const& weights);

  // Accumulator (product units) to activation states:
  // round(acc * q_w / r) under the activation rounding mode, unclipped.
  QState requantize(std::int64_t acc, QuantParams const& activations,
                    QuantParams const& weights);

  QuantParams weight_params(Layer const& layer, QuantParams const& activations,
                            WeightScale scale);

  // A conv or dense layer with its kernels and bias already quantized.
  class QuantizedLayer {
   public:
    QuantizedLayer(Layer const& layer, QuantParams const& activations, QuantOptions options);

    // Conv: each sub-convolution is apply_action(centre, make_action(window,
    // kernel), bound); per-channel results are summed under the sum policy,
    // requantized, the quantized bias added, and clipped to +-r.
    TensorQ apply(TensorQ const& x) const;

    QuantParams const& activations() const noexcept {
      return act_;
    }
    QuantParams const& weights() const noexcept {
      return wts_;
    }
    std::int64_t bound() const noexcept {
      return bound_;
    }
    std::vector<QState> const& kernel_states() const noexcept {
      return kernel_;
    }
    std::vector<QState> const& bias_states() const noexcept {
      return bias_;
    }

   private:
    TensorQ apply_conv(TensorQ const& x) const;
    TensorQ apply_dense(TensorQ const& x) const;

    LayerSpec           spec_;
    QuantParams         act_;
    QuantParams         wts_;
    QuantOptions        opts_;
    std::int64_t        bound_;
    std::vector<QState> kernel_;
    std::vector<QState> bias_;
  };

  TensorQ conv2d_quantized(TensorQ const& x, Layer const& layer, QuantParams const& p,
                           QuantOptions const& options = {});

  TensorF relu6(TensorF const& x);
  // Upper bound is the state of 6.0: min(r, round(6 r / q)).
  TensorQ relu6(TensorQ const& x, QuantParams const& p);
  QState  relu6_bound(QuantParams const& p);

  template <typename T>
  Tensor<T> maxpool2(Tensor<T> const& x);
  TensorQ   maxpool2(TensorQ const& x);

  TensorF flatten(TensorF const& x);
  TensorF dense(TensorF const& x, Layer const& layer);

  enum class Mode { float_path, quantized };

  struct ForwardResult {
    std::size_t        label = 0;
    std::vector<float> logits;
  };

  // Forward passes with every quantized layer prepared once. Immutable after
  // construction; run() is safe to call from several threads.
  class InferenceEngine {
   public:
    InferenceEngine(Network const& net, Mode mode, std::optional<QuantParams> params = {},
                    QuantOptions options = {});

    ForwardResult run(TensorF const& image) const;
    Mode mode() const noexcept {
      return mode_;
    }

   private:
    Network const*                             net_;
    Mode                                       mode_;
    std::optional<QuantParams>                 params_;
    QuantOptions                               opts_;
    std::vector<std::optional<QuantizedLayer>> prepared_;
  };

  // In quantized mode every conv layer quantizes its input and kernels,
  // runs conv2d_quantized and dequantizes; other layers stay in float
  // unless options.quantize_dense is set.
  ForwardResult forward(Network const& net, TensorF const& image, Mode mode,
                        std::optional<QuantParams> params = {}, QuantOptions options = {});

  std::size_t argmax(std::vector<float> const& v);

}  // namespace semiconv

#endif  // SEMICONV_NETWORK_HPP_
