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

#include "semiconv/network.hpp"

#include <algorithm>
#include <cmath>

#include "semiconv/error.hpp"

namespace semiconv {

  std::string to_string(LayerKind kind) {
    switch (kind) {
      case LayerKind::conv2d:
        return "conv2d";
      case LayerKind::relu6:
        return "relu6";
      case LayerKind::maxpool:
        return "maxpool";
      case LayerKind::flatten:
        return "flatten";
      case LayerKind::dense:
        return "dense";
    }
    return "unknown";
  }

  LayerSpec LayerSpec::conv2d(std::size_t kh, std::size_t kw, std::size_t in, std::size_t out,
                              std::size_t stride, std::size_t padding) {
    LayerSpec s;
    s.kind         = LayerKind::conv2d;
    s.kernel_h     = kh;
    s.kernel_w     = kw;
    s.in_channels  = in;
    s.out_channels = out;
    s.stride       = stride;
    s.padding      = padding;
    return s;
  }

  LayerSpec LayerSpec::dense(std::size_t in, std::size_t out) {
    LayerSpec s;
    s.kind         = LayerKind::dense;
    s.in_features  = in;
    s.out_features = out;
    return s;
  }

  LayerSpec LayerSpec::relu6() {
    return LayerSpec{};
  }

  LayerSpec LayerSpec::maxpool2() {
    LayerSpec s;
    s.kind = LayerKind::maxpool;
    return s;
  }

  LayerSpec LayerSpec::flatten() {
    LayerSpec s;
    s.kind = LayerKind::flatten;
    return s;
  }

  std::size_t LayerSpec::weight_count() const noexcept {
    switch (kind) {
      case LayerKind::conv2d:
        return kernel_h * kernel_w * in_channels * out_channels;
      case LayerKind::dense:
        return in_features * out_features;
      default:
        return 0;
    }
  }

  std::size_t LayerSpec::bias_count() const noexcept {
    switch (kind) {
      case LayerKind::conv2d:
        return out_channels;
      case LayerKind::dense:
        return out_features;
      default:
        return 0;
    }
  }

  void LayerSpec::validate() const {
    if (kind == LayerKind::conv2d) {
      if (kernel_h == 0 || kernel_w == 0 || kernel_h % 2 == 0 || kernel_w % 2 == 0) {
        throw InvalidShape("conv kernels must have odd, nonzero dimensions, got "
                           + std::to_string(kernel_h) + "x" + std::to_string(kernel_w));
      }
      if (in_channels == 0 || out_channels == 0) {
        throw InvalidShape("conv channel counts must be positive");
      }
      if (stride == 0) {
        throw InvalidShape("conv stride must be positive");
      }
    } else if (kind == LayerKind::dense) {
      if (in_features == 0 || out_features == 0) {
        throw InvalidShape("dense sizes must be positive");
      }
    }
  }

  Shape LayerSpec::output_shape(Shape const& in) const {
    validate();
    switch (kind) {
      case LayerKind::conv2d: {
        if (in.channels != in_channels) {
          throw InvalidShape("conv expects " + std::to_string(in_channels)
                             + " input channels, got " + in.str());
        }
        std::size_t const ph = in.height + 2 * padding;
        std::size_t const pw = in.width + 2 * padding;
        if (ph < kernel_h || pw < kernel_w) {
          throw InvalidShape("conv input " + in.str() + " is smaller than its kernel");
        }
        return {(ph - kernel_h) / stride + 1, (pw - kernel_w) / stride + 1, out_channels};
      }
      case LayerKind::maxpool:
        if (in.height % 2 != 0 || in.width % 2 != 0) {
          throw InvalidShape("maxpool2 needs even spatial dimensions, got " + in.str());
        }
        return {in.height / 2, in.width / 2, in.channels};
      case LayerKind::flatten:
        return {1, 1, in.size()};
      case LayerKind::dense:
        if (in.height != 1 || in.width != 1 || in.channels != in_features) {
          throw InvalidShape("dense expects a flat input of " + std::to_string(in_features)
                             + " features, got " + in.str());
        }
        return {1, 1, out_features};
      case LayerKind::relu6:
        return in;
    }
    throw InvalidShape("unknown layer kind");
  }

  Network::Network(std::vector<Layer> layers) : layers_(std::move(layers)) {
    for (auto const& l : layers_) {
      l.spec.validate();
      if (l.weights.size() != l.spec.weight_count() || l.bias.size() != l.spec.bias_count()) {
        throw InvalidShape(to_string(l.spec.kind) + " layer parameter counts do not match its spec");
      }
      for (float v : l.weights) {
        if (!std::isfinite(v)) {
          throw InvalidValue("non-finite weight");
        }
      }
      for (float v : l.bias) {
        if (!std::isfinite(v)) {
          throw InvalidValue("non-finite bias");
        }
      }
    }
  }

  std::size_t Network::parameter_count() const noexcept {
    std::size_t n = 0;
    for (auto const& l : layers_) {
      n += l.weights.size() + l.bias.size();
    }
    return n;
  }

  std::vector<Shape> Network::infer_shapes(Shape const& input) const {
    std::vector<Shape> out;
    Shape              s = input;
    for (auto const& l : layers_) {
      s = l.spec.output_shape(s);
      out.push_back(s);
    }
    return out;
  }

  std::vector<LayerSpec> lenet5_variant() {
    return {LayerSpec::conv2d(5, 5, 1, 6, 1, 2),
            LayerSpec::relu6(),
            LayerSpec::maxpool2(),
            LayerSpec::conv2d(5, 5, 6, 16),
            LayerSpec::relu6(),
            LayerSpec::maxpool2(),
            LayerSpec::flatten(),
            LayerSpec::dense(400, 120),
            LayerSpec::relu6(),
            LayerSpec::dense(120, 84),
            LayerSpec::relu6(),
            LayerSpec::dense(84, 10)};
  }

  Network make_network(std::vector<LayerSpec> const& specs) {
    std::vector<Layer> layers;
    for (auto const& s : specs) {
      layers.push_back({s, std::vector<float>(s.weight_count()), std::vector<float>(s.bias_count())});
    }
    return Network(std::move(layers));
  }

  namespace {
    void require_kind(Layer const& layer, LayerKind kind) {
      if (layer.spec.kind != kind) {
        throw InvalidParameter("expected a " + to_string(kind) + " layer, got "
                               + to_string(layer.spec.kind));
      }
    }
  }  // namespace

  TensorF conv2d_float(TensorF const& x, Layer const& layer) {
    require_kind(layer, LayerKind::conv2d);
    auto const& s   = layer.spec;
    Shape const out = s.output_shape(x.shape());
    TensorF     y(out);
    long const  H = static_cast<long>(x.shape().height), W = static_cast<long>(x.shape().width);
    long const  pad = static_cast<long>(s.padding);
    for (std::size_t oy = 0; oy < out.height; ++oy) {
      for (std::size_t ox = 0; ox < out.width; ++ox) {
        for (std::size_t o = 0; o < s.out_channels; ++o) {
          double sum = layer.bias[o];
          for (std::size_t ky = 0; ky < s.kernel_h; ++ky) {
            long const iy = static_cast<long>(oy * s.stride + ky) - pad;
            if (iy < 0 || iy >= H) {
              continue;
            }
            for (std::size_t kx = 0; kx < s.kernel_w; ++kx) {
              long const ix = static_cast<long>(ox * s.stride + kx) - pad;
              if (ix < 0 || ix >= W) {
                continue;
              }
              float const* w = &layer.weights[((o * s.kernel_h + ky) * s.kernel_w + kx) * s.in_channels];
              float const* v = &x.at(static_cast<std::size_t>(iy), static_cast<std::size_t>(ix), 0);
              for (std::size_t c = 0; c < s.in_channels; ++c) {
                sum += static_cast<double>(v[c]) * static_cast<double>(w[c]);
              }
            }
          }
          y.at(oy, ox, o) = static_cast<float>(sum);
        }
      }
    }
    return y;
  }

  std::int64_t accumulator_bound(QuantParams const& activations, QuantParams const& weights) {
    double const r = static_cast<double>(activations.radius());
    double const b = std::floor(r * r / weights.clip_magnitude());
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(b));
  }

  QState requantize(std::int64_t acc, QuantParams const& activations, QuantParams const& weights) {
    double const v = static_cast<double>(acc) * weights.clip_magnitude()
                     / static_cast<double>(activations.radius());
    return static_cast<QState>(round_to_integer(v, activations.rounding()));
  }

  QuantParams weight_params(Layer const& layer, QuantParams const& activations, WeightScale scale) {
    if (scale == WeightScale::layer_max) {
      float m = 0.0f;
      for (float w : layer.weights) {
        m = std::max(m, std::abs(w));
      }
      if (m > 0.0f) {
        return QuantParams(activations.radius(), m, activations.rounding());
      }
    }
    return activations;
  }

  QuantizedLayer::QuantizedLayer(Layer const& layer, QuantParams const& activations,
                                 QuantOptions options)
      : spec_(layer.spec),
        act_(activations),
        wts_(weight_params(layer, activations, options.weight_scale)),
        opts_(options),
        bound_(accumulator_bound(act_, wts_)) {
    if (spec_.kind != LayerKind::conv2d && spec_.kind != LayerKind::dense) {
      throw InvalidParameter("only conv2d and dense layers can be quantized");
    }
    spec_.validate();
    kernel_.reserve(layer.weights.size());
    for (float w : layer.weights) {
      kernel_.push_back(quantize(static_cast<double>(w), wts_));
    }
    bias_.reserve(layer.bias.size());
    for (float b : layer.bias) {
      bias_.push_back(options.include_bias ? quantize(static_cast<double>(b), act_) : 0);
    }
  }

  TensorQ QuantizedLayer::apply(TensorQ const& x) const {
    if (x.radius() != act_.radius()) {
      throw Incompatible("input radius " + std::to_string(x.radius())
                         + " does not match quantization radius "
                         + std::to_string(act_.radius()));
    }
    return spec_.kind == LayerKind::conv2d ? apply_conv(x) : apply_dense(x);
  }

  TensorQ QuantizedLayer::apply_conv(TensorQ const& x) const {
    auto const&        s   = spec_;
    Shape const        out = s.output_shape(x.shape());
    std::int64_t const r   = act_.radius();
    std::int64_t const R   = bound_;
    long const         H = static_cast<long>(x.shape().height), W = static_cast<long>(x.shape().width);
    long const         pad = static_cast<long>(s.padding);
    std::size_t const  cy = s.kernel_h / 2, cx = s.kernel_w / 2;
    bool const         clip_terms = opts_.offsets == OffsetAccumulation::clip_per_term;

    auto value = [&](long iy, long ix, std::size_t c) -> QState {
      if (iy < 0 || iy >= H || ix < 0 || ix >= W) {
        return 0;
      }
      return x.at(static_cast<std::size_t>(iy), static_cast<std::size_t>(ix), c);
    };

    std::vector<QState> result(out.size());
    std::size_t         k = 0;
    for (std::size_t oy = 0; oy < out.height; ++oy) {
      for (std::size_t ox = 0; ox < out.width; ++ox) {
        long const y0 = static_cast<long>(oy * s.stride) - pad;
        long const x0 = static_cast<long>(ox * s.stride) - pad;
        for (std::size_t o = 0; o < s.out_channels; ++o) {
          std::int64_t acc = 0;
          for (std::size_t c = 0; c < s.in_channels; ++c) {
            SemigroupAction act{kernel_[((o * s.kernel_h + cy) * s.kernel_w + cx) * s.in_channels + c], 0};
            for (std::size_t ky = 0; ky < s.kernel_h; ++ky) {
              for (std::size_t kx = 0; kx < s.kernel_w; ++kx) {
                if (ky == cy && kx == cx) {
                  continue;
                }
                QState const v = value(y0 + static_cast<long>(ky), x0 + static_cast<long>(kx), c);
                act.b += v * kernel_[((o * s.kernel_h + ky) * s.kernel_w + kx) * s.in_channels + c];
                if (clip_terms) {
                  act.b = clip(act.b, R);
                }
              }
            }
            QState const centre = value(y0 + static_cast<long>(cy), x0 + static_cast<long>(cx), c);
            QState const sub    = apply_action(centre, act, R);
            acc = opts_.sum_policy == SumPolicy::exact ? acc + sub : clip(acc + sub, R);
          }
          result[k++] = clip(requantize(acc, act_, wts_) + bias_[o], r);
        }
      }
    }
    return TensorQ(out, std::move(result), r);
  }

  TensorQ QuantizedLayer::apply_dense(TensorQ const& x) const {
    Shape const        out = spec_.output_shape(x.shape());
    std::int64_t const r   = act_.radius();
    std::vector<QState> result(out.size());
    auto const&        in = x.data();
    for (std::size_t j = 0; j < spec_.out_features; ++j) {
      std::int64_t acc = 0;
      QState const* w  = &kernel_[j * spec_.in_features];
      for (std::size_t i = 0; i < spec_.in_features; ++i) {
        acc += in[i] * w[i];
      }
      result[j] = clip(requantize(acc, act_, wts_) + bias_[j], r);
    }
    return TensorQ(out, std::move(result), r);
  }

  TensorQ conv2d_quantized(TensorQ const& x, Layer const& layer, QuantParams const& p,
                           QuantOptions const& options) {
    require_kind(layer, LayerKind::conv2d);
    return QuantizedLayer(layer, p, options).apply(x);
  }

  TensorF relu6(TensorF const& x) {
    TensorF y = x;
    for (float& v : y.data()) {
      v = std::min(std::max(v, 0.0f), 6.0f);
    }
    return y;
  }

  QState relu6_bound(QuantParams const& p) {
    return clip(static_cast<QState>(round_to_integer(6.0 * p.scale(), p.rounding())), p.radius());
  }

  TensorQ relu6(TensorQ const& x, QuantParams const& p) {
    if (x.radius() != p.radius()) {
      throw Incompatible("tensor radius does not match quantization radius");
    }
    QState const        top = relu6_bound(p);
    std::vector<QState> out(x.data());
    for (QState& v : out) {
      v = std::min(std::max<QState>(v, 0), top);
    }
    return TensorQ(x.shape(), std::move(out), x.radius());
  }

  template <typename T>
  Tensor<T> maxpool2(Tensor<T> const& x) {
    Shape const out = LayerSpec::maxpool2().output_shape(x.shape());
    Tensor<T>   y(out);
    for (std::size_t oy = 0; oy < out.height; ++oy) {
      for (std::size_t ox = 0; ox < out.width; ++ox) {
        for (std::size_t c = 0; c < out.channels; ++c) {
          T m = x.at(2 * oy, 2 * ox, c);
          m   = std::max(m, x.at(2 * oy, 2 * ox + 1, c));
          m   = std::max(m, x.at(2 * oy + 1, 2 * ox, c));
          m   = std::max(m, x.at(2 * oy + 1, 2 * ox + 1, c));
          y.at(oy, ox, c) = m;
        }
      }
    }
    return y;
  }

  template Tensor<float>  maxpool2(Tensor<float> const&);
  template Tensor<QState> maxpool2(Tensor<QState> const&);

  TensorQ maxpool2(TensorQ const& x) {
    Tensor<QState> const t(x.shape(), x.data());
    auto                 y = maxpool2(t);
    return TensorQ(y.shape(), y.data(), x.radius());
  }

  TensorF flatten(TensorF const& x) {
    return TensorF({1, 1, x.size()}, x.data());
  }

  TensorF dense(TensorF const& x, Layer const& layer) {
    require_kind(layer, LayerKind::dense);
    Shape const out = layer.spec.output_shape(x.shape());
    TensorF     y(out);
    std::size_t const in = layer.spec.in_features;
    for (std::size_t j = 0; j < layer.spec.out_features; ++j) {
      double       sum = layer.bias[j];
      float const* w   = &layer.weights[j * in];
      for (std::size_t i = 0; i < in; ++i) {
        sum += static_cast<double>(x.data()[i]) * static_cast<double>(w[i]);
      }
      y.data()[j] = static_cast<float>(sum);
    }
    return y;
  }

  std::size_t argmax(std::vector<float> const& v) {
    return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
  }

  InferenceEngine::InferenceEngine(Network const& net, Mode mode,
                                   std::optional<QuantParams> params, QuantOptions options)
      : net_(&net), mode_(mode), params_(params), opts_(options) {
    if (mode_ == Mode::quantized && !params_) {
      throw InvalidParameter("quantized inference needs (r, q) parameters");
    }
    prepared_.resize(net.layers().size());
    if (mode_ != Mode::quantized) {
      return;
    }
    for (std::size_t i = 0; i < net.layers().size(); ++i) {
      auto const& l = net.layers()[i];
      if (l.spec.kind == LayerKind::conv2d
          || (l.spec.kind == LayerKind::dense && opts_.quantize_dense)) {
        prepared_[i].emplace(l, *params_, opts_);
      }
    }
  }

  ForwardResult InferenceEngine::run(TensorF const& image) const {
    net_->infer_shapes(image.shape());
    TensorF cur = image;
    for (std::size_t i = 0; i < net_->layers().size(); ++i) {
      auto const& l = net_->layers()[i];
      if (prepared_[i]) {
        cur = dequantize(prepared_[i]->apply(quantize(cur, *params_)), *params_);
        continue;
      }
      switch (l.spec.kind) {
        case LayerKind::conv2d:
          cur = conv2d_float(cur, l);
          break;
        case LayerKind::relu6:
          cur = relu6(cur);
          break;
        case LayerKind::maxpool:
          cur = maxpool2(cur);
          break;
        case LayerKind::flatten:
          cur = flatten(cur);
          break;
        case LayerKind::dense:
          cur = dense(cur, l);
          break;
      }
    }
    ForwardResult res;
    res.logits = cur.data();
    res.label  = argmax(res.logits);
    return res;
  }

  ForwardResult forward(Network const& net, TensorF const& image, Mode mode,
                        std::optional<QuantParams> params, QuantOptions options) {
    return InferenceEngine(net, mode, params, options).run(image);
  }

}  // namespace semiconv
