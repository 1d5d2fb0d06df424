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

#include "semiconv/quantizer.hpp"

#include <algorithm>
#include <cmath>

#include "semiconv/error.hpp"

namespace semiconv {

  QuantParams::QuantParams(std::int64_t r, double q, Rounding rounding)
      : r_(r), q_(q), rounding_(rounding) {
    if (r < 1) {
      throw InvalidParameter("quantization radius r must be >= 1, got " + std::to_string(r));
    }
    if (!(q > 0.0) || !std::isfinite(q)) {
      throw InvalidParameter("quantization clip magnitude q must be finite and > 0");
    }
  }

  double round_to_integer(double v, Rounding mode) noexcept {
    switch (mode) {
      case Rounding::half_to_even:
        return std::nearbyint(v);
      case Rounding::half_away_from_zero:
      default:
        return std::round(v);
    }
  }

  QState quantize(double v, QuantParams const& p) {
    if (!std::isfinite(v)) {
      throw InvalidValue("cannot quantize a non-finite value");
    }
    double const q      = p.clip_magnitude();
    double const scaled = std::clamp(v, -q, q) * p.scale();
    return clip(static_cast<QState>(round_to_integer(scaled, p.rounding())), p.radius());
  }

  double dequantize(QState x, QuantParams const& p) {
    if (x < -p.radius() || x > p.radius()) {
      throw InvalidState("state " + std::to_string(x) + " is outside -"
                         + std::to_string(p.radius()) + ".." + std::to_string(p.radius()));
    }
    return static_cast<double>(x) * p.bin_width();
  }

  namespace {
    template <typename T>
    void check_patches(Patch<T> const& window, Patch<T> const& kernel) {
      if (window.height != kernel.height || window.width != kernel.width) {
        throw InvalidShape("window and kernel shapes differ");
      }
      if (window.height % 2 == 0 || window.width % 2 == 0) {
        throw InvalidShape("sub-convolution patches need odd dimensions to have a centre");
      }
      if (window.values.size() != window.height * window.width
          || kernel.values.size() != kernel.height * kernel.width) {
        throw InvalidShape("patch storage does not match its dimensions");
      }
    }
  }  // namespace

  SemigroupAction make_action(Patch<QState> const& window, Patch<QState> const& kernel,
                              OffsetAccumulation accumulation, std::int64_t bound) {
    check_patches(window, kernel);
    if (accumulation == OffsetAccumulation::clip_per_term && bound < 1) {
      throw InvalidParameter("per-term clipping needs a positive bound");
    }
    std::size_t const c = window.center();
    SemigroupAction   act{kernel.values[c], 0};
    for (std::size_t i = 0; i < window.values.size(); ++i) {
      if (i == c) {
        continue;
      }
      act.b += window.values[i] * kernel.values[i];
      if (accumulation == OffsetAccumulation::clip_per_term) {
        act.b = clip(act.b, bound);
      }
    }
    return act;
  }

  SemigroupAction make_action(Patch<double> const& window, Patch<double> const& kernel,
                              QuantParams const& activations, QuantParams const& weights) {
    check_patches(window, kernel);
    std::vector<QState> wq(window.values.size()), kq(kernel.values.size());
    for (std::size_t i = 0; i < wq.size(); ++i) {
      wq[i] = quantize(window.values[i], activations);
      kq[i] = quantize(kernel.values[i], weights);
    }
    return make_action(Patch<QState>{window.height, window.width, wq},
                       Patch<QState>{kernel.height, kernel.width, kq});
  }

  SemigroupAction make_action(Patch<double> const& window, Patch<double> const& kernel,
                              QuantParams const& p) {
    return make_action(window, kernel, p, p);
  }

  Word action_to_word(SemigroupAction const& act, GeneratorSet const& gens) {
    std::int64_t const r = gens.radius();
    if (act.m < -r || act.m > r) {
      throw UnrepresentableMultiplier("multiplier " + std::to_string(act.m)
                                      + " is outside -" + std::to_string(r) + ".."
                                      + std::to_string(r));
    }
    auto letter = [&](std::string const& name) {
      auto i = gens.find(name);
      if (!i) {
        throw UnrepresentableMultiplier("generator " + name + " is not in the alphabet");
      }
      return static_cast<std::uint8_t>(*i);
    };

    Word w;
    if (act.m == 0) {
      w.push_back(letter("z"));
    } else {
      if (act.m < 0) {
        w.push_back(letter("n"));
      }
      std::int64_t rest = act.m < 0 ? -act.m : act.m;
      for (std::int64_t p = 2; p <= rest; ++p) {
        while (rest % p == 0) {
          w.push_back(letter("m_" + std::to_string(p)));
          rest /= p;
        }
      }
    }
    if (act.b > 0) {
      w.insert(w.end(), static_cast<std::size_t>(act.b), letter("c"));
    } else if (act.b < 0) {
      auto const n = letter("n"), c = letter("c");
      for (std::int64_t k = 0; k < -act.b; ++k) {
        w.insert(w.end(), {n, c, n});
      }
    }
    if (w.empty()) {
      w.push_back(letter("e"));
    }
    return w;
  }

  Word action_to_word(SemigroupAction const& act, int r) {
    return action_to_word(act, make_generators(r));
  }

}  // namespace semiconv
