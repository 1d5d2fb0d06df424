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

#include "semiconv/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "semiconv/error.hpp"

namespace semiconv {

  using ordered_json = nlohmann::ordered_json;

  void SweepConfig::validate() const {
    if (r_list.empty() || q_list.empty()) {
      throw InvalidParameter("sweep axes must be non-empty");
    }
    for (auto r : r_list) {
      if (r < 1) {
        throw InvalidParameter("sweep radius must be >= 1, got " + std::to_string(r));
      }
    }
    for (double q : q_list) {
      if (!(q > 0.0) || !std::isfinite(q)) {
        throw InvalidParameter("sweep clip magnitude must be finite and > 0");
      }
    }
    if (!full && !indices && subset_size == 0) {
      throw InvalidParameter("subset size must be >= 1");
    }
    if (indices && indices->empty()) {
      throw InvalidParameter("explicit subset is empty");
    }
  }

  std::vector<std::size_t> sample_subset(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k > n) {
      throw InvalidParameter("cannot sample " + std::to_string(k) + " of " + std::to_string(n)
                             + " images");
    }
    std::mt19937_64          rng(seed);
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t const range = n - i;
      // Rejection keeps the draw unbiased: limit is the largest multiple of
      // range that fits in 2^64.
      std::uint64_t const limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
      std::uint64_t       v;
      do {
        v = rng();
      } while (v > limit);
      std::swap(pool[i], pool[i + static_cast<std::size_t>(v % range)]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

  std::vector<std::size_t> resolve_indices(SweepConfig const& cfg, std::size_t n) {
    if (cfg.full) {
      std::vector<std::size_t> all(n);
      std::iota(all.begin(), all.end(), std::size_t{0});
      return all;
    }
    if (cfg.indices) {
      for (auto i : *cfg.indices) {
        if (i >= n) {
          throw InvalidParameter("subset index " + std::to_string(i) + " out of range for "
                                 + std::to_string(n) + " images");
        }
      }
      return *cfg.indices;
    }
    return sample_subset(n, std::min(cfg.subset_size, n), cfg.seed);
  }

  SweepCell const& SweepResult::cell(std::int64_t r, double q) const {
    for (auto const& c : cells) {
      if (c.r == r && c.q == q) {
        return c;
      }
    }
    throw InvalidParameter("no sweep cell for r=" + std::to_string(r) + " q=" + format_q(q));
  }

  unsigned worker_count() {
    if (char const* env = std::getenv("SEMICONV_THREADS")) {
      char*      end = nullptr;
      long const v   = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        return static_cast<unsigned>(v);
      }
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }

  std::size_t count_correct(InferenceEngine const& engine, Dataset const& data,
                            std::vector<std::size_t> const& indices) {
    unsigned const threads
        = std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, indices.size() / 16));
    std::atomic<std::size_t> next{0};
    std::vector<std::size_t> counts(threads, 0);
    auto work = [&](unsigned t) {
      for (std::size_t k; (k = next.fetch_add(1)) < indices.size();) {
        std::size_t const i = indices[k];
        if (engine.run(data.image(i)).label == data.label(i)) {
          ++counts[t];
        }
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(work, t);
      }
    }
    return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  }

  namespace {
    double seconds_since(std::chrono::steady_clock::time_point t0) {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }

    std::string fixed2(double v) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f", v);
      return buf;
    }
  }  // namespace

  std::string format_q(double q) {
    char buf[32];
    // Shortest form that reads back to the same double.
    for (int prec = 1; prec <= 17; ++prec) {
      std::snprintf(buf, sizeof buf, "%.*g", prec, q);
      if (std::strtod(buf, nullptr) == q) {
        break;
      }
    }
    return buf;
  }

  SweepResult run_sweep(Network const& net, Dataset const& data, SweepConfig const& cfg,
                        std::uint32_t weights_crc, ProgressSink progress) {
    cfg.validate();
    net.infer_shapes(data.image_shape());
    auto const idx = resolve_indices(cfg, data.size());

    SweepResult res;
    res.config      = cfg;
    res.weights_crc = weights_crc;
    res.images      = idx.size();

    auto t0           = std::chrono::steady_clock::now();
    res.float_correct = count_correct(InferenceEngine(net, Mode::float_path), data, idx);
    res.float_seconds = seconds_since(t0);

    for (auto r : cfg.r_list) {
      for (double q : cfg.q_list) {
        t0 = std::chrono::steady_clock::now();
        InferenceEngine const engine(net, Mode::quantized, QuantParams(r, q), cfg.quant);
        SweepCell             c;
        c.r       = r;
        c.q       = q;
        c.total   = idx.size();
        c.correct = count_correct(engine, data, idx);
        c.seconds = seconds_since(t0);
        res.cells.push_back(c);
        if (progress) {
          progress("cell r=" + std::to_string(r) + " q=" + format_q(q) + " acc=" + fixed2(c.accuracy()));
        }
      }
    }
    return res;
  }

  ReportFormat parse_report_format(std::string const& name) {
    if (name == "csv") {
      return ReportFormat::csv;
    }
    if (name == "json") {
      return ReportFormat::json;
    }
    if (name == "md" || name == "markdown") {
      return ReportFormat::markdown;
    }
    throw InvalidParameter("unknown report format '" + name + "' (csv, json, md)");
  }

  namespace {
    std::string crc_hex(std::uint32_t crc) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "%08x", crc);
      return buf;
    }

    std::string to_csv(SweepResult const& res, ReportOptions opts) {
      std::ostringstream out;
      out << "r,q,accuracy,correct,total" << (opts.include_timing ? ",seconds" : "") << "\n";
      for (auto const& c : res.cells) {
        out << c.r << "," << format_q(c.q) << "," << fixed2(c.accuracy()) << "," << c.correct << ","
            << c.total;
        if (opts.include_timing) {
          out << "," << fixed2(c.seconds);
        }
        out << "\n";
      }
      return out.str();
    }

    char const* sum_policy_name(SumPolicy p) {
      return p == SumPolicy::exact ? "exact" : "clip_per_channel";
    }
    char const* weight_scale_name(WeightScale s) {
      return s == WeightScale::activation_map ? "activation_map" : "layer_max";
    }
    char const* offsets_name(OffsetAccumulation o) {
      return o == OffsetAccumulation::exact ? "exact" : "clip_per_term";
    }

    std::string to_json(SweepResult const& res, ReportOptions opts) {
      auto const&  cfg = res.config;
      ordered_json j;
      j["weights_crc32"] = crc_hex(res.weights_crc);
      ordered_json c;
      c["r_list"]      = cfg.r_list;
      c["q_list"]      = cfg.q_list;
      c["subset_size"] = cfg.subset_size;
      c["seed"]        = cfg.seed;
      c["full"]        = cfg.full;
      if (cfg.indices) {
        c["indices"] = *cfg.indices;
      } else {
        c["indices"] = nullptr;
      }
      c["sum_policy"]     = sum_policy_name(cfg.quant.sum_policy);
      c["weight_scale"]   = weight_scale_name(cfg.quant.weight_scale);
      c["offsets"]        = offsets_name(cfg.quant.offsets);
      c["include_bias"]   = cfg.quant.include_bias;
      c["quantize_dense"] = cfg.quant.quantize_dense;
      j["config"]         = c;
      j["images"]         = res.images;
      ordered_json f;
      f["accuracy"] = std::stod(fixed2(res.float_baseline()));
      f["correct"]  = res.float_correct;
      if (opts.include_timing) {
        f["seconds"] = res.float_seconds;
      }
      j["float_baseline"] = f;
      ordered_json cells  = ordered_json::array();
      for (auto const& cell : res.cells) {
        ordered_json e;
        e["r"]        = cell.r;
        e["q"]        = cell.q;
        e["accuracy"] = std::stod(fixed2(cell.accuracy()));
        e["correct"]  = cell.correct;
        e["total"]    = cell.total;
        if (opts.include_timing) {
          e["seconds"] = cell.seconds;
        }
        cells.push_back(e);
      }
      j["cells"] = cells;
      return j.dump(2) + "\n";
    }

    std::string to_markdown(SweepResult const& res) {
      auto const&        cfg = res.config;
      std::ostringstream out;
      out << "# Quantized accuracy sweep\n\n";
      out << "Float baseline: " << fixed2(res.float_baseline()) << "% (" << res.float_correct << "/"
          << res.images << ")\n\n";
      out << "Test accuracy (%) of the quantized network, rows q, columns r.\n\n";
      out << "| q \\ r |";
      for (auto r : cfg.r_list) {
        out << " " << r << " |";
      }
      out << "\n|---|";
      for (std::size_t i = 0; i < cfg.r_list.size(); ++i) {
        out << "---|";
      }
      out << "\n";
      for (double q : cfg.q_list) {
        out << "| " << format_q(q) << " |";
        for (auto r : cfg.r_list) {
          out << " " << fixed2(res.cell(r, q).accuracy()) << " |";
        }
        out << "\n";
      }
      out << "\nImages: " << res.images << ", weights CRC32: " << crc_hex(res.weights_crc) << "\n";
      return out.str();
    }

    template <typename E>
    E enum_from(std::string const& s, E a, char const* an, E b, char const* bn) {
      if (s == an) {
        return a;
      }
      if (s == bn) {
        return b;
      }
      throw InvalidValue("unknown option value '" + s + "' in sweep report");
    }
  }  // namespace

  std::string report(SweepResult const& res, ReportFormat format, ReportOptions opts) {
    for (auto r : res.config.r_list) {
      for (double q : res.config.q_list) {
        res.cell(r, q);
      }
    }
    switch (format) {
      case ReportFormat::csv:
        return to_csv(res, opts);
      case ReportFormat::json:
        return to_json(res, opts);
      case ReportFormat::markdown:
        return to_markdown(res);
    }
    return {};
  }

  SweepResult parse_json_report(std::string const& text) {
    try {
      auto const  j = nlohmann::json::parse(text);
      SweepResult res;
      res.weights_crc = static_cast<std::uint32_t>(
          std::stoul(j.at("weights_crc32").get<std::string>(), nullptr, 16));
      auto const& c             = j.at("config");
      res.config.r_list         = c.at("r_list").get<std::vector<std::int64_t>>();
      res.config.q_list         = c.at("q_list").get<std::vector<double>>();
      res.config.subset_size    = c.at("subset_size").get<std::size_t>();
      res.config.seed           = c.at("seed").get<std::uint64_t>();
      res.config.full           = c.at("full").get<bool>();
      if (!c.at("indices").is_null()) {
        res.config.indices = c.at("indices").get<std::vector<std::size_t>>();
      }
      res.config.quant.sum_policy
          = enum_from(c.at("sum_policy").get<std::string>(), SumPolicy::exact, "exact",
                      SumPolicy::clip_per_channel, "clip_per_channel");
      res.config.quant.weight_scale
          = enum_from(c.at("weight_scale").get<std::string>(), WeightScale::activation_map,
                      "activation_map", WeightScale::layer_max, "layer_max");
      res.config.quant.offsets
          = enum_from(c.at("offsets").get<std::string>(), OffsetAccumulation::exact, "exact",
                      OffsetAccumulation::clip_per_term, "clip_per_term");
      res.config.quant.include_bias   = c.at("include_bias").get<bool>();
      res.config.quant.quantize_dense = c.at("quantize_dense").get<bool>();
      res.images                      = j.at("images").get<std::size_t>();
      auto const& f                   = j.at("float_baseline");
      res.float_correct               = f.at("correct").get<std::size_t>();
      res.float_seconds               = f.value("seconds", 0.0);
      for (auto const& e : j.at("cells")) {
        SweepCell cell;
        cell.r       = e.at("r").get<std::int64_t>();
        cell.q       = e.at("q").get<double>();
        cell.correct = e.at("correct").get<std::size_t>();
        cell.total   = e.at("total").get<std::size_t>();
        cell.seconds = e.value("seconds", 0.0);
        res.cells.push_back(cell);
      }
      return res;
    } catch (nlohmann::json::exception const& e) {
      throw InvalidValue(std::string("malformed sweep report: ") + e.what());
    }
  }

}  // namespace semiconv
