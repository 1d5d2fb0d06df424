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

#ifndef SEMICONV_EXPERIMENTS_HPP_
#define SEMICONV_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "semiconv/idx.hpp"
#include "semiconv/network.hpp"

namespace semiconv {

  struct SweepConfig {
    std::vector<std::int64_t> r_list      = {1, 3, 7, 15, 31, 63, 127};
    std::vector<double>       q_list      = {2, 4, 6, 8};
    std::size_t               subset_size = 1000;
    std::uint64_t             seed        = 0;
    // Whole test set; overrides subset_size and indices.
    bool full = false;
    // Explicit image indices; overrides subset_size and seed.
    std::optional<std::vector<std::size_t>> indices;
    QuantOptions                            quant;

    // Throws InvalidParameter for r < 1, q <= 0 or non-finite, empty axes,
    // subset_size 0.
    void validate() const;

    bool operator==(SweepConfig const&) const = default;
  };

  // k distinct indices from 0..n-1 by a partial Fisher-Yates shuffle driven
  // by raw mt19937_64 output, returned ascending. Depends only on (n, k,
  // seed), not on the standard library's distribution implementations.
  std::vector<std::size_t> sample_subset(std::size_t n, std::size_t k, std::uint64_t seed);

  // Indices actually evaluated under cfg for a dataset of n images.
  std::vector<std::size_t> resolve_indices(SweepConfig const& cfg, std::size_t n);

  struct SweepCell {
    std::int64_t r       = 0;
    double       q       = 0;
    std::size_t  correct = 0;
    std::size_t  total   = 0;
    double       seconds = 0;  // wall time; not part of any report by default

    double accuracy() const noexcept {
      return total == 0 ? 0.0 : 100.0 * static_cast<double>(correct) / static_cast<double>(total);
    }
    bool operator==(SweepCell const&) const = default;
  };

  struct SweepResult {
    SweepConfig            config;
    std::uint32_t          weights_crc   = 0;
    std::size_t            images        = 0;
    std::size_t            float_correct = 0;
    double                 float_seconds = 0;
    std::vector<SweepCell> cells;  // r-major in config order

    double float_baseline() const noexcept {
      return images == 0 ? 0.0
                         : 100.0 * static_cast<double>(float_correct) / static_cast<double>(images);
    }
    // Throws InvalidParameter if (r, q) is not on the grid.
    SweepCell const& cell(std::int64_t r, double q) const;

    bool operator==(SweepResult const&) const = default;
  };

  // Receives one line per finished cell, "cell r=<r> q=<q> acc=<acc>".
  using ProgressSink = std::function<void(std::string const&)>;

  // Images are evaluated in parallel (see worker_count); counts are merged
  // so the outcome does not depend on scheduling.
  SweepResult run_sweep(Network const& net, Dataset const& data, SweepConfig const& cfg,
                        std::uint32_t weights_crc = 0, ProgressSink progress = {});

  // Correct predictions among `indices`.
  std::size_t count_correct(InferenceEngine const& engine, Dataset const& data,
                            std::vector<std::size_t> const& indices);

  // SEMICONV_THREADS if set and positive, else hardware concurrency.
  unsigned worker_count();

  enum class ReportFormat { csv, json, markdown };

  ReportFormat parse_report_format(std::string const& name);

  struct ReportOptions {
    bool include_timing = false;
  };

  std::string report(SweepResult const& res, ReportFormat format, ReportOptions opts = {});
  // Inverse of the json report. Timing fields are read when present.
  SweepResult parse_json_report(std::string const& text);

  std::string format_q(double q);

}  // namespace semiconv

#endif  // SEMICONV_EXPERIMENTS_HPP_
