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

#ifndef SEMICONV_WEIGHTS_HPP_
#define SEMICONV_WEIGHTS_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "semiconv/network.hpp"

namespace semiconv {

  // SGCW v1, all integers little-endian:
  //   "SGCW" u16 version u16 layer_count
  //   per layer: u8 kind tag, u32 dims, f32 weights, f32 bias
  //     conv2d dims: kh kw in out stride padding
  //     dense dims:  in out
  //     other kinds carry no dims or payload
  //   u32 CRC32 (zlib polynomial) of every preceding byte
  inline constexpr std::uint16_t sgcw_version = 1;

  std::vector<std::uint8_t> serialize_weights(Network const& net);
  // Throws MagicError, VersionError, LayoutError, ChecksumError (all
  // FormatError) at the offending byte offset.
  Network parse_weights(std::span<std::uint8_t const> bytes);

  void    save_weights(Network const& net, std::filesystem::path const& path);
  Network load_weights(std::filesystem::path const& path);

  std::uint32_t crc32(std::span<std::uint8_t const> bytes) noexcept;
  // CRC32 of a whole file, as recorded in sweep metadata.
  std::uint32_t file_crc32(std::filesystem::path const& path);

}  // namespace semiconv

#endif  // SEMICONV_WEIGHTS_HPP_
