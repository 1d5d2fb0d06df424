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

#include "semiconv/weights.hpp"

#include <zlib.h>

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "semiconv/error.hpp"

namespace semiconv {

  static_assert(std::endian::native == std::endian::little, "SGCW I/O assumes a little-endian host");
  static_assert(sizeof(float) == 4);

  std::uint32_t crc32(std::span<std::uint8_t const> bytes) noexcept {
    uLong c = ::crc32(0L, Z_NULL, 0);
    // zlib takes uInt lengths; feed large buffers in chunks.
    std::size_t done = 0;
    while (done < bytes.size()) {
      std::size_t const n = std::min<std::size_t>(bytes.size() - done, 1u << 30);
      c = ::crc32(c, bytes.data() + done, static_cast<uInt>(n));
      done += n;
    }
    return static_cast<std::uint32_t>(c);
  }

  namespace {
    std::vector<std::uint8_t> slurp(std::filesystem::path const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw IoError("cannot open " + path.string());
      }
      return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }

    class Writer {
     public:
      template <typename T>
      void put(T v) {
        auto const* p = reinterpret_cast<std::uint8_t const*>(&v);
        out.insert(out.end(), p, p + sizeof(T));
      }
      void put_dim(std::size_t v) {
        if (v > UINT32_MAX) {
          throw InvalidShape("layer dimension does not fit in u32");
        }
        put(static_cast<std::uint32_t>(v));
      }
      void put_floats(std::vector<float> const& v) {
        auto const* p = reinterpret_cast<std::uint8_t const*>(v.data());
        out.insert(out.end(), p, p + v.size() * sizeof(float));
      }
      std::vector<std::uint8_t> out;
    };

    class Reader {
     public:
      explicit Reader(std::span<std::uint8_t const> b) : bytes(b) {}

      template <typename T>
      T get(char const* what) {
        need(sizeof(T), what);
        T v;
        std::memcpy(&v, bytes.data() + pos, sizeof(T));
        pos += sizeof(T);
        return v;
      }
      std::vector<float> get_floats(std::size_t n, char const* what) {
        if (n > (bytes.size() - pos) / sizeof(float)) {
          throw LayoutError(std::string("truncated ") + what, bytes.size());
        }
        std::vector<float> v(n);
        std::memcpy(v.data(), bytes.data() + pos, n * sizeof(float));
        pos += n * sizeof(float);
        return v;
      }
      void need(std::size_t n, char const* what) const {
        if (bytes.size() - pos < n) {
          throw LayoutError(std::string("truncated ") + what, bytes.size());
        }
      }

      std::span<std::uint8_t const> bytes;
      std::size_t                   pos = 0;
    };
  }  // namespace

  std::vector<std::uint8_t> serialize_weights(Network const& net) {
    if (net.layers().size() > UINT16_MAX) {
      throw InvalidShape("too many layers for SGCW");
    }
    Writer w;
    w.out = {'S', 'G', 'C', 'W'};
    w.put(sgcw_version);
    w.put(static_cast<std::uint16_t>(net.layers().size()));
    for (auto const& l : net.layers()) {
      auto const& s = l.spec;
      w.put(static_cast<std::uint8_t>(s.kind));
      if (s.kind == LayerKind::conv2d) {
        for (std::size_t d : {s.kernel_h, s.kernel_w, s.in_channels, s.out_channels, s.stride, s.padding}) {
          w.put_dim(d);
        }
      } else if (s.kind == LayerKind::dense) {
        w.put_dim(s.in_features);
        w.put_dim(s.out_features);
      }
      w.put_floats(l.weights);
      w.put_floats(l.bias);
    }
    w.put(crc32(w.out));
    return w.out;
  }

  Network parse_weights(std::span<std::uint8_t const> bytes) {
    if (bytes.size() < 4 || std::memcmp(bytes.data(), "SGCW", 4) != 0) {
      throw MagicError("missing SGCW magic", 0);
    }
    if (bytes.size() < 12) {
      throw LayoutError("file too short for an SGCW header and checksum", bytes.size());
    }
    std::size_t const body = bytes.size() - 4;
    std::uint32_t     stored;
    std::memcpy(&stored, bytes.data() + body, 4);
    std::uint32_t const computed = crc32(bytes.first(body));
    if (stored != computed) {
      throw ChecksumError(stored, computed, body);
    }

    Reader rd(bytes.first(body));
    rd.pos = 4;
    auto const version = rd.get<std::uint16_t>("version");
    if (version != sgcw_version) {
      throw VersionError("unsupported SGCW version " + std::to_string(version), 4);
    }
    auto const         count = rd.get<std::uint16_t>("layer count");
    std::vector<Layer> layers;
    for (std::uint16_t i = 0; i < count; ++i) {
      std::size_t const at  = rd.pos;
      auto const        tag = rd.get<std::uint8_t>("layer tag");
      LayerSpec         s;
      switch (tag) {
        case static_cast<std::uint8_t>(LayerKind::conv2d): {
          std::size_t d[6];
          for (auto& v : d) {
            v = rd.get<std::uint32_t>("conv dimensions");
          }
          s = LayerSpec::conv2d(d[0], d[1], d[2], d[3], d[4], d[5]);
          break;
        }
        case static_cast<std::uint8_t>(LayerKind::dense): {
          std::size_t const in  = rd.get<std::uint32_t>("dense dimensions");
          std::size_t const out = rd.get<std::uint32_t>("dense dimensions");
          s                     = LayerSpec::dense(in, out);
          break;
        }
        case static_cast<std::uint8_t>(LayerKind::relu6):
          s = LayerSpec::relu6();
          break;
        case static_cast<std::uint8_t>(LayerKind::maxpool):
          s = LayerSpec::maxpool2();
          break;
        case static_cast<std::uint8_t>(LayerKind::flatten):
          s = LayerSpec::flatten();
          break;
        default:
          throw LayoutError("unknown layer tag " + std::to_string(tag), at);
      }
      try {
        s.validate();
      } catch (InvalidShape const& e) {
        throw LayoutError(e.what(), at);
      }
      Layer l{s, {}, {}};
      l.weights = rd.get_floats(s.weight_count(), "weight payload");
      l.bias    = rd.get_floats(s.bias_count(), "bias payload");
      layers.push_back(std::move(l));
    }
    if (rd.pos != body) {
      throw LayoutError("unexpected bytes after the last layer", rd.pos);
    }
    try {
      return Network(std::move(layers));
    } catch (Error const& e) {
      throw LayoutError(e.what(), rd.pos);
    }
  }

  void save_weights(Network const& net, std::filesystem::path const& path) {
    auto const    bytes = serialize_weights(net);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot write " + path.string());
    }
    out.write(reinterpret_cast<char const*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
      throw IoError("short write to " + path.string());
    }
  }

  Network load_weights(std::filesystem::path const& path) {
    auto const bytes = slurp(path);
    return parse_weights(bytes);
  }

  std::uint32_t file_crc32(std::filesystem::path const& path) {
    auto const bytes = slurp(path);
    return crc32(bytes);
  }

}  // namespace semiconv
