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

#ifndef SEMICONV_ERROR_HPP_
#define SEMICONV_ERROR_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace semiconv {

  // Base of every error thrown by the library. The CLI maps these to exit
  // code 2; anything else escaping is a bug.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InvalidParameter : public Error {
   public:
    using Error::Error;
  };

  class InvalidState : public Error {
   public:
    using Error::Error;
  };

  class InvalidValue : public Error {
   public:
    using Error::Error;
  };

  // Two objects built over different state spaces were combined.
  class Incompatible : public Error {
   public:
    using Error::Error;
  };

  class NotAnElement : public Error {
   public:
    using Error::Error;
  };

  class InvalidShape : public Error {
   public:
    using Error::Error;
  };

  class UnrepresentableMultiplier : public Error {
   public:
    using Error::Error;
  };

  class EnumerationOverflow : public Error {
   public:
    EnumerationOverflow(std::size_t partial, std::size_t limit)
        : Error("closure enumeration exceeded the element limit of "
                + std::to_string(limit) + " (found " + std::to_string(partial)
                + " elements so far)"),
          partial_count_(partial),
          limit_(limit) {}

    std::size_t partial_count() const noexcept {
      return partial_count_;
    }
    std::size_t limit() const noexcept {
      return limit_;
    }

   private:
    std::size_t partial_count_;
    std::size_t limit_;
  };

  // Malformed binary input. `offset` is the byte position where parsing
  // failed.
  class FormatError : public Error {
   public:
    FormatError(std::string const& what, std::uint64_t offset)
        : Error(what + " (at byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::uint64_t offset() const noexcept {
      return offset_;
    }

   private:
    std::uint64_t offset_;
  };

  class ChecksumError : public FormatError {
   public:
    ChecksumError(std::uint32_t stored, std::uint32_t computed, std::uint64_t offset)
        : FormatError("CRC32 mismatch: stored " + std::to_string(stored)
                          + ", computed " + std::to_string(computed),
                      offset),
          stored_(stored),
          computed_(computed) {}

    std::uint32_t stored() const noexcept {
      return stored_;
    }
    std::uint32_t computed() const noexcept {
      return computed_;
    }

   private:
    std::uint32_t stored_;
    std::uint32_t computed_;
  };

  class MagicError : public FormatError {
   public:
    using FormatError::FormatError;
  };

  class VersionError : public FormatError {
   public:
    using FormatError::FormatError;
  };

  // Layer tags, dimensions or payload sizes inconsistent with the file.
  class LayoutError : public FormatError {
   public:
    using FormatError::FormatError;
  };

  class IoError : public Error {
   public:
    using Error::Error;
  };

}  // namespace semiconv

#endif  // SEMICONV_ERROR_HPP_
