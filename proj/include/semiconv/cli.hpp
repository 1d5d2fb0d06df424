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

#ifndef SEMICONV_CLI_HPP_
#define SEMICONV_CLI_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace semiconv {

  inline constexpr int exit_ok         = 0;
  inline constexpr int exit_usage      = 1;
  inline constexpr int exit_data_error = 2;

  // Subcommands:
  //   sg enum | table | decompose | dot
  //   net eval | sweep
  // Output goes to `out`, diagnostics and progress to `err`. Never throws.
  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);
  int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

  // One non-negative integer per line; blank lines and lines starting with
  // '#' are ignored. Throws IoError or FormatError (offset = line number).
  std::vector<std::size_t> read_index_file(std::filesystem::path const& path);

}  // namespace semiconv

#endif  // SEMICONV_CLI_HPP_
