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

#ifndef SEMICONV_TESTS_CS1_REFERENCE_TABLE_HPP_
#define SEMICONV_TESTS_CS1_REFERENCE_TABLE_HPP_

// Reference multiplication table of CS_1 in word form. Entry [i][j] is the
// product "apply row i, then column j".

#include <array>
#include <string_view>

namespace reference {

  inline constexpr std::array<std::string_view, 13> cs1_header{
      "ccn", "ncn", "cncn", "e", "cn", "ncncn", "z", "ncnc", "c", "n", "cnc", "nc", "cc"};

  inline constexpr std::array<std::array<std::string_view, 13>, 13> cs1_products{{
      {"ccn", "ccn", "ccn", "ccn", "z", "z", "z", "z", "z", "cc", "cc", "cc", "cc"},
      {"ccn", "ccn", "ncn", "ncn", "ncncn", "z", "z", "z", "ncnc", "nc", "nc", "cc", "cc"},
      {"ccn", "ccn", "cncn", "cncn", "cn", "z", "z", "z", "c", "cnc", "cnc", "cc", "cc"},
      {"ccn", "ncn", "cncn", "e", "cn", "ncncn", "z", "ncnc", "c", "n", "cnc", "nc", "cc"},
      {"ccn", "ccn", "cn", "cn", "cncn", "z", "z", "z", "cnc", "c", "c", "cc", "cc"},
      {"ccn", "ccn", "ncncn", "ncncn", "ncn", "z", "z", "z", "nc", "ncnc", "ncnc", "cc", "cc"},
      {"ccn", "ccn", "z", "z", "ccn", "z", "z", "z", "cc", "z", "z", "cc", "cc"},
      {"ccn", "ncn", "z", "ncnc", "ccn", "ncncn", "z", "ncnc", "cc", "ncncn", "z", "nc", "cc"},
      {"ccn", "cncn", "z", "c", "ccn", "cn", "z", "c", "cc", "cn", "z", "cnc", "cc"},
      {"ccn", "cn", "ncncn", "n", "ncn", "cncn", "z", "cnc", "nc", "e", "ncnc", "c", "cc"},
      {"ccn", "cn", "z", "cnc", "ccn", "cncn", "z", "cnc", "cc", "cncn", "z", "c", "cc"},
      {"ccn", "ncncn", "z", "nc", "ccn", "ncn", "z", "nc", "cc", "ncn", "z", "ncnc", "cc"},
      {"ccn", "z", "z", "cc", "ccn", "ccn", "z", "cc", "cc", "ccn", "z", "z", "cc"},
  }};

}  // namespace reference

#endif  // SEMICONV_TESTS_CS1_REFERENCE_TABLE_HPP_
