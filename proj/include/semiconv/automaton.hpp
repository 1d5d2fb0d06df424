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

#ifndef SEMICONV_AUTOMATON_HPP_
#define SEMICONV_AUTOMATON_HPP_

#include <optional>
#include <string>
#include <vector>

#include "semiconv/transform.hpp"

namespace semiconv {

  // Graphviz digraph of the generators acting on X_r: one node per state,
  // one edge per (generator, state) pair, generator-major then state order.
  // `subset` restricts the drawn generators; unknown names throw
  // InvalidParameter.
  std::string export_automaton(GeneratorSet const&                     gens,
                               std::optional<std::vector<std::string>> subset = std::nullopt);

}  // namespace semiconv

#endif  // SEMICONV_AUTOMATON_HPP_
