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

#include "semiconv/automaton.hpp"

#include <sstream>

namespace semiconv {

  std::string export_automaton(GeneratorSet const&                     gens,
                               std::optional<std::vector<std::string>> subset) {
    GeneratorSet const drawn = subset ? gens.restrict_to(*subset) : gens;
    auto const         space = gens.space();

    std::ostringstream out;
    out << "digraph CS_" << space.radius() << " {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (State x : space.states()) {
      out << "  \"" << x << "\";\n";
    }
    for (auto const& g : drawn.generators()) {
      for (State x : space.states()) {
        out << "  \"" << x << "\" -> \"" << g.map(x) << "\" [label=\"" << g.name << "\"];\n";
      }
    }
    out << "}\n";
    return out.str();
  }

}  // namespace semiconv
