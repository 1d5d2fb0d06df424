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

// Writes the evaluation subset used by the tests and the acceptance run:
//   make_subset <n> <k> <seed>  ->  one ascending index per line on stdout
#include <cstdlib>
#include <iostream>

#include "semiconv/experiments.hpp"

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: make_subset <n> <k> <seed>\n";
    return 1;
  }
  auto const n    = std::strtoull(argv[1], nullptr, 10);
  auto const k    = std::strtoull(argv[2], nullptr, 10);
  auto const seed = std::strtoull(argv[3], nullptr, 10);
  try {
    std::cout << "# sample_subset(" << n << ", " << k << ", seed " << seed << ")\n";
    for (auto i : semiconv::sample_subset(n, k, seed)) {
      std::cout << i << "\n";
    }
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
