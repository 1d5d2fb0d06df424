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

#ifndef SEMICONV_TESTS_NAIVE_SEMIGROUP_HPP_
#define SEMICONV_TESTS_NAIVE_SEMIGROUP_HPP_

// Independent reference for the semigroup engine: maps are plain vectors of
// state values, closure is a std::set fixpoint. Shares no code with the
// library.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

  using Map = std::vector<int>;  // Map[x + r] = image of x

  inline int sat(long v, int r) {
    return static_cast<int>(std::clamp<long>(v, -r, r));
  }

  inline Map tabulate(int r, auto f) {
    Map m;
    for (int x = -r; x <= r; ++x) {
      m.push_back(f(x));
    }
    return m;
  }

  // Apply a, then b.
  inline Map then(Map const& a, Map const& b, int r) {
    Map out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i] = b[static_cast<std::size_t>(a[i] + r)];
    }
    return out;
  }

  inline bool is_prime(int p) {
    if (p < 2) {
      return false;
    }
    for (int d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        return false;
      }
    }
    return true;
  }

  // c, z, e, n and m_p for primes p <= min(max_prime, r).
  inline std::map<std::string, Map> generators(int r, int max_prime) {
    std::map<std::string, Map> g;
    g["c"] = tabulate(r, [&](int x) { return std::min(x + 1, r); });
    g["z"] = tabulate(r, [](int) { return 0; });
    g["e"] = tabulate(r, [](int x) { return x; });
    g["n"] = tabulate(r, [](int x) { return -x; });
    for (int p = 2; p <= std::min(max_prime, r); ++p) {
      if (is_prime(p)) {
        g["m_" + std::to_string(p)] = tabulate(r, [&](int x) { return sat(long{p} * x, r); });
      }
    }
    return g;
  }

  inline std::map<std::string, Map> generators(int r) {
    return generators(r, r);
  }

  // Every product of one or more generators.
  inline std::set<Map> closure(std::map<std::string, Map> const& gens, int r) {
    std::set<Map>    seen;
    std::vector<Map> todo;
    for (auto const& [name, m] : gens) {
      if (seen.insert(m).second) {
        todo.push_back(m);
      }
    }
    while (!todo.empty()) {
      Map const cur = todo.back();
      todo.pop_back();
      for (auto const& [name, m] : gens) {
        Map next = then(cur, m, r);
        if (seen.insert(next).second) {
          todo.push_back(std::move(next));
        }
      }
    }
    return seen;
  }

  // Evaluate a word written as space-free generator names, left to right.
  inline Map evaluate(std::string const& word, std::map<std::string, Map> const& gens, int r) {
    Map         t = gens.at("e");
    std::size_t i = 0;
    while (i < word.size()) {
      std::size_t best = 0;
      for (auto const& [name, m] : gens) {
        if (word.compare(i, name.size(), name) == 0 && name.size() > best) {
          best = name.size();
        }
      }
      if (best == 0) {
        throw std::invalid_argument("bad word " + word);
      }
      t = then(t, gens.at(word.substr(i, best)), r);
      i += best;
    }
    return t;
  }

}  // namespace oracle

#endif  // SEMICONV_TESTS_NAIVE_SEMIGROUP_HPP_
