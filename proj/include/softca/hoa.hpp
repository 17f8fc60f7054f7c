// Copyright 2026 The softca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SOFTCA_HOA_HPP
#define SOFTCA_HOA_HPP

#include <ostream>
#include <string>
#include <vector>

#include "softca/buchi.hpp"

namespace softca {

/// Writes `a` in the Hanoi Omega-Automata format. Each action becomes one
/// atomic proposition; a letter is the valuation making exactly that
/// proposition true.
inline void write_hoa(std::ostream& os, const Ba& a, const std::vector<std::string>& letters, const std::string& name = "") {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  os << "HOA: v1\n";
  if (!name.empty()) os << "name: " << quote(name) << "\n";
  os << "States: " << a.size() << "\n";
  os << "Start: " << a.initial() << "\n";
  os << "AP: " << a.alphabet();
  for (std::size_t i = 0; i < a.alphabet(); ++i) os << " " << quote(i < letters.size() ? letters[i] : "a" + std::to_string(i));
  os << "\n";
  os << "acc-name: Buchi\nAcceptance: 1 Inf(0)\nproperties: trans-labels explicit-labels state-acc\n--BODY--\n";
  for (State s = 0; s < a.size(); ++s) {
    os << "State: " << s;
    if (a.accepting(s)) os << " {0}";
    os << "\n";
    for (const auto& e : a.edges(s)) {
      os << "[";
      for (std::size_t i = 0; i < a.alphabet(); ++i) {
        if (i) os << "&";
        if (i != e.letter) os << "!";
        os << i;
      }
      os << "] " << e.to << "\n";
    }
  }
  os << "--END--\n";
}

}  // namespace softca

#endif  // SOFTCA_HOA_HPP
