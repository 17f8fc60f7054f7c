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

#ifndef SOFTCA_GRAPH_HPP
#define SOFTCA_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace softca::graph {

struct Sccs {
  std::vector<std::uint32_t> component;  // node -> component id
  std::vector<char> nontrivial;          // component -> has a cycle
  std::size_t count = 0;
};

/// Strongly connected components of a directed graph over nodes [0, n).
/// `succ(v, f)` must call f(w) for every successor w of v.
template <class Succ>
Sccs tarjan(std::size_t n, Succ&& succ) {
  constexpr std::uint32_t unvisited = std::numeric_limits<std::uint32_t>::max();
  Sccs out;
  out.component.assign(n, unvisited);
  std::vector<std::uint32_t> index(n, unvisited), low(n, 0);
  std::vector<char> on_stack(n, 0), self_loop(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::size_t v = 0; v < n; ++v)
    succ(v, [&](std::size_t w) {
      adj[v].push_back(static_cast<std::uint32_t>(w));
      if (w == v) self_loop[v] = 1;
    });
  std::uint32_t counter = 0;
  struct Frame {
    std::uint32_t v;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.push_back({static_cast<std::uint32_t>(root), 0});
    index[root] = low[root] = counter++;
    stack.push_back(static_cast<std::uint32_t>(root));
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& frame = call.back();
      auto v = frame.v;
      if (frame.next < adj[v].size()) {
        auto w = adj[v][frame.next++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        auto id = static_cast<std::uint32_t>(out.count++);
        std::size_t members = 0;
        bool cyclic = false;
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          out.component[w] = id;
          ++members;
          cyclic = cyclic || self_loop[w];
        } while (w != v);
        out.nontrivial.push_back(members > 1 || cyclic);
      }
      call.pop_back();
      if (!call.empty()) {
        auto parent = call.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return out;
}

}  // namespace softca::graph

#endif  // SOFTCA_GRAPH_HPP
