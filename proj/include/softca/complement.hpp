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

#ifndef SOFTCA_COMPLEMENT_HPP
#define SOFTCA_COMPLEMENT_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "softca/buchi.hpp"

namespace softca {

/// An automaton is weak if no strongly connected component mixes accepting
/// and rejecting states.
inline bool is_weak(const Ba& a) {
  auto sccs = graph::tarjan(a.size(), [&](std::size_t s, auto&& f) {
    for (const auto& e : a.edges(static_cast<State>(s))) f(e.to);
  });
  std::vector<int> kind(sccs.count, -1);
  for (State s = 0; s < a.size(); ++s) {
    int k = a.accepting(s) ? 1 : 0;
    auto c = sccs.component[s];
    if (!sccs.nontrivial[c]) continue;
    if (kind[c] == -1) kind[c] = k;
    else if (kind[c] != k) return false;
  }
  return true;
}

namespace detail {

/// Complement of a weak automaton. A weak automaton accepts exactly when some
/// run eventually stays among accepting states, so the complement demands that
/// every run visits rejecting states infinitely often (or dies): a universal
/// Buchi automaton, turned nondeterministic by the breakpoint construction.
inline Ba complement_weak(const Ba& a, const Limits& limits) {
  Aba dual(a.alphabet());
  for (State s = 0; s < a.size(); ++s) dual.add_state(!a.accepting(s));
  for (State s = 0; s < a.size(); ++s)
    for (Action x = 0; x < a.alphabet(); ++x) {
      std::vector<State> to;
      a.for_successors(s, x, [&](State t) { to.push_back(t); });
      dual.add_transition(s, x, std::move(to));
    }
  dual.set_initial(a.initial());
  dual.finish();
  try {
    return dealternate(dual, limits);
  } catch (const CapacityError&) {
    throw CapacityError("complement", limits.max_states);
  }
}

/// Rank-based complementation restricted to tight level rankings.
///
/// Phase one tracks the reachable subset S. At any point the automaton may
/// guess a tight ranking of S and move to phase two, where states are
/// (S, f, O): f assigns even ranks to accepting states and never increases
/// along edges, O holds even-ranked states owing a visit to an odd rank.
/// Accepting states are those with O empty.
inline Ba complement_ranked(const Ba& a, const Limits& limits) {
  using Key = std::vector<std::uint32_t>;
  constexpr std::uint32_t kSep = std::numeric_limits<std::uint32_t>::max();
  const auto n = static_cast<std::uint32_t>(a.size());
  const std::uint32_t max_rank = 2 * n;
  Ba out(a.alphabet());
  Explorer<Key, VectorHash> ex(out, limits, "complement");

  auto subset_key = [&](const std::vector<State>& s) {
    Key k{0};
    k.insert(k.end(), s.begin(), s.end());
    return k;
  };
  auto ranked_key = [&](const std::vector<State>& s, const std::vector<std::uint32_t>& f, const std::vector<State>& o) {
    Key k{1};
    k.insert(k.end(), s.begin(), s.end());
    k.push_back(kSep);
    k.insert(k.end(), f.begin(), f.end());
    k.push_back(kSep);
    k.insert(k.end(), o.begin(), o.end());
    return k;
  };
  auto tight = [&](const std::vector<std::uint32_t>& f) {
    std::uint32_t top = 0;
    for (auto r : f) top = std::max(top, r);
    if (top == 0) return true;
    if (top % 2 == 0) return false;
    std::vector<char> used(top + 1, 0);
    for (auto r : f) used[r] = 1;
    for (std::uint32_t r = 1; r <= top; r += 2)
      if (!used[r]) return false;
    return true;
  };
  // All tight rankings of `s` bounded pointwise by `bound`.
  std::size_t work = 0;
  auto rankings = [&](const std::vector<State>& s, const std::vector<std::uint32_t>& bound, auto&& emit) {
    std::vector<std::uint32_t> f(s.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (++work > limits.max_work()) throw CapacityError("complement", limits.max_states);
      if (i == s.size()) {
        if (tight(f)) emit(f);
        return;
      }
      const bool acc = a.accepting(s[i]);
      for (std::uint32_t r = 0; r <= bound[i]; ++r) {
        if (acc && r % 2 == 1) continue;
        f[i] = r;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  };

  out.set_initial(ex.intern(subset_key({a.initial()}), false));
  std::vector<State> s, o, next;
  std::vector<std::uint32_t> f;
  while (!ex.done()) {
    Key k = ex.pop();
    State from = ex.id(k);
    const bool ranked = k[0] == 1;
    s.clear();
    f.clear();
    o.clear();
    if (!ranked) {
      s.assign(k.begin() + 1, k.end());
    } else {
      auto p1 = std::find(k.begin() + 1, k.end(), kSep);
      auto p2 = std::find(p1 + 1, k.end(), kSep);
      s.assign(k.begin() + 1, p1);
      f.assign(p1 + 1, p2);
      o.assign(p2 + 1, k.end());
    }
    for (Action x = 0; x < a.alphabet(); ++x) {
      next.clear();
      for (State q : s) a.for_successors(q, x, [&](State t) { next.push_back(t); });
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      std::vector<std::uint32_t> bound(next.size(), max_rank);
      if (ranked) {
        for (std::size_t i = 0; i < s.size(); ++i)
          a.for_successors(s[i], x, [&](State t) {
            auto j = std::lower_bound(next.begin(), next.end(), t) - next.begin();
            bound[j] = std::min(bound[j], f[i]);
          });
      } else {
        out.add_edge(from, x, ex.intern(subset_key(next), false));
      }
      // a tight ranking uses each odd rank up to its maximum on a rejecting state
      std::uint32_t rejecting = 0;
      for (State t : next) rejecting += a.accepting(t) ? 0 : 1;
      for (auto& b : bound) b = std::min<std::uint32_t>(b, rejecting == 0 ? 0 : 2 * rejecting - 1);
      std::vector<State> owed;
      if (ranked && !o.empty()) {
        for (State q : o) a.for_successors(q, x, [&](State t) { owed.push_back(t); });
        std::sort(owed.begin(), owed.end());
        owed.erase(std::unique(owed.begin(), owed.end()), owed.end());
      } else {
        owed = next;
      }
      rankings(next, bound, [&](const std::vector<std::uint32_t>& g) {
        std::vector<State> no;
        for (State t : owed) {
          auto j = std::lower_bound(next.begin(), next.end(), t) - next.begin();
          if (g[j] % 2 == 0) no.push_back(t);
        }
        bool acc = no.empty();
        out.add_edge(from, x, ex.intern(ranked_key(next, g, no), acc));
      });
    }
  }
  return std::move(out.finish());
}

}  // namespace detail

/// Language complement over the same alphabet.
///
/// The input is trimmed first. Weak automata go through the breakpoint
/// construction; everything else through tight rank-based complementation.
/// Both are exact; the result is trimmed.
inline Ba complement(const Ba& input, const Limits& limits = {}) {
  Ba a = reduce(input);
  if (!has_accepting_run(a)) return universal_ba(a.alphabet());
  Ba out = is_weak(a) ? detail::complement_weak(a, limits) : detail::complement_ranked(a, limits);
  out = reduce(out);
  if (!has_accepting_run(out)) return empty_ba(a.alphabet());
  return out;
}

/// Rank-based complementation regardless of shape (for cross-checking).
inline Ba complement_rank_based(const Ba& input, const Limits& limits = {}) {
  return trim(detail::complement_ranked(trim(input), limits));
}

/// Result of a containment check: empty counterexample means L(A) is a subset of L(B).
struct Containment {
  std::optional<Lasso<Action>> counterexample;
  bool holds() const { return !counterexample.has_value(); }
};

/// L(a) is contained in L(b)?
inline Containment contains(const Ba& a, const Ba& b, const Limits& limits = {}, BuildLog* log = nullptr) {
  Ba nb = complement(b, limits);
  if (log) log->record("complement", nb);
  Ba product = intersect(a, nb, limits);
  if (log) log->record("intersect", product);
  return {find_accepted(product)};
}

}  // namespace softca

#endif  // SOFTCA_COMPLEMENT_HPP
