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

#ifndef SOFTCA_TESTS_SUPPORT_HPP
#define SOFTCA_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "softca.hpp"

namespace softca::testing {

using W = WeightedSemiring;
using WSca = Sca<W>;

/// The drone example: energy and snapshot components.
struct Drone {
  std::shared_ptr<const Cas> cas;
  WSca e;
  WSca s;

  Action act(const std::string& name) const { return cas->action(name); }
  Lasso<Action> lasso(std::vector<std::string> prefix, std::vector<std::string> cycle) const {
    std::vector<Action> p, c;
    for (const auto& x : prefix) p.push_back(act(x));
    for (const auto& x : cycle) c.push_back(act(x));
    return Lasso<Action>(std::move(p), std::move(c));
  }
  WSca es(Weight te, Weight ts) const {
    return compose(e, s).with_factor_thresholds({te, ts});
  }
};

inline std::vector<std::string> drone_actions() {
  return {"move", "snapshot", "pass", "charge", "discharge1", "discharge2", "move2", "snapshot1"};
}

inline Cas drone_cas() {
  auto names = drone_actions();
  auto id = [&](const char* n) { return static_cast<Action>(std::find(names.begin(), names.end(), n) - names.begin()); };
  std::vector<Cas::Composition> gens{{id("move"), id("discharge2"), id("move2")},
                                     {id("snapshot"), id("discharge1"), id("snapshot1")},
                                     {id("pass"), id("charge"), id("charge")}};
  return close_cas(names, gens, true).cas;
}

inline Drone drone(Weight te = 4, Weight ts = 1) {
  auto cas = std::make_shared<const Cas>(drone_cas());
  auto a = [&](const char* n) { return cas->action(n); };
  std::vector<WSca::Transition> et;
  for (State i = 0; i < 4; ++i) et.push_back({i, a("charge"), 0, i + 1});
  for (State i = 1; i < 5; ++i) et.push_back({i, a("discharge1"), 2, i - 1});
  for (State i = 2; i < 5; ++i) et.push_back({i, a("discharge2"), 5, i - 2});
  WSca e(W{}, cas, {"q0", "q1", "q2", "q3", "q4"}, 4, te, et, "e");
  // qY = 0, qN = 1
  std::vector<WSca::Transition> st{{0, a("move"), 0, 1}, {0, a("pass"), 1, 0}, {1, a("snapshot"), 0, 0},
                                   {1, a("move"), 2, 1}, {1, a("pass"), 1, 1}};
  WSca s(W{}, cas, {"qY", "qN"}, 1, ts, st, "s");
  return {cas, std::move(e), std::move(s)};
}

/// A three-state automaton over pairs of weights where raising the threshold
/// excludes a stream even though the bound from d still admits it.
inline Sca<WeightedPair> pair_example(std::pair<Weight, Weight> t = {1, 1}) {
  std::vector<std::string> names{"a"};
  auto cas = std::make_shared<const Cas>(Cas::symmetric(names, {}));
  using T = Sca<WeightedPair>::Transition;
  std::vector<T> ts{{0, 0, {4, 2}, 1}, {0, 0, {2, 4}, 2}, {1, 0, {0, 0}, 1}, {2, 0, {0, 0}, 2}};
  return Sca<WeightedPair>(WeightedPair{}, cas, {"q0", "q1", "q2"}, 0, t, ts, "A");
}

// ---------------------------------------------------------------------------
// Random inputs

inline Lasso<Action> random_lasso(std::mt19937& rng, std::size_t alphabet, std::size_t max_prefix, std::size_t max_cycle) {
  std::uniform_int_distribution<std::size_t> pl(0, max_prefix), cl(1, max_cycle);
  std::uniform_int_distribution<Action> letter(0, static_cast<Action>(alphabet - 1));
  std::vector<Action> p(pl(rng)), c(cl(rng));
  for (auto& x : p) x = letter(rng);
  for (auto& x : c) x = letter(rng);
  return Lasso<Action>(std::move(p), std::move(c));
}

/// Random lasso drawn from the behaviours of a Buchi automaton whose states
/// are all accepting, by walking until a state repeats. Empty if the walk
/// gets stuck.
inline std::optional<Lasso<Action>> random_run(std::mt19937& rng, const Ba& a) {
  std::vector<State> visited{a.initial()};
  std::vector<Action> word;
  while (true) {
    auto edges = a.edges(visited.back());
    if (edges.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    const auto& e = edges[pick(rng)];
    word.push_back(e.letter);
    auto it = std::find(visited.begin(), visited.end(), e.to);
    if (it != visited.end()) {
      auto k = static_cast<std::size_t>(it - visited.begin());
      return Lasso<Action>(std::vector<Action>(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k)),
                           std::vector<Action>(word.begin() + static_cast<std::ptrdiff_t>(k), word.end()));
    }
    visited.push_back(e.to);
  }
}

inline Ba random_ba(std::mt19937& rng, std::size_t max_states, std::size_t alphabet, double density = 0.35) {
  std::uniform_int_distribution<std::size_t> ns(1, max_states);
  std::bernoulli_distribution edge(density), acc(0.4);
  const std::size_t n = ns(rng);
  Ba a(alphabet);
  for (std::size_t s = 0; s < n; ++s) a.add_state(acc(rng));
  for (State s = 0; s < n; ++s)
    for (Action x = 0; x < alphabet; ++x)
      for (State t = 0; t < n; ++t)
        if (edge(rng)) a.add_edge(s, x, t);
  a.set_initial(0);
  return std::move(a.finish());
}

/// Random formula over the given atoms, depth at most `depth`.
inline FormulaPtr random_formula(std::mt19937& rng, std::size_t atoms, std::size_t depth, bool lifts = false) {
  std::uniform_int_distribution<int> kind(0, lifts ? 7 : 5);
  std::uniform_int_distribution<Action> atom_d(0, static_cast<Action>(atoms - 1));
  if (depth == 0) return std::bernoulli_distribution(0.15)(rng) ? top() : atom(atom_d(rng));
  switch (kind(rng)) {
    case 0: return atom(atom_d(rng));
    case 1: return conj(random_formula(rng, atoms, depth - 1, lifts), random_formula(rng, atoms, depth - 1, lifts));
    case 2: return until(random_formula(rng, atoms, depth - 1, lifts), random_formula(rng, atoms, depth - 1, lifts));
    case 3: return next(random_formula(rng, atoms, depth - 1, lifts));
    case 4: return neg(random_formula(rng, atoms, depth - 1, lifts));
    case 5: return disj(random_formula(rng, atoms, depth - 1, lifts), random_formula(rng, atoms, depth - 1, lifts));
    case 6: return cap(random_formula(rng, atoms, depth - 1, lifts));
    default: return cmp(random_formula(rng, atoms, depth - 1, lifts));
  }
}

/// Random action system satisfying the axioms: actions are nonempty subsets
/// of a small universe, composition is union, and two actions compose when
/// their union is again an action and they agree on a random "conflict"
/// bitmask. Candidates failing validation are redrawn.
inline Cas random_valid_cas(std::mt19937& rng, std::size_t max_actions) {
  std::uniform_int_distribution<std::size_t> count(1, max_actions);
  std::uniform_int_distribution<unsigned> subset(1, 15);
  for (;;) {
    std::size_t n = count(rng);
    std::vector<unsigned> sets;
    while (sets.size() < n) {
      unsigned x = subset(rng);
      if (std::find(sets.begin(), sets.end(), x) == sets.end()) sets.push_back(x);
    }
    unsigned conflict = subset(rng);
    std::vector<std::string> names;
    for (auto x : sets) names.push_back("s" + std::to_string(x));
    std::vector<Cas::Composition> pairs;
    for (Action a = 0; a < n; ++a)
      for (Action b = a + 1; b < n; ++b) {
        unsigned u = sets[a] | sets[b];
        auto it = std::find(sets.begin(), sets.end(), u);
        // composable unless both touch the conflict bits differently
        bool clash = (sets[a] & conflict) && (sets[b] & conflict) && ((sets[a] & conflict) != (sets[b] & conflict));
        if (it != sets.end() && !clash) pairs.push_back({a, b, static_cast<Action>(it - sets.begin())});
      }
    Cas cas = Cas::symmetric(names, pairs);
    if (cas.validate().ok()) return cas;
  }
}

// ---------------------------------------------------------------------------
// Independent oracles

/// sigma in L(a), by boolean reachability closure over the product of a with
/// the lasso shape (no SCC machinery).
inline bool member_oracle(const Ba& a, const Lasso<Action>& sigma) {
  const std::size_t p = sigma.positions(), n = a.size() * p;
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));  // reachable in >= 1 step
  for (State q = 0; q < a.size(); ++q)
    for (std::size_t i = 0; i < p; ++i)
      for (const auto& e : a.edges(q))
        if (e.letter == sigma.letter(i)) r[q * p + i][e.to * p + sigma.next_position(i)] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  const std::size_t start = a.initial() * p;
  for (State q = 0; q < a.size(); ++q) {
    if (!a.accepting(q)) continue;
    for (std::size_t i = 0; i < p; ++i) {
      std::size_t v = q * p + i;
      if (r[v][v] && (v == start || r[start][v])) return true;
    }
  }
  return false;
}

/// All lassos with prefix length <= mp and cycle length in [1, mc], canonical
/// and deduplicated.
inline std::vector<Lasso<Action>> all_lassos(std::size_t alphabet, std::size_t mp, std::size_t mc) {
  std::vector<Lasso<Action>> out;
  auto words = [&](std::size_t len) {
    std::vector<std::vector<Action>> ws{{}};
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<std::vector<Action>> next;
      for (const auto& w : ws)
        for (Action x = 0; x < alphabet; ++x) {
          next.push_back(w);
          next.back().push_back(x);
        }
      ws = std::move(next);
    }
    return ws;
  };
  for (std::size_t pl = 0; pl <= mp; ++pl)
    for (std::size_t cl = 1; cl <= mc; ++cl)
      for (const auto& p : words(pl))
        for (const auto& c : words(cl)) out.emplace_back(p, c);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Minimal suspect subsets by enumerating every subset.
template <CSemiring S>
std::vector<Subset> brute_minimal_suspects(const S& s, const std::vector<ValueOf<S>>& ts, const ValueOf<S>& d) {
  const std::size_t n = ts.size();
  auto suspect = [&](Subset j) {
    ValueOf<S> prod = s.one();
    for (std::size_t i = 0; i < n; ++i)
      if (j >> i & 1) prod = s.times(prod, ts[i]);
    return s.plus(prod, d) == d;
  };
  std::vector<Subset> out;
  for (Subset j = 0; j < (Subset{1} << n); ++j) {
    if (!suspect(j)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i)
      if ((j >> i & 1) && suspect(j & ~(Subset{1} << i))) minimal = false;
    if (minimal) out.push_back(j);
  }
  std::sort(out.begin(), out.end(), [](Subset x, Subset y) {
    auto cx = std::popcount(x), cy = std::popcount(y);
    return cx != cy ? cx < cy : x < y;
  });
  return out;
}

/// d_A by unrolling far enough that every (state set, position) pair recurs.
template <CSemiring S>
ValueOf<S> diagnostic_oracle(const Sca<S>& a, const Lasso<Action>& sigma) {
  const auto& s = a.semiring();
  const std::size_t horizon = sigma.positions() * ((std::size_t{1} << a.size()) + 1);
  std::vector<char> q(a.size(), 0);
  q[a.initial()] = 1;
  ValueOf<S> d = s.one();
  for (std::size_t n = 0; n < horizon; ++n) {
    std::vector<char> next(a.size(), 0);
    ValueOf<S> sum = s.zero();
    for (const auto& t : a.transitions())
      if (q[t.from] && t.action == sigma[n]) {
        sum = s.plus(sum, t.pref);
        next[t.to] = 1;
      }
    d = s.meet(d, sum);
    q = std::move(next);
  }
  return d;
}

}  // namespace softca::testing

#endif  // SOFTCA_TESTS_SUPPORT_HPP
