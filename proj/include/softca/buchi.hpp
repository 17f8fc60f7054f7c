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

#ifndef SOFTCA_BUCHI_HPP
#define SOFTCA_BUCHI_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "softca/cas.hpp"
#include "softca/graph.hpp"
#include "softca/lasso.hpp"

namespace softca {

using State = std::uint32_t;

struct Limits {
  std::size_t max_states = 1'000'000;
  /// Bound on candidate successors enumerated per construction, as a
  /// multiple of max_states.
  std::size_t work_factor = 64;

  std::size_t max_work() const { return max_states * work_factor; }
};

/// Raised when a construction would exceed Limits::max_states.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::string stage, std::size_t limit)
      : std::runtime_error("state-count ceiling of " + std::to_string(limit) + " exceeded in " + stage),
        stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

/// Nondeterministic Buchi automaton over letters [0, alphabet).
class Ba {
 public:
  struct Edge {
    Action letter;
    State to;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  Ba() = default;
  explicit Ba(std::size_t alphabet) : alphabet_(alphabet) {}

  State add_state(bool accepting) {
    accepting_.push_back(accepting);
    out_.emplace_back();
    return static_cast<State>(accepting_.size() - 1);
  }
  void add_edge(State from, Action letter, State to) {
    if (letter >= alphabet_) throw std::out_of_range("letter outside the automaton alphabet");
    out_.at(from).push_back({letter, to});
  }
  void set_initial(State s) { initial_ = s; }
  void set_accepting(State s, bool value) { accepting_.at(s) = value; }

  /// Sorts and deduplicates edges; every construction ends with this.
  Ba& finish() {
    for (auto& edges : out_) {
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
    return *this;
  }

  std::size_t size() const { return accepting_.size(); }
  std::size_t alphabet() const { return alphabet_; }
  State initial() const { return initial_; }
  bool accepting(State s) const { return accepting_[s] != 0; }
  std::span<const Edge> edges(State s) const { return out_[s]; }
  std::size_t transition_count() const {
    std::size_t n = 0;
    for (const auto& e : out_) n += e.size();
    return n;
  }
  bool all_accepting() const {
    return std::all_of(accepting_.begin(), accepting_.end(), [](char c) { return c != 0; });
  }

  template <class F>
  void for_successors(State s, Action letter, F&& f) const {
    const auto& edges = out_[s];
    auto it = std::lower_bound(edges.begin(), edges.end(), Edge{letter, 0});
    for (; it != edges.end() && it->letter == letter; ++it) f(it->to);
  }

  /// At most one successor per (state, letter).
  bool deterministic() const {
    for (const auto& edges : out_)
      for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i].letter == edges[i - 1].letter) return false;
    return true;
  }

 private:
  std::size_t alphabet_ = 0;
  State initial_ = 0;
  std::vector<char> accepting_;
  std::vector<std::vector<Edge>> out_;
};

/// Alternating Buchi automaton: transitions lead to sets of states.
class Aba {
 public:
  struct Transition {
    Action letter;
    std::vector<State> to;  // sorted, possibly empty
    friend auto operator<=>(const Transition&, const Transition&) = default;
  };

  Aba() = default;
  explicit Aba(std::size_t alphabet) : alphabet_(alphabet) {}

  State add_state(bool accepting) {
    accepting_.push_back(accepting);
    out_.emplace_back();
    return static_cast<State>(accepting_.size() - 1);
  }
  void add_transition(State from, Action letter, std::vector<State> to) {
    if (letter >= alphabet_) throw std::out_of_range("letter outside the automaton alphabet");
    std::sort(to.begin(), to.end());
    to.erase(std::unique(to.begin(), to.end()), to.end());
    out_.at(from).push_back({letter, std::move(to)});
  }
  void set_initial(State s) { initial_ = s; }

  Aba& finish() {
    for (auto& ts : out_) {
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    }
    return *this;
  }

  std::size_t size() const { return accepting_.size(); }
  std::size_t alphabet() const { return alphabet_; }
  State initial() const { return initial_; }
  bool accepting(State s) const { return accepting_[s] != 0; }
  std::span<const Transition> transitions(State s) const { return out_[s]; }

 private:
  std::size_t alphabet_ = 0;
  State initial_ = 0;
  std::vector<char> accepting_;
  std::vector<std::vector<Transition>> out_;
};

/// Sizes of intermediate automata, in construction order.
struct BuildLog {
  struct Entry {
    std::string stage;
    std::size_t states;
    std::size_t transitions;
  };
  std::vector<Entry> entries;

  void record(std::string stage, const Ba& a) { entries.push_back({std::move(stage), a.size(), a.transition_count()}); }
  std::size_t max_states() const {
    std::size_t m = 0;
    for (const auto& e : entries) m = std::max(m, e.states);
    return m;
  }
};

namespace detail {

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Breadth-first construction of an automaton whose states are keys.
template <class Key, class Hash = std::hash<Key>>
class Explorer {
 public:
  Explorer(Ba& out, const Limits& limits, std::string stage) : out_(out), limits_(limits), stage_(std::move(stage)) {}

  State intern(const Key& key, bool accepting) {
    auto [it, fresh] = ids_.try_emplace(key, 0);
    if (fresh) {
      if (out_.size() >= limits_.max_states) throw CapacityError(stage_, limits_.max_states);
      it->second = out_.add_state(accepting);
      pending_.push_back(key);
    }
    return it->second;
  }
  bool done() const { return pending_.empty(); }
  Key pop() {
    Key k = std::move(pending_.front());
    pending_.pop_front();
    return k;
  }
  State id(const Key& key) const { return ids_.at(key); }

 private:
  Ba& out_;
  const Limits& limits_;
  std::string stage_;
  std::unordered_map<Key, State, Hash> ids_;
  std::deque<Key> pending_;
};

inline void check_alphabets(const Ba& a, const Ba& b) {
  if (a.alphabet() != b.alphabet()) throw std::invalid_argument("automata over different alphabets");
}

}  // namespace detail

/// Accepts every stream.
inline Ba universal_ba(std::size_t alphabet) {
  Ba a(alphabet);
  State s = a.add_state(true);
  for (Action x = 0; x < alphabet; ++x) a.add_edge(s, x, s);
  a.set_initial(s);
  return std::move(a.finish());
}

/// Accepts no stream.
inline Ba empty_ba(std::size_t alphabet) {
  Ba a(alphabet);
  a.set_initial(a.add_state(false));
  return a;
}

/// Streams whose first letter is exactly `letter`.
inline Ba atom_ba(Action letter, std::size_t alphabet) {
  Ba a(alphabet);
  State q0 = a.add_state(false);
  State q1 = a.add_state(true);
  a.add_edge(q0, letter, q1);
  for (Action x = 0; x < alphabet; ++x) a.add_edge(q1, x, q1);
  a.set_initial(q0);
  return std::move(a.finish());
}

/// Streams whose first letter is not `letter`.
inline Ba not_atom_ba(Action letter, std::size_t alphabet) {
  Ba a(alphabet);
  State q0 = a.add_state(false);
  State q1 = a.add_state(true);
  for (Action x = 0; x < alphabet; ++x) {
    if (x != letter) a.add_edge(q0, x, q1);
    a.add_edge(q1, x, q1);
  }
  a.set_initial(q0);
  return std::move(a.finish());
}

/// Language union: disjoint copies behind a fresh initial state.
inline Ba union_ba(const Ba& a, const Ba& b) {
  detail::check_alphabets(a, b);
  Ba out(a.alphabet());
  const auto na = static_cast<State>(a.size());
  for (State s = 0; s < a.size(); ++s) out.add_state(a.accepting(s));
  for (State s = 0; s < b.size(); ++s) out.add_state(b.accepting(s));
  State init = out.add_state(false);
  for (State s = 0; s < a.size(); ++s)
    for (const auto& e : a.edges(s)) out.add_edge(s, e.letter, e.to);
  for (State s = 0; s < b.size(); ++s)
    for (const auto& e : b.edges(s)) out.add_edge(na + s, e.letter, na + e.to);
  for (const auto& e : a.edges(a.initial())) out.add_edge(init, e.letter, e.to);
  for (const auto& e : b.edges(b.initial())) out.add_edge(init, e.letter, na + e.to);
  out.set_initial(init);
  return std::move(out.finish());
}

/// Language intersection. If one side accepts in every state, a plain product
/// suffices; otherwise the two-phase product is used.
inline Ba intersect(const Ba& a, const Ba& b, const Limits& limits = {}) {
  detail::check_alphabets(a, b);
  Ba out(a.alphabet());
  const bool plain = a.all_accepting() || b.all_accepting();
  using Key = std::uint64_t;  // q1 | q2 << 31 | phase << 62
  auto key = [](State q1, State q2, unsigned phase) {
    return Key{q1} | (Key{q2} << 31) | (Key{phase} << 62);
  };
  auto accepting = [&](State q1, State q2, unsigned phase) {
    if (plain) return a.accepting(q1) && b.accepting(q2);
    return phase == 1 && b.accepting(q2);
  };
  detail::Explorer<Key> ex(out, limits, "intersect");
  out.set_initial(ex.intern(key(a.initial(), b.initial(), 0), accepting(a.initial(), b.initial(), 0)));
  while (!ex.done()) {
    Key k = ex.pop();
    auto q1 = static_cast<State>(k & 0x7fffffffULL);
    auto q2 = static_cast<State>((k >> 31) & 0x7fffffffULL);
    auto phase = static_cast<unsigned>(k >> 62);
    State from = ex.id(k);
    unsigned next_phase = phase;
    if (!plain) {
      if (phase == 0 && a.accepting(q1)) next_phase = 1;
      else if (phase == 1 && b.accepting(q2)) next_phase = 0;
    }
    for (const auto& e1 : a.edges(q1))
      b.for_successors(q2, e1.letter, [&](State t2) {
        out.add_edge(from, e1.letter, ex.intern(key(e1.to, t2, next_phase), accepting(e1.to, t2, next_phase)));
      });
  }
  return std::move(out.finish());
}

/// Streams whose first derivative is accepted by `a`.
inline Ba next_ba(const Ba& a) {
  Ba out(a.alphabet());
  for (State s = 0; s < a.size(); ++s) out.add_state(a.accepting(s));
  for (State s = 0; s < a.size(); ++s)
    for (const auto& e : a.edges(s)) out.add_edge(s, e.letter, e.to);
  State fresh = out.add_state(false);
  for (Action x = 0; x < a.alphabet(); ++x) out.add_edge(fresh, x, a.initial());
  out.set_initial(fresh);
  return std::move(out.finish());
}

/// Relabels each edge letter a with every b such that `related(a, b)`.
template <class Rel>
Ba relabel(const Ba& a, Rel&& related) {
  Ba out(a.alphabet());
  for (State s = 0; s < a.size(); ++s) out.add_state(a.accepting(s));
  for (State s = 0; s < a.size(); ++s)
    for (const auto& e : a.edges(s))
      for (Action b = 0; b < a.alphabet(); ++b)
        if (related(e.letter, b)) out.add_edge(s, b, e.to);
  out.set_initial(a.initial());
  return std::move(out.finish());
}

/// Streams that pointwise capture some stream of `a`.
inline Ba capture_lift(const Ba& a, const Cas& cas) {
  if (cas.size() != a.alphabet()) throw std::invalid_argument("action system does not match the automaton alphabet");
  return relabel(a, [&](Action x, Action b) { return cas.captures(x, b); });
}

/// Streams pointwise composable with some stream of `a`.
inline Ba composable_lift(const Ba& a, const Cas& cas) {
  if (cas.size() != a.alphabet()) throw std::invalid_argument("action system does not match the automaton alphabet");
  return relabel(a, [&](Action x, Action b) { return cas.composable(x, b); });
}

/// Alternating automaton for "a1 until a2": a pivot state that either branches
/// into a copy of a1 and stays, or stops by moving into a2.
inline Aba until_aba(const Ba& a1, const Ba& a2) {
  detail::check_alphabets(a1, a2);
  Aba out(a1.alphabet());
  const auto n1 = static_cast<State>(a1.size());
  for (State s = 0; s < a1.size(); ++s) out.add_state(a1.accepting(s));
  for (State s = 0; s < a2.size(); ++s) out.add_state(a2.accepting(s));
  State pivot = out.add_state(false);
  for (State s = 0; s < a1.size(); ++s)
    for (const auto& e : a1.edges(s)) out.add_transition(s, e.letter, {e.to});
  for (State s = 0; s < a2.size(); ++s)
    for (const auto& e : a2.edges(s)) out.add_transition(n1 + s, e.letter, {n1 + e.to});
  for (const auto& e : a1.edges(a1.initial())) out.add_transition(pivot, e.letter, {e.to, pivot});
  for (const auto& e : a2.edges(a2.initial())) out.add_transition(pivot, e.letter, {n1 + e.to});
  out.set_initial(pivot);
  return std::move(out.finish());
}

/// Release, the dual of until: a2 holds at every position up to and
/// including the first one where a1 holds, or forever. The pivot is
/// accepting, so staying in it forever is allowed.
inline Aba release_aba(const Ba& a1, const Ba& a2) {
  detail::check_alphabets(a1, a2);
  Aba out(a1.alphabet());
  const auto n1 = static_cast<State>(a1.size());
  for (State s = 0; s < a1.size(); ++s) out.add_state(a1.accepting(s));
  for (State s = 0; s < a2.size(); ++s) out.add_state(a2.accepting(s));
  State pivot = out.add_state(true);
  for (State s = 0; s < a1.size(); ++s)
    for (const auto& e : a1.edges(s)) out.add_transition(s, e.letter, {e.to});
  for (State s = 0; s < a2.size(); ++s)
    for (const auto& e : a2.edges(s)) out.add_transition(n1 + s, e.letter, {n1 + e.to});
  for (const auto& e2 : a2.edges(a2.initial())) {
    out.add_transition(pivot, e2.letter, {n1 + e2.to, pivot});
    for (const auto& e1 : a1.edges(a1.initial()))
      if (e1.letter == e2.letter) out.add_transition(pivot, e2.letter, {n1 + e2.to, e1.to});
  }
  out.set_initial(pivot);
  return std::move(out.finish());
}

/// A Buchi automaton viewed as an alternating one with singleton targets.
inline Aba embed(const Ba& a) {
  Aba out(a.alphabet());
  for (State s = 0; s < a.size(); ++s) out.add_state(a.accepting(s));
  for (State s = 0; s < a.size(); ++s)
    for (const auto& e : a.edges(s)) out.add_transition(s, e.letter, {e.to});
  out.set_initial(a.initial());
  return std::move(out.finish());
}

/// Miyano-Hayashi breakpoint construction. States are pairs (U, V) with V a
/// subset of U: U is the current level of the run tree, V the branches that
/// have not visited an accepting state since the last breakpoint.
inline Ba dealternate(const Aba& a, const Limits& limits = {}) {
  using Key = std::vector<State>;  // U..., kSep, V...
  constexpr State kSep = std::numeric_limits<State>::max();
  Ba out(a.alphabet());
  detail::Explorer<Key, detail::VectorHash> ex(out, limits, "dealternate");
  auto make_key = [&](const std::vector<State>& u, const std::vector<State>& v) {
    Key k = u;
    k.push_back(kSep);
    k.insert(k.end(), v.begin(), v.end());
    return k;
  };
  out.set_initial(ex.intern(make_key({a.initial()}, {}), true));
  std::vector<State> u, v;
  std::size_t work = 0;
  while (!ex.done()) {
    Key k = ex.pop();
    State from = ex.id(k);
    auto sep = std::find(k.begin(), k.end(), kSep);
    u.assign(k.begin(), sep);
    v.assign(sep + 1, k.end());
    for (Action x = 0; x < a.alphabet(); ++x) {
      // options[i] = destination sets available to u[i] on x
      std::vector<std::vector<const std::vector<State>*>> options(u.size());
      bool stuck = false;
      for (std::size_t i = 0; i < u.size() && !stuck; ++i) {
        for (const auto& t : a.transitions(u[i]))
          if (t.letter == x) options[i].push_back(&t.to);
        stuck = options[i].empty();
      }
      if (stuck) continue;
      std::vector<std::size_t> choice(u.size(), 0);
      while (true) {
        if (++work > limits.max_work()) throw CapacityError("dealternate", limits.max_states);
        std::vector<State> nu, nv;
        for (std::size_t i = 0; i < u.size(); ++i) {
          const auto& dest = *options[i][choice[i]];
          nu.insert(nu.end(), dest.begin(), dest.end());
          if (std::binary_search(v.begin(), v.end(), u[i])) nv.insert(nv.end(), dest.begin(), dest.end());
        }
        std::sort(nu.begin(), nu.end());
        nu.erase(std::unique(nu.begin(), nu.end()), nu.end());
        if (v.empty()) nv = nu;
        std::sort(nv.begin(), nv.end());
        nv.erase(std::unique(nv.begin(), nv.end()), nv.end());
        std::erase_if(nv, [&](State s) { return a.accepting(s); });
        out.add_edge(from, x, ex.intern(make_key(nu, nv), nv.empty()));
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == options[i].size()) choice[i++] = 0;
        if (i == choice.size()) break;
      }
    }
  }
  return std::move(out.finish());
}

/// Restricts `a` to the given states (the initial state is always kept).
inline Ba restrict_to(const Ba& a, const std::vector<char>& keep) {
  std::vector<State> id(a.size(), std::numeric_limits<State>::max());
  Ba out(a.alphabet());
  for (State s = 0; s < a.size(); ++s)
    if (keep[s] || s == a.initial()) id[s] = out.add_state(a.accepting(s));
  for (State s = 0; s < a.size(); ++s) {
    if (id[s] == std::numeric_limits<State>::max()) continue;
    for (const auto& e : a.edges(s))
      if (id[e.to] != std::numeric_limits<State>::max() && keep[e.to] && (keep[s])) out.add_edge(id[s], e.letter, id[e.to]);
  }
  out.set_initial(id[a.initial()]);
  return std::move(out.finish());
}

/// States reachable from the initial state.
inline std::vector<char> reachable_states(const Ba& a) {
  std::vector<char> seen(a.size(), 0);
  std::vector<State> stack{a.initial()};
  seen[a.initial()] = 1;
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (const auto& e : a.edges(s))
      if (!seen[e.to]) {
        seen[e.to] = 1;
        stack.push_back(e.to);
      }
  }
  return seen;
}

/// Drops states that are unreachable or cannot reach an accepting cycle.
/// The language is unchanged.
inline Ba trim(const Ba& a) {
  auto reach = reachable_states(a);
  auto sccs = graph::tarjan(a.size(), [&](std::size_t s, auto&& f) {
    for (const auto& e : a.edges(static_cast<State>(s))) f(e.to);
  });
  // productive: can reach an accepting state lying on a cycle
  std::vector<char> productive(a.size(), 0);
  std::vector<std::vector<State>> preds(a.size());
  for (State s = 0; s < a.size(); ++s)
    for (const auto& e : a.edges(s)) preds[e.to].push_back(s);
  std::vector<State> stack;
  for (State s = 0; s < a.size(); ++s)
    if (a.accepting(s) && sccs.nontrivial[sccs.component[s]]) {
      productive[s] = 1;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State p : preds[s])
      if (!productive[p]) {
        productive[p] = 1;
        stack.push_back(p);
      }
  }
  std::vector<char> keep(a.size(), 0);
  bool all = true;
  for (State s = 0; s < a.size(); ++s) {
    keep[s] = reach[s] && productive[s];
    all = all && keep[s];
  }
  if (all) return a;
  return restrict_to(a, keep);
}

/// Quotient by the coarsest forward bisimulation that respects acceptance.
/// Bisimilar states have the same accepted runs, so the language is unchanged.
inline Ba quotient(const Ba& a) {
  const std::size_t n = a.size();
  std::vector<std::uint32_t> block(n);
  for (State s = 0; s < n; ++s) block[s] = a.accepting(s) ? 1 : 0;
  std::size_t blocks = 0;
  while (true) {
    // signature: own block plus the set of (letter, successor block)
    std::map<std::vector<std::uint64_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> next(n);
    for (State s = 0; s < n; ++s) {
      std::vector<std::uint64_t> sig{block[s]};
      for (const auto& e : a.edges(s)) sig.push_back((std::uint64_t{e.letter} << 32) | block[e.to]);
      std::sort(sig.begin() + 1, sig.end());
      sig.erase(std::unique(sig.begin() + 1, sig.end()), sig.end());
      next[s] = ids.try_emplace(std::move(sig), static_cast<std::uint32_t>(ids.size())).first->second;
    }
    const bool stable = ids.size() == blocks;
    blocks = ids.size();
    block = std::move(next);
    if (stable) break;
  }
  if (blocks == n) return a;
  Ba out(a.alphabet());
  std::vector<State> rep(blocks, std::numeric_limits<State>::max());
  for (State s = 0; s < n; ++s)
    if (rep[block[s]] == std::numeric_limits<State>::max()) rep[block[s]] = s;
  for (std::size_t b = 0; b < blocks; ++b) out.add_state(a.accepting(rep[b]));
  for (std::size_t b = 0; b < blocks; ++b)
    for (const auto& e : a.edges(rep[b])) out.add_edge(static_cast<State>(b), e.letter, block[e.to]);
  out.set_initial(block[a.initial()]);
  return std::move(out.finish());
}

/// trim followed by quotient.
inline Ba reduce(const Ba& a) { return quotient(trim(a)); }

/// Whether `a` accepts the eventually periodic stream `word`.
inline bool member(const Ba& a, const Lasso<Action>& word) {
  const std::size_t positions = word.positions();
  auto node = [&](State q, std::size_t pos) { return static_cast<std::size_t>(q) * positions + pos; };
  std::unordered_map<std::size_t, std::uint32_t> index;
  std::vector<std::pair<State, std::size_t>> nodes;
  std::vector<std::vector<std::uint32_t>> adj;
  auto visit = [&](State q, std::size_t pos) {
    auto [it, fresh] = index.try_emplace(node(q, pos), static_cast<std::uint32_t>(nodes.size()));
    if (fresh) {
      nodes.emplace_back(q, pos);
      adj.emplace_back();
    }
    return it->second;
  };
  visit(a.initial(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto [q, pos] = nodes[i];
    std::size_t next = word.next_position(pos);
    a.for_successors(q, word.letter(pos), [&](State t) {
      auto j = visit(t, next);
      adj[i].push_back(j);
    });
  }
  auto sccs = graph::tarjan(nodes.size(), [&](std::size_t v, auto&& f) {
    for (auto w : adj[v]) f(w);
  });
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (a.accepting(nodes[i].first) && sccs.nontrivial[sccs.component[i]]) return true;
  return false;
}

namespace detail {

/// Breadth-first search that discovers, for each node, the shortest and then
/// lexicographically least word reaching it. With `from_successors`, the
/// search starts from the out-edges of `start` (so `start` itself may be
/// rediscovered, giving the shortest cycle through it).
struct LexBfs {
  std::vector<std::int64_t> parent;
  std::vector<Action> via;
  std::vector<std::uint32_t> depth;
  std::vector<char> seen;

  LexBfs(const Ba& a, State start, bool from_successors) {
    parent.assign(a.size(), -1);
    via.assign(a.size(), 0);
    depth.assign(a.size(), 0);
    seen.assign(a.size(), 0);
    std::deque<State> queue;
    if (!from_successors) {
      seen[start] = 1;
      queue.push_back(start);
    } else {
      for (const auto& e : a.edges(start))
        if (!seen[e.to]) {
          seen[e.to] = 1;
          parent[e.to] = start;
          via[e.to] = e.letter;
          depth[e.to] = 1;
          queue.push_back(e.to);
        }
    }
    while (!queue.empty()) {
      State s = queue.front();
      queue.pop_front();
      for (const auto& e : a.edges(s))
        if (!seen[e.to]) {
          seen[e.to] = 1;
          parent[e.to] = s;
          via[e.to] = e.letter;
          depth[e.to] = depth[s] + 1;
          queue.push_back(e.to);
        }
    }
  }

  std::vector<Action> word_to(State target, State start) const {
    std::vector<Action> w(depth[target]);
    State s = target;
    for (std::size_t i = w.size(); i-- > 0;) {
      w[i] = via[s];
      s = static_cast<State>(parent[s]);
    }
    (void)start;
    return w;
  }
};

}  // namespace detail

/// Emptiness check with witness extraction. Returns an accepted lasso if the
/// language is nonempty: over all accepting states on a reachable cycle, the
/// one minimizing (prefix length, cycle length, lexicographic word).
inline std::optional<Lasso<Action>> find_accepted(const Ba& a) {
  auto sccs = graph::tarjan(a.size(), [&](std::size_t s, auto&& f) {
    for (const auto& e : a.edges(static_cast<State>(s))) f(e.to);
  });
  detail::LexBfs from_init(a, a.initial(), false);
  std::optional<std::pair<std::vector<Action>, std::vector<Action>>> best;
  auto better = [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    if (x.second.size() != y.second.size()) return x.second.size() < y.second.size();
    if (x.first != y.first) return x.first < y.first;
    return x.second < y.second;
  };
  for (State f = 0; f < a.size(); ++f) {
    if (!a.accepting(f) || !from_init.seen[f] || !sccs.nontrivial[sccs.component[f]]) continue;
    if (best && from_init.depth[f] > best->first.size()) continue;
    detail::LexBfs around(a, f, true);
    std::pair candidate{from_init.word_to(f, a.initial()), around.word_to(f, f)};
    if (!best || better(candidate, *best)) best = std::move(candidate);
  }
  if (!best) return std::nullopt;
  return Lasso<Action>(std::move(best->first), std::move(best->second));
}

/// Nested depth-first search for an accepting lasso; true iff L(a) is nonempty.
inline bool has_accepting_run(const Ba& a) {
  std::vector<char> blue(a.size(), 0), red(a.size(), 0), on_stack(a.size(), 0);
  struct Frame {
    State s;
    std::size_t next;
  };
  auto red_search = [&](State seed) {
    std::vector<Frame> stack{{seed, 0}};
    red[seed] = 1;
    while (!stack.empty()) {
      auto& fr = stack.back();
      auto edges = a.edges(fr.s);
      if (fr.next == edges.size()) {
        stack.pop_back();
        continue;
      }
      State t = edges[fr.next++].to;
      if (on_stack[t]) return true;
      if (!red[t]) {
        red[t] = 1;
        stack.push_back({t, 0});
      }
    }
    return false;
  };
  std::vector<Frame> stack{{a.initial(), 0}};
  blue[a.initial()] = on_stack[a.initial()] = 1;
  while (!stack.empty()) {
    auto& fr = stack.back();
    auto edges = a.edges(fr.s);
    if (fr.next < edges.size()) {
      State t = edges[fr.next++].to;
      if (!blue[t]) {
        blue[t] = on_stack[t] = 1;
        stack.push_back({t, 0});
      }
      continue;
    }
    State s = fr.s;
    if (a.accepting(s) && red_search(s)) return true;
    on_stack[s] = 0;
    stack.pop_back();
  }
  return false;
}

}  // namespace softca

#endif  // SOFTCA_BUCHI_HPP
