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

#ifndef SOFTCA_SCA_HPP
#define SOFTCA_SCA_HPP

#include <algorithm>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "softca/buchi.hpp"
#include "softca/cas.hpp"
#include "softca/graph.hpp"
#include "softca/lasso.hpp"
#include "softca/semiring.hpp"

namespace softca {

class CompositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A named primitive component inside a composite automaton.
template <class V>
struct Factor {
  std::string label;
  V threshold;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Soft component automaton over semiring S.
template <CSemiring S>
class Sca {
 public:
  using Value = ValueOf<S>;

  struct Transition {
    State from;
    Action action;
    Value pref;
    State to;
    friend bool operator==(const Transition&, const Transition&) = default;
  };

  Sca(S semiring, std::shared_ptr<const Cas> cas, std::vector<std::string> states, State initial, Value threshold,
      std::vector<Transition> transitions, std::string label = "A")
      : semiring_(std::move(semiring)),
        cas_(std::move(cas)),
        states_(std::move(states)),
        initial_(initial),
        threshold_(threshold),
        transitions_(std::move(transitions)),
        factors_{{std::move(label), threshold}} {
    if (!cas_) throw std::invalid_argument("automaton needs an action system");
    if (states_.empty()) throw std::invalid_argument("automaton needs at least one state");
    if (initial_ >= states_.size()) throw std::out_of_range("initial state out of range");
    require_carrier(semiring_, threshold_);
    for (const auto& t : transitions_) {
      if (t.from >= states_.size() || t.to >= states_.size()) throw std::out_of_range("transition state out of range");
      if (t.action >= cas_->size()) throw std::domain_error("transition action outside the action system");
      require_carrier(semiring_, t.pref);
    }
    index_transitions();
  }

  const S& semiring() const { return semiring_; }
  const Cas& cas() const { return *cas_; }
  const std::shared_ptr<const Cas>& cas_ptr() const { return cas_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& state_name(State q) const { return states_.at(q); }
  std::optional<State> find_state(const std::string& name) const {
    auto it = std::find(states_.begin(), states_.end(), name);
    if (it == states_.end()) return std::nullopt;
    return static_cast<State>(it - states_.begin());
  }
  State initial() const { return initial_; }
  const Value& threshold() const { return threshold_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  /// Indices into transitions() leaving q.
  const std::vector<std::size_t>& outgoing(State q) const { return out_[q]; }
  /// The primitive components this automaton was composed from.
  const std::vector<Factor<Value>>& factors() const { return factors_; }

  bool admissible(const Transition& t) const { return leq(semiring_, threshold_, t.pref); }

  /// Same automaton with a different overall threshold. Factor thresholds are
  /// kept as recorded.
  Sca with_threshold(const Value& t) const {
    require_carrier(semiring_, t);
    Sca copy = *this;
    copy.threshold_ = t;
    if (copy.factors_.size() == 1) copy.factors_[0].threshold = t;
    return copy;
  }

  /// Replaces the factor thresholds; the overall threshold becomes their product.
  Sca with_factor_thresholds(const std::vector<Value>& ts) const {
    if (ts.size() != factors_.size())
      throw std::invalid_argument("expected " + std::to_string(factors_.size()) + " thresholds, got " +
                                  std::to_string(ts.size()));
    Sca copy = *this;
    Value product = semiring_.one();
    for (std::size_t i = 0; i < ts.size(); ++i) {
      require_carrier(semiring_, ts[i]);
      copy.factors_[i].threshold = ts[i];
      product = semiring_.times(product, ts[i]);
    }
    copy.threshold_ = product;
    return copy;
  }

  Sca relabel(std::string label) const {
    if (factors_.size() != 1) throw std::logic_error("only primitive automata can be relabelled");
    Sca copy = *this;
    copy.factors_[0].label = std::move(label);
    return copy;
  }

  static Sca assemble(S semiring, std::shared_ptr<const Cas> cas, std::vector<std::string> states, State initial,
                      Value threshold, std::vector<Transition> transitions, std::vector<Factor<Value>> factors) {
    Sca a(std::move(semiring), std::move(cas), std::move(states), initial, threshold, std::move(transitions));
    a.factors_ = std::move(factors);
    return a;
  }

 private:
  void index_transitions() {
    out_.assign(states_.size(), {});
    for (std::size_t i = 0; i < transitions_.size(); ++i) out_[transitions_[i].from].push_back(i);
  }

  S semiring_;
  std::shared_ptr<const Cas> cas_;
  std::vector<std::string> states_;
  State initial_;
  Value threshold_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<Factor<Value>> factors_;
};

/// Parallel composition. States are pairs, named "(q0,q1)", ordered
/// row-major; the threshold is t0 * t1.
template <CSemiring S>
Sca<S> compose(const Sca<S>& a0, const Sca<S>& a1) {
  if (!(a0.semiring() == a1.semiring())) throw CompositionError("automata over different semirings");
  if (a0.cas_ptr() != a1.cas_ptr() && !(a0.cas() == a1.cas()))
    throw CompositionError("automata over different action systems");
  const auto& s = a0.semiring();
  const auto& cas = a0.cas();
  const auto n1 = static_cast<State>(a1.size());
  std::vector<std::string> names;
  for (State p = 0; p < a0.size(); ++p)
    for (State q = 0; q < a1.size(); ++q) names.push_back("(" + a0.state_name(p) + "," + a1.state_name(q) + ")");
  std::vector<typename Sca<S>::Transition> ts;
  for (const auto& t0 : a0.transitions())
    for (const auto& t1 : a1.transitions())
      if (cas.composable(t0.action, t1.action))
        ts.push_back({t0.from * n1 + t1.from, cas.compose(t0.action, t1.action), s.times(t0.pref, t1.pref),
                      t0.to * n1 + t1.to});
  auto factors = a0.factors();
  factors.insert(factors.end(), a1.factors().begin(), a1.factors().end());
  return Sca<S>::assemble(s, a0.cas_ptr(), std::move(names), a0.initial() * n1 + a1.initial(),
                          s.times(a0.threshold(), a1.threshold()), std::move(ts), std::move(factors));
}

/// Whether sigma is a behaviour: searches the product of the lasso shape with
/// the admissible transitions for a reachable cycle.
template <CSemiring S>
bool accepts(const Sca<S>& a, const Lasso<Action>& sigma) {
  for (const auto& x : sigma.prefix())
    if (x >= a.cas().size()) throw std::domain_error("unknown action in stream");
  for (const auto& x : sigma.cycle())
    if (x >= a.cas().size()) throw std::domain_error("unknown action in stream");
  const std::size_t positions = sigma.positions();
  const std::size_t total = a.size() * positions;
  auto id = [&](State q, std::size_t pos) { return q * positions + pos; };
  // successors in the product graph
  auto succ = [&](std::size_t v, auto&& f) {
    auto q = static_cast<State>(v / positions);
    auto pos = v % positions;
    for (auto i : a.outgoing(q)) {
      const auto& t = a.transitions()[i];
      if (t.action == sigma.letter(pos) && a.admissible(t)) f(id(t.to, sigma.next_position(pos)));
    }
  };
  // repeatedly strip nodes without successors; a reachable survivor lies on
  // or leads to an infinite path
  std::vector<std::size_t> degree(total, 0);
  std::vector<std::vector<std::size_t>> preds(total);
  for (std::size_t v = 0; v < total; ++v)
    succ(v, [&](std::size_t w) {
      ++degree[v];
      preds[w].push_back(v);
    });
  std::vector<char> alive(total, 1);
  std::vector<std::size_t> dead;
  for (std::size_t v = 0; v < total; ++v)
    if (degree[v] == 0) dead.push_back(v);
  while (!dead.empty()) {
    auto v = dead.back();
    dead.pop_back();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (auto p : preds[v])
      if (alive[p] && --degree[p] == 0) dead.push_back(p);
  }
  return alive[id(a.initial(), 0)] != 0;
}

/// States reachable from the initial state along admissible transitions.
template <CSemiring S>
std::vector<State> reachable(const Sca<S>& a) {
  std::vector<char> seen(a.size(), 0);
  std::vector<State> stack{a.initial()};
  seen[a.initial()] = 1;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (auto i : a.outgoing(q)) {
      const auto& t = a.transitions()[i];
      if (a.admissible(t) && !seen[t.to]) {
        seen[t.to] = 1;
        stack.push_back(t.to);
      }
    }
  }
  std::vector<State> out;
  for (State q = 0; q < a.size(); ++q)
    if (seen[q]) out.push_back(q);
  return out;
}

/// Drops unreachable states and inadmissible transitions.
template <CSemiring S>
Sca<S> trim(const Sca<S>& a) {
  auto keep = reachable(a);
  std::vector<State> id(a.size(), std::numeric_limits<State>::max());
  std::vector<std::string> names;
  for (State q : keep) {
    id[q] = static_cast<State>(names.size());
    names.push_back(a.state_name(q));
  }
  std::vector<typename Sca<S>::Transition> ts;
  for (const auto& t : a.transitions())
    if (a.admissible(t) && id[t.from] != std::numeric_limits<State>::max())
      ts.push_back({id[t.from], t.action, t.pref, id[t.to]});
  return Sca<S>::assemble(a.semiring(), a.cas_ptr(), std::move(names), id[a.initial()], a.threshold(), std::move(ts),
                          a.factors());
}

/// Adds a halt state reachable from every state by `halt` transitions with
/// the given preference. The action system must contain `halt` with
/// halt composable with, and absorbing, every action.
template <CSemiring S>
Sca<S> halt_augment(const Sca<S>& a, std::optional<ValueOf<S>> pref = std::nullopt) {
  const auto& cas = a.cas();
  auto halt = cas.find("halt");
  if (!halt) throw std::domain_error("action system has no 'halt' action");
  for (Action x = 0; x < cas.size(); ++x)
    if (!cas.composable(*halt, x) || cas.result(*halt, x) != halt)
      throw std::domain_error("action system violates the halt conventions at '" + cas.name(x) + "'");
  auto p = pref.value_or(a.semiring().one());
  require_carrier(a.semiring(), p);
  auto names = a.states();
  std::string halt_name = "halt";
  while (std::find(names.begin(), names.end(), halt_name) != names.end()) halt_name += "'";
  const auto h = static_cast<State>(names.size());
  names.push_back(halt_name);
  auto ts = a.transitions();
  for (State q = 0; q <= h; ++q) ts.push_back({q, *halt, p, h});
  return Sca<S>::assemble(a.semiring(), a.cas_ptr(), std::move(names), a.initial(), a.threshold(), std::move(ts),
                          a.factors());
}

/// Buchi automaton with the same language: admissible transitions only, all
/// states accepting.
template <CSemiring S>
Ba to_ba(const Sca<S>& a) {
  Ba out(a.cas().size());
  for (State q = 0; q < a.size(); ++q) out.add_state(true);
  for (const auto& t : a.transitions())
    if (a.admissible(t)) out.add_edge(t.from, t.action, t.to);
  out.set_initial(a.initial());
  return std::move(out.finish());
}

}  // namespace softca

#endif  // SOFTCA_SCA_HPP
