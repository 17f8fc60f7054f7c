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

#ifndef SOFTCA_DIAGNOSTICS_HPP
#define SOFTCA_DIAGNOSTICS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "softca/sca.hpp"

namespace softca {

/// The computation of d_A(sigma). For a lasso the sequence of (Q_n, lasso
/// position) pairs is eventually periodic; it is recorded up to the first
/// repetition, after which index `loop_start` onwards repeats forever.
template <class V>
struct DiagnosticTrace {
  std::vector<std::vector<State>> state_sets;  // Q_n
  std::vector<V> sums;                         // xi(n)
  std::optional<std::size_t> loop_start;
  V value;
  /// Some Q_n was empty; xi is the semiring zero from there on.
  bool exhausted = false;
};

namespace detail {

template <CSemiring S>
std::pair<std::vector<State>, ValueOf<S>> diagnostic_step(const Sca<S>& a, const std::vector<State>& q, Action x) {
  if (x >= a.cas().size()) throw std::domain_error("unknown action in stream");
  std::vector<State> next;
  std::vector<ValueOf<S>> prefs;
  for (State p : q)
    for (auto i : a.outgoing(p)) {
      const auto& t = a.transitions()[i];
      if (t.action != x) continue;
      prefs.push_back(t.pref);
      next.push_back(t.to);
    }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return {std::move(next), big_sum(a.semiring(), std::span<const ValueOf<S>>(prefs))};
}

}  // namespace detail

/// d_A for a finite word. The thresholds of A play no role. The empty word
/// has no positions; its value is the semiring one.
template <CSemiring S>
DiagnosticTrace<ValueOf<S>> diagnostic_preference(const Sca<S>& a, std::span<const Action> word) {
  DiagnosticTrace<ValueOf<S>> tr{{}, {}, std::nullopt, a.semiring().one(), false};
  std::vector<State> q{a.initial()};
  for (Action x : word) {
    auto [next, sum] = detail::diagnostic_step(a, q, x);
    tr.state_sets.push_back(std::move(q));
    tr.sums.push_back(sum);
    tr.exhausted = tr.exhausted || next.empty();
    q = std::move(next);
  }
  tr.state_sets.push_back(std::move(q));
  if (!tr.sums.empty()) tr.value = glb(a.semiring(), std::span<const ValueOf<S>>(tr.sums));
  return tr;
}

/// d_A for an eventually periodic stream.
template <CSemiring S>
DiagnosticTrace<ValueOf<S>> diagnostic_preference(const Sca<S>& a, const Lasso<Action>& sigma) {
  DiagnosticTrace<ValueOf<S>> tr{{}, {}, std::nullopt, a.semiring().one(), false};
  std::map<std::pair<std::vector<State>, std::size_t>, std::size_t> seen;
  std::vector<State> q{a.initial()};
  for (std::size_t n = 0;; ++n) {
    const std::size_t pos = sigma.position_of(n);
    auto [it, fresh] = seen.try_emplace({q, pos}, n);
    if (!fresh) {
      tr.loop_start = it->second;
      break;
    }
    auto [next, sum] = detail::diagnostic_step(a, q, sigma.letter(pos));
    tr.state_sets.push_back(std::move(q));
    tr.sums.push_back(sum);
    tr.exhausted = tr.exhausted || next.empty();
    q = std::move(next);
  }
  tr.value = glb(a.semiring(), std::span<const ValueOf<S>>(tr.sums));
  return tr;
}

/// t <= d_A(sigma). Holds for every behaviour of A.
template <CSemiring S>
bool threshold_bound_holds(const Sca<S>& a, const Lasso<Action>& sigma) {
  return leq(a.semiring(), a.threshold(), diagnostic_preference(a, sigma).value);
}

/// Whether sigma stops being a behaviour once the threshold is t.
template <CSemiring S>
bool excludes_at(const Sca<S>& a, const ValueOf<S>& t, const Lasso<Action>& sigma) {
  return !accepts(a.with_threshold(t), sigma);
}

/// Index subsets of a component family, as bit masks.
using Subset = std::uint64_t;

inline std::vector<std::size_t> members(Subset j) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; j != 0; ++i, j >>= 1)
    if (j & 1) out.push_back(i);
  return out;
}

/// J is suspect when the product of its thresholds is below d.
template <CSemiring S>
bool is_suspect(const S& s, std::span<const ValueOf<S>> thresholds, Subset j, const ValueOf<S>& d) {
  ValueOf<S> product = s.one();
  for (auto i : members(j)) {
    if (i >= thresholds.size()) throw std::out_of_range("subset refers to an unknown component");
    product = times(s, product, thresholds[i]);
  }
  return leq(s, product, d);
}

template <class V>
struct SuspectResult {
  std::vector<std::string> labels;
  std::vector<V> thresholds;
  V d;
  /// Minimal suspect subsets in increasing (size, mask) order.
  std::vector<Subset> minimal;

  /// J is innocent iff it shares no component with a minimal suspect subset.
  bool innocent(Subset j) const {
    return std::none_of(minimal.begin(), minimal.end(), [&](Subset m) { return (m & j) != 0; });
  }
  Subset full() const { return labels.size() == 64 ? ~Subset{0} : (Subset{1} << labels.size()) - 1; }
  std::vector<std::string> names(Subset j) const {
    std::vector<std::string> out;
    for (auto i : members(j)) out.push_back(labels.at(i));
    return out;
  }
};

class NotSuspectError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Minimal suspect subsets of the whole family, by the recursive search that
/// drops one component at a time, memoized per subset. When d is the
/// semiring one every singleton is reported.
template <CSemiring S>
SuspectResult<ValueOf<S>> find_suspects(const S& s, std::vector<std::string> labels, std::vector<ValueOf<S>> thresholds,
                                        const ValueOf<S>& d) {
  if (labels.size() != thresholds.size()) throw std::invalid_argument("one threshold per component expected");
  if (labels.empty() || labels.size() > 63) throw std::invalid_argument("between 1 and 63 components supported");
  SuspectResult<ValueOf<S>> result{std::move(labels), std::move(thresholds), d, {}};
  const Subset all = result.full();
  std::span<const ValueOf<S>> ts(result.thresholds);
  if (!is_suspect(s, ts, all, d)) throw NotSuspectError("the full component set is not suspect");
  if (d == s.one()) {
    for (std::size_t i = 0; i < result.labels.size(); ++i) result.minimal.push_back(Subset{1} << i);
    return result;
  }
  std::unordered_map<Subset, bool> suspect_memo;
  auto suspect = [&](Subset j) {
    auto [it, fresh] = suspect_memo.try_emplace(j, false);
    if (fresh) it->second = is_suspect(s, ts, j, d);
    return it->second;
  };
  std::unordered_map<Subset, std::vector<Subset>> memo;
  auto find = [&](auto&& self, Subset i_set) -> const std::vector<Subset>& {
    if (auto it = memo.find(i_set); it != memo.end()) return it->second;
    std::vector<Subset> m;
    for (auto i : members(i_set)) {
      Subset smaller = i_set & ~(Subset{1} << i);
      if (suspect(smaller)) {
        const auto& sub = self(self, smaller);
        m.insert(m.end(), sub.begin(), sub.end());
      }
    }
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    if (m.empty()) m.push_back(i_set);
    return memo.emplace(i_set, std::move(m)).first->second;
  };
  result.minimal = find(find, all);
  std::sort(result.minimal.begin(), result.minimal.end(), [](Subset x, Subset y) {
    auto cx = std::popcount(x), cy = std::popcount(y);
    return cx != cy ? cx < cy : x < y;
  });
  return result;
}

/// Suspect analysis of a composite automaton for a counterexample sigma.
template <CSemiring S>
SuspectResult<ValueOf<S>> diagnose_suspects(const Sca<S>& a, const Lasso<Action>& sigma) {
  std::vector<std::string> labels;
  std::vector<ValueOf<S>> ts;
  for (const auto& f : a.factors()) {
    labels.push_back(f.label);
    ts.push_back(f.threshold);
  }
  return find_suspects(a.semiring(), std::move(labels), std::move(ts), diagnostic_preference(a, sigma).value);
}

}  // namespace softca

#endif  // SOFTCA_DIAGNOSTICS_HPP
