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

#ifndef SOFTCA_CAS_HPP
#define SOFTCA_CAS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace softca {

/// Index of an action in its component action system.
using Action = std::uint32_t;

class Cas;

/// Thrown when composing a pair outside the composability relation.
class IncomposableError : public std::domain_error {
 public:
  IncomposableError(Action a, Action b, const std::string& what) : std::domain_error(what), pair_(a, b) {}
  std::pair<Action, Action> pair() const { return pair_; }

 private:
  std::pair<Action, Action> pair_;
};

/// Thrown by the closure builder when a forced pair has no composition result.
class UnderSpecifiedError : public std::invalid_argument {
 public:
  UnderSpecifiedError(std::vector<std::pair<Action, Action>> pairs, const std::string& what)
      : std::invalid_argument(what), pairs_(std::move(pairs)) {}
  const std::vector<std::pair<Action, Action>>& pairs() const { return pairs_; }

 private:
  std::vector<std::pair<Action, Action>> pairs_;
};

struct CasViolation {
  enum class Kind { Reflexivity, Symmetry, Idempotency, Commutativity, Associativity, DanglingComposition };
  Kind kind;
  std::vector<Action> witness;
};

inline const char* to_string(CasViolation::Kind kind) {
  switch (kind) {
    case CasViolation::Kind::Reflexivity: return "reflexivity";
    case CasViolation::Kind::Symmetry: return "symmetry";
    case CasViolation::Kind::Idempotency: return "idempotency";
    case CasViolation::Kind::Commutativity: return "commutativity";
    case CasViolation::Kind::Associativity: return "associativity";
    case CasViolation::Kind::DanglingComposition: return "dangling-composition";
  }
  return "unknown";
}

struct ValidationReport {
  std::vector<CasViolation> violations;

  bool ok() const { return violations.empty(); }
  bool has(CasViolation::Kind kind) const {
    return std::any_of(violations.begin(), violations.end(), [&](const auto& v) { return v.kind == kind; });
  }
  std::vector<std::string> describe(const Cas& cas) const;
};

/// A component action system: a finite set of actions, a composability
/// relation, and a composition operator defined on composable pairs.
///
/// The tables are stored as given (ordered pairs), so an instance may violate
/// the axioms; `validate` reports such violations. Instances are immutable.
class Cas {
 public:
  /// One ordered entry `a o b`, optionally with `a [] b = result`.
  struct Entry {
    Action a;
    Action b;
    std::optional<Action> result;
  };

  /// An unordered composable pair with its result.
  struct Composition {
    Action a;
    Action b;
    Action result;
  };

  Cas() = default;

  Cas(std::vector<std::string> names, std::span<const Entry> entries) : names_(std::move(names)) {
    const std::size_t n = names_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!index_.emplace(names_[i], static_cast<Action>(i)).second)
        throw std::invalid_argument("duplicate action '" + names_[i] + "'");
    }
    composable_.assign(n * n, 0);
    result_.assign(n * n, kNone);
    for (const auto& e : entries) {
      check_index(e.a);
      check_index(e.b);
      composable_[at(e.a, e.b)] = 1;
      if (e.result) {
        check_index(*e.result);
        result_[at(e.a, e.b)] = static_cast<std::int64_t>(*e.result);
      }
    }
    captures_.assign(n * n, 0);
    for (Action a = 0; a < n; ++a)
      for (Action c = 0; c < n; ++c)
        if (composable_[at(a, c)] && result_[at(a, c)] != kNone) captures_[at(a, static_cast<Action>(result_[at(a, c)]))] = 1;
  }

  /// Builds the reflexive, symmetric relation generated by `pairs`, with
  /// a [] a = a for every action.
  static Cas symmetric(std::vector<std::string> names, std::span<const Composition> pairs) {
    std::vector<Entry> entries;
    for (Action a = 0; a < names.size(); ++a) entries.push_back({a, a, a});
    for (const auto& p : pairs) {
      entries.push_back({p.a, p.b, p.result});
      if (p.a != p.b) entries.push_back({p.b, p.a, p.result});
    }
    return Cas(std::move(names), entries);
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Action a) const {
    check_index(a);
    return names_[a];
  }
  std::optional<Action> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Action action(std::string_view name) const {
    if (auto a = find(name)) return *a;
    throw std::domain_error("unknown action '" + std::string(name) + "'");
  }

  bool composable(Action a, Action b) const {
    check_index(a);
    check_index(b);
    return composable_[at(a, b)] != 0;
  }

  std::optional<Action> result(Action a, Action b) const {
    if (!composable(a, b) || result_[at(a, b)] == kNone) return std::nullopt;
    return static_cast<Action>(result_[at(a, b)]);
  }

  Action compose(Action a, Action b) const {
    if (auto r = result(a, b)) return *r;
    throw IncomposableError(a, b, "actions '" + name(a) + "' and '" + name(b) + "' are not composable");
  }

  /// Capture preorder: a is captured by b iff a o c and a [] c = b for some c.
  bool captures(Action a, Action b) const {
    check_index(a);
    check_index(b);
    return captures_[at(a, b)] != 0;
  }

  /// Unordered composable pairs (a <= b) that have a result.
  std::vector<Composition> compositions() const {
    std::vector<Composition> out;
    for (Action a = 0; a < size(); ++a)
      for (Action b = a; b < size(); ++b)
        if (auto r = result(a, b)) out.push_back({a, b, *r});
    return out;
  }

  /// Exhaustive check of the action-system axioms, O(n^3).
  ValidationReport validate() const {
    using K = CasViolation::Kind;
    ValidationReport report;
    const auto n = static_cast<Action>(size());
    for (Action a = 0; a < n; ++a) {
      if (!composable_[at(a, a)])
        report.violations.push_back({K::Reflexivity, {a}});
      else if (result_[at(a, a)] != kNone && result_[at(a, a)] != a)
        report.violations.push_back({K::Idempotency, {a}});
    }
    for (Action a = 0; a < n; ++a)
      for (Action b = 0; b < n; ++b)
        if (composable_[at(a, b)] && result_[at(a, b)] == kNone) report.violations.push_back({K::DanglingComposition, {a, b}});
    for (Action a = 0; a < n; ++a)
      for (Action b = a + 1; b < n; ++b) {
        bool ab = composable_[at(a, b)], ba = composable_[at(b, a)];
        if (ab != ba) {
          report.violations.push_back({K::Symmetry, ab ? std::vector<Action>{a, b} : std::vector<Action>{b, a}});
        } else if (ab && result_[at(a, b)] != kNone && result_[at(b, a)] != kNone && result_[at(a, b)] != result_[at(b, a)]) {
          report.violations.push_back({K::Commutativity, {a, b}});
        }
      }
    // (p o q and (p[]q) o r) iff (q o r and p o (q[]r)); then the results agree.
    for (Action p = 0; p < n; ++p)
      for (Action q = 0; q < n; ++q)
        for (Action r = 0; r < n; ++r) {
          auto pq = result(p, q);
          auto qr = result(q, r);
          if ((composable(p, q) && !pq) || (composable(q, r) && !qr)) continue;  // reported as dangling
          bool left = pq && composable(*pq, r);
          bool right = qr && composable(p, *qr);
          if (left && !result(*pq, r)) continue;
          if (right && !result(p, *qr)) continue;
          if (left != right || (left && *result(*pq, r) != *result(p, *qr)))
            report.violations.push_back({K::Associativity, {p, q, r}});
        }
    return report;
  }

  /// Witnesses (a, b, c) against the two parts of the incomposability property:
  /// a o b, not a o c  implies  not (a[]b) o c;  and
  /// not a o c, a captured by b  implies  not b o c.
  std::vector<std::array<Action, 3>> incomposability_violations() const {
    std::vector<std::array<Action, 3>> out;
    const auto n = static_cast<Action>(size());
    for (Action a = 0; a < n; ++a)
      for (Action b = 0; b < n; ++b)
        for (Action c = 0; c < n; ++c) {
          if (composable(a, c)) continue;
          auto ab = result(a, b);
          if (ab && composable(*ab, c)) out.push_back({a, b, c});
          else if (captures(a, b) && composable(b, c)) out.push_back({a, b, c});
        }
    return out;
  }

  /// Witnesses (a) or (a, b, c) against reflexivity/transitivity of capture.
  std::vector<std::vector<Action>> preorder_violations() const {
    std::vector<std::vector<Action>> out;
    const auto n = static_cast<Action>(size());
    for (Action a = 0; a < n; ++a)
      if (!captures(a, a)) out.push_back({a});
    for (Action a = 0; a < n; ++a)
      for (Action b = 0; b < n; ++b)
        for (Action c = 0; c < n; ++c)
          if (captures(a, b) && captures(b, c) && !captures(a, c)) out.push_back({a, b, c});
    return out;
  }

  friend bool operator==(const Cas& x, const Cas& y) {
    return x.names_ == y.names_ && x.composable_ == y.composable_ && x.result_ == y.result_;
  }

 private:
  static constexpr std::int64_t kNone = -1;

  std::size_t at(Action a, Action b) const { return static_cast<std::size_t>(a) * names_.size() + b; }
  void check_index(Action a) const {
    if (a >= names_.size()) throw std::domain_error("action index " + std::to_string(a) + " out of range");
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, Action> index_;
  std::vector<char> composable_;
  std::vector<std::int64_t> result_;
  std::vector<char> captures_;
};

inline std::vector<std::string> ValidationReport::describe(const Cas& cas) const {
  std::vector<std::string> out;
  for (const auto& v : violations) {
    std::string line = to_string(v.kind);
    line += ":";
    for (auto a : v.witness) line += " " + cas.name(a);
    out.push_back(std::move(line));
  }
  return out;
}

struct ClosureResult {
  Cas cas;
  ValidationReport report;
};

/// Builds an action system from generator compositions.
///
/// The relation is made reflexive and symmetric and, when `transitive` is
/// set, transitively closed. Pairs and results forced by associativity and
/// idempotency are added until a fixpoint is reached. A pair that ends up
/// composable without a determined result raises UnderSpecifiedError.
inline ClosureResult close_cas(std::vector<std::string> names, std::span<const Cas::Composition> generators,
                               bool transitive) {
  const std::size_t n = names.size();
  constexpr std::int64_t none = -1;
  std::vector<char> rel(n * n, 0);
  std::vector<std::int64_t> res(n * n, none);
  auto at = [n](std::size_t a, std::size_t b) { return a * n + b; };
  bool changed = false;
  auto link = [&](std::size_t a, std::size_t b) {
    if (!rel[at(a, b)]) {
      rel[at(a, b)] = rel[at(b, a)] = 1;
      changed = true;
    }
  };
  auto assign = [&](std::size_t a, std::size_t b, std::int64_t r) {
    link(a, b);
    if (res[at(a, b)] == none) {
      res[at(a, b)] = res[at(b, a)] = r;
      changed = true;
    }
  };
  for (std::size_t a = 0; a < n; ++a) assign(a, a, static_cast<std::int64_t>(a));
  for (const auto& g : generators) {
    if (g.a >= n || g.b >= n || g.result >= n) throw std::invalid_argument("generator refers to an unknown action");
    if (res[at(g.a, g.b)] != none && res[at(g.a, g.b)] != g.result)
      throw std::invalid_argument("conflicting results for '" + names[g.a] + "' and '" + names[g.b] + "'");
    assign(g.a, g.b, g.result);
  }
  do {
    changed = false;
    if (transitive) {
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
          if (rel[at(i, k)])
            for (std::size_t j = 0; j < n; ++j)
              if (rel[at(k, j)]) link(i, j);
    }
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t r = 0; r < n; ++r) {
          // p o q and (p[]q) o r force q o r and p o (q[]r), with equal results
          if (auto s = res[at(p, q)]; s != none && rel[at(s, r)]) {
            link(q, r);
            auto u = res[at(s, r)];
            auto v = res[at(q, r)];
            if (u != none && v != none) assign(p, v, u);
          }
          // and conversely
          if (auto v = res[at(q, r)]; v != none && rel[at(p, v)]) {
            link(p, q);
            auto u = res[at(p, v)];
            auto s = res[at(p, q)];
            if (u != none && s != none) assign(s, r, u);
          }
        }
  } while (changed);

  std::vector<std::pair<Action, Action>> missing;
  std::vector<Cas::Composition> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      if (!rel[at(a, b)]) continue;
      if (res[at(a, b)] == none)
        missing.emplace_back(static_cast<Action>(a), static_cast<Action>(b));
      else
        pairs.push_back({static_cast<Action>(a), static_cast<Action>(b), static_cast<Action>(res[at(a, b)])});
    }
  if (!missing.empty()) {
    std::string what = "composability closure leaves pairs without a composition result:";
    for (auto [a, b] : missing) what += " (" + names[a] + ", " + names[b] + ")";
    throw UnderSpecifiedError(std::move(missing), what);
  }
  Cas cas = Cas::symmetric(std::move(names), pairs);
  auto report = cas.validate();
  return {std::move(cas), std::move(report)};
}

}  // namespace softca

#endif  // SOFTCA_CAS_HPP
