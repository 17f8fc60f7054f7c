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

#ifndef SOFTCA_EVALUATE_HPP
#define SOFTCA_EVALUATE_HPP

#include <functional>
#include <stdexcept>
#include <vector>

#include "softca/formula.hpp"
#include "softca/lasso.hpp"

namespace softca {

class UnsupportedConnective : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Decides a captures/composable subformula at a lasso position.
using LiftOracle = std::function<bool(const Formula& lift, const Lasso<Action>& sigma, std::size_t position)>;

namespace detail {

/// Truth value of `f` at every position of the lasso shape. Position p stands
/// for the suffix starting there; until is the least fixpoint of its
/// one-step unfolding.
inline std::vector<char> evaluate_positions(const Formula& f, const Lasso<Action>& sigma, const LiftOracle& lift) {
  using K = Formula::Kind;
  const std::size_t n = sigma.positions();
  std::vector<char> v(n, 0);
  switch (f.kind) {
    case K::Top:
      v.assign(n, 1);
      break;
    case K::Atom:
      for (std::size_t p = 0; p < n; ++p) v[p] = sigma.letter(p) == f.atom;
      break;
    case K::And: {
      auto l = evaluate_positions(*f.lhs, sigma, lift);
      auto r = evaluate_positions(*f.rhs, sigma, lift);
      for (std::size_t p = 0; p < n; ++p) v[p] = l[p] && r[p];
      break;
    }
    case K::Not: {
      auto l = evaluate_positions(*f.lhs, sigma, lift);
      for (std::size_t p = 0; p < n; ++p) v[p] = !l[p];
      break;
    }
    case K::Next: {
      auto l = evaluate_positions(*f.lhs, sigma, lift);
      for (std::size_t p = 0; p < n; ++p) v[p] = l[sigma.next_position(p)];
      break;
    }
    case K::Until: {
      auto l = evaluate_positions(*f.lhs, sigma, lift);
      auto r = evaluate_positions(*f.rhs, sigma, lift);
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t p = n; p-- > 0;) {
          char u = r[p] || (l[p] && v[sigma.next_position(p)]);
          if (u != v[p]) {
            v[p] = u;
            changed = true;
          }
        }
      }
      break;
    }
    case K::Captures:
    case K::Composable:
      if (!lift) throw UnsupportedConnective("the direct evaluator does not support cap/cmp");
      for (std::size_t p = 0; p < n; ++p) v[p] = lift(f, sigma, p);
      break;
  }
  return v;
}

}  // namespace detail

/// Evaluates the semantic rules directly on an eventually periodic stream.
/// Only the fragment without cap/cmp is supported.
inline bool satisfies_direct(const Lasso<Action>& sigma, const Formula& f) {
  return detail::evaluate_positions(f, sigma, nullptr)[0] != 0;
}
inline bool satisfies_direct(const Lasso<Action>& sigma, const FormulaPtr& f) { return satisfies_direct(sigma, *f); }

/// As satisfies_direct, with cap/cmp subformulas delegated to `lift`.
inline bool satisfies_with(const Lasso<Action>& sigma, const Formula& f, const LiftOracle& lift) {
  return detail::evaluate_positions(f, sigma, lift)[0] != 0;
}

}  // namespace softca

#endif  // SOFTCA_EVALUATE_HPP
