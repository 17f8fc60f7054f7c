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

#ifndef SOFTCA_COMPILE_HPP
#define SOFTCA_COMPILE_HPP

#include <map>
#include <string>

#include "softca/buchi.hpp"
#include "softca/complement.hpp"
#include "softca/evaluate.hpp"
#include "softca/formula.hpp"

namespace softca {

namespace detail {

class Compiler {
 public:
  Compiler(const Cas& cas, const Limits& limits, BuildLog* log) : cas_(cas), limits_(limits), log_(log) {}

  Ba run(const Formula& f) {
    using K = Formula::Kind;
    auto key = to_string(f, cas_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::size_t n = cas_.size();
    Ba out;
    switch (f.kind) {
      case K::Top: out = universal_ba(n); break;
      case K::Atom: out = atom_ba(f.atom, n); break;
      case K::And: out = reduce(stage("intersect", intersect(run(*f.lhs), run(*f.rhs), limits_))); break;
      case K::Until: out = reduce(stage("until", dealternate(until_aba(run(*f.lhs), run(*f.rhs)), limits_))); break;
      case K::Next: out = next_ba(run(*f.lhs)); break;
      case K::Captures: out = reduce(capture_lift(run(*f.lhs), cas_)); break;
      case K::Composable: out = reduce(composable_lift(run(*f.lhs), cas_)); break;
      case K::Not: {
        const auto& g = *f.lhs;
        // negation is pushed through the connectives where this is exact
        if (g.kind == K::Not) out = run(*g.lhs);
        else if (g.kind == K::Top) out = empty_ba(n);
        else if (g.kind == K::Atom) out = not_atom_ba(g.atom, n);
        else if (g.kind == K::Next) out = next_ba(run(*neg(g.lhs)));
        else if (g.kind == K::And) out = reduce(union_ba(run(*neg(g.lhs)), run(*neg(g.rhs))));
        else if (g.kind == K::Until)
          out = reduce(stage("release", dealternate(release_aba(run(*neg(g.lhs)), run(*neg(g.rhs))), limits_)));
        else out = stage("complement", complement(run(g), limits_));
        break;
      }
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  Ba stage(const char* name, Ba a) {
    if (log_) log_->record(name, a);
    return a;
  }

  const Cas& cas_;
  const Limits& limits_;
  BuildLog* log_;
  std::map<std::string, Ba> memo_;
};

}  // namespace detail

/// Buchi automaton accepting exactly the streams satisfying `f`, built
/// recursively over the formula.
inline Ba compile(const Formula& f, const Cas& cas, const Limits& limits = {}, BuildLog* log = nullptr) {
  return detail::Compiler(cas, limits, log).run(f);
}
inline Ba compile(const FormulaPtr& f, const Cas& cas, const Limits& limits = {}, BuildLog* log = nullptr) {
  return compile(*f, cas, limits, log);
}

/// sigma |= f, decided by membership in the compiled automaton.
inline bool satisfies(const Lasso<Action>& sigma, const FormulaPtr& f, const Cas& cas, const Limits& limits = {}) {
  return member(compile(f, cas, limits), sigma);
}

/// Streams b with b(n) related to sigma(k + n) for all n, as an automaton
/// following the lasso shape.
template <class Rel>
Ba lasso_neighbourhood(const Lasso<Action>& sigma, std::size_t k, std::size_t alphabet, Rel&& related) {
  const auto tail = sigma.shift(k);
  Ba out(alphabet);
  for (std::size_t p = 0; p < tail.positions(); ++p) out.add_state(true);
  for (std::size_t p = 0; p < tail.positions(); ++p)
    for (Action b = 0; b < alphabet; ++b)
      if (related(b, tail.letter(p))) out.add_edge(static_cast<State>(p), b, static_cast<State>(tail.next_position(p)));
  out.set_initial(0);
  return std::move(out.finish());
}

/// Lift oracle that decides cap/cmp at a position by an emptiness check on
/// the stream's neighbourhood: cap g holds at k iff some stream pointwise
/// captured by sigma^(k) satisfies g; cmp g iff some stream pointwise
/// composable with sigma^(k) does.
inline LiftOracle neighbourhood_oracle(const Cas& cas, const Limits& limits = {}) {
  return [&cas, limits](const Formula& lift, const Lasso<Action>& sigma, std::size_t k) {
    Ba inner = compile(*lift.lhs, cas, limits);
    Ba around = lift.kind == Formula::Kind::Captures
                    ? lasso_neighbourhood(sigma, k, cas.size(), [&](Action b, Action s) { return cas.captures(b, s); })
                    : lasso_neighbourhood(sigma, k, cas.size(), [&](Action b, Action s) { return cas.composable(b, s); });
    return has_accepting_run(intersect(around, inner, limits));
  };
}

/// sigma |= f by direct evaluation, with cap/cmp decided per position by
/// the neighbourhood oracle. Independent of capture_lift/composable_lift at
/// the outermost lift.
inline bool satisfies_hybrid(const Lasso<Action>& sigma, const FormulaPtr& f, const Cas& cas, const Limits& limits = {}) {
  return satisfies_with(sigma, *f, neighbourhood_oracle(cas, limits));
}

}  // namespace softca

#endif  // SOFTCA_COMPILE_HPP
