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

#ifndef SOFTCA_MODELCHECK_HPP
#define SOFTCA_MODELCHECK_HPP

#include <chrono>
#include <optional>
#include <stdexcept>

#include "softca/compile.hpp"
#include "softca/sca.hpp"

namespace softca {

struct Verdict {
  std::optional<Lasso<Action>> counterexample;
  BuildLog log;
  std::chrono::duration<double> elapsed{};

  bool holds() const { return !counterexample.has_value(); }
};

/// Raised when a counterexample does not survive re-verification.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Decides A |= f: every behaviour of A satisfies f. On failure the returned
/// lasso is re-checked to be a behaviour of A that violates f.
template <CSemiring S>
Verdict check(const Sca<S>& a, const FormulaPtr& f, const Limits& limits = {}) {
  auto start = std::chrono::steady_clock::now();
  Verdict v;
  Ba system = to_ba(a);
  v.log.record("system", system);
  Ba negation = compile(*neg(f), a.cas(), limits, &v.log);
  v.log.record("negation", negation);
  Ba product = intersect(system, negation, limits);
  v.log.record("product", product);
  v.counterexample = find_accepted(product);
  if (v.counterexample) {
    if (!accepts(a, *v.counterexample) || !member(system, *v.counterexample))
      throw VerificationFailure("counterexample is not a behaviour of the automaton");
    if (satisfies_hybrid(*v.counterexample, f, a.cas(), limits))
      throw VerificationFailure("counterexample satisfies the formula");
  }
  v.elapsed = std::chrono::steady_clock::now() - start;
  return v;
}

/// A |= !cmp !f: every stream composable with a behaviour of A satisfies f.
template <CSemiring S>
Verdict check_interface(const Sca<S>& a, const FormulaPtr& f, const Limits& limits = {}) {
  return check(a, neg(cmp(neg(f))), limits);
}

}  // namespace softca

#endif  // SOFTCA_MODELCHECK_HPP
