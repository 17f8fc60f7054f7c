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

#ifndef SOFTCA_REPORT_HPP
#define SOFTCA_REPORT_HPP

#include <string>

#include "softca/diagnostics.hpp"
#include "softca/modelcheck.hpp"
#include "softca/system.hpp"

namespace softca {

template <CSemiring S>
json thresholds_json(const SystemOver<S>& sys, const Sca<S>& a) {
  json factors = json::object();
  for (const auto& f : a.factors()) factors[f.label] = sys.value_json(f.threshold);
  return json{{"threshold", sys.value_json(a.threshold())}, {"factors", factors}};
}

inline json build_log_json(const BuildLog& log) {
  json out = json::array();
  for (const auto& e : log.entries) out.push_back({{"stage", e.stage}, {"states", e.states}, {"transitions", e.transitions}});
  return out;
}

/// Machine-readable record of a model-checking run. Wall time is included
/// only on request so that reports are reproducible byte for byte.
template <CSemiring S>
json verdict_report(const SystemOver<S>& sys, const Sca<S>& a, const std::string& automaton, const FormulaPtr& f,
                    const std::string& formula, const Verdict& v, bool timing = false) {
  json j{{"automaton", automaton},
         {"formula", formula},
         {"formula_text", to_string(f, *sys.cas)},
         {"thresholds", thresholds_json(sys, a)},
         {"verdict", v.holds() ? "holds" : "fails"},
         {"counterexample", v.counterexample ? sys.lasso_json(*v.counterexample) : json(nullptr)},
         {"automata", build_log_json(v.log)}};
  if (timing) j["wall_time_ms"] = v.elapsed.count() * 1000.0;
  return j;
}

template <CSemiring S>
json diagnostic_report(const SystemOver<S>& sys, const Sca<S>& a, const Lasso<Action>& sigma,
                       const DiagnosticTrace<ValueOf<S>>& tr) {
  json steps = json::array();
  for (std::size_t n = 0; n < tr.sums.size(); ++n) {
    json q = json::array();
    for (State s : tr.state_sets[n]) q.push_back(a.state_name(s));
    steps.push_back({{"n", n}, {"action", sys.cas->name(sigma[n])}, {"states", q}, {"sum", sys.value_json(tr.sums[n])}});
  }
  return json{{"lasso", sys.lasso_json(sigma)},
              {"steps", steps},
              {"loop_start", tr.loop_start ? json(*tr.loop_start) : json(nullptr)},
              {"exhausted", tr.exhausted},
              {"d", sys.value_json(tr.value)},
              {"thresholds", thresholds_json(sys, a)},
              {"threshold_bound_holds", leq(a.semiring(), a.threshold(), tr.value)},
              {"accepted", accepts(a, sigma)}};
}

template <CSemiring S>
json suspect_report(const SystemOver<S>& sys, const SuspectResult<ValueOf<S>>& r) {
  json minimal = json::array();
  for (auto m : r.minimal) minimal.push_back(r.names(m));
  json innocent = json::array();
  for (std::size_t i = 0; i < r.labels.size(); ++i)
    if (r.innocent(Subset{1} << i)) innocent.push_back(r.labels[i]);
  json ts = json::object();
  for (std::size_t i = 0; i < r.labels.size(); ++i) ts[r.labels[i]] = sys.value_json(r.thresholds[i]);
  return json{{"components", r.labels}, {"thresholds", ts}, {"d", sys.value_json(r.d)}, {"minimal_suspects", minimal},
              {"innocent", innocent}};
}

}  // namespace softca

#endif  // SOFTCA_REPORT_HPP
