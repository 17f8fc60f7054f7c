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


#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

namespace softca {
namespace {

using testing::WSca;

const SystemOver<WeightedSemiring>& drone_system() {
  static const auto sys = std::get<SystemOver<WeightedSemiring>>(load_system_file(SOFTCA_MODELS_DIR "/drone.json"));
  return sys;
}

WSca es_at(Weight total) { return drone_system().automaton("e_s").with_threshold(total); }

TEST(Check, CaptureFormulaHoldsAtFive) {
  const auto& sys = drone_system();
  auto v = check(sys.automaton("e_s").with_factor_thresholds({Weight(4), Weight(1)}), sys.formula("phi_w"));
  EXPECT_TRUE(v.holds());
  EXPECT_FALSE(v.log.entries.empty());
}

TEST(Check, CaptureFormulaFailsAtSeven) {
  const auto& sys = drone_system();
  auto a = sys.automaton("e_s").with_factor_thresholds({Weight(6), Weight(1)});
  auto v = check(a, sys.formula("phi_w"));
  ASSERT_FALSE(v.holds());
  // the shortest witness: a move2 is captured again before any snapshot
  EXPECT_EQ(*v.counterexample, sys.lasso("move_charge"));
  EXPECT_TRUE(accepts(a, *v.counterexample));
  EXPECT_FALSE(satisfies(*v.counterexample, sys.formula("phi_w"), *sys.cas));
  const auto& adjacent = sys.lasso("cex_phi_w");
  EXPECT_TRUE(adjacent.prefix().empty());
  EXPECT_EQ(adjacent.cycle().size(), 6u);
  EXPECT_TRUE(accepts(a, adjacent));
  EXPECT_TRUE(member(to_ba(a), adjacent));
  EXPECT_FALSE(satisfies(adjacent, sys.formula("phi_w"), *sys.cas));
  EXPECT_FALSE(satisfies_hybrid(adjacent, sys.formula("phi_w"), *sys.cas));
}

TEST(Check, MonotoneInThreshold) {
  const auto& sys = drone_system();
  bool failed = false;
  for (int t : {0, 1, 2, 4, 5, 6, 7, 9, 11}) {
    bool holds = check(es_at(Weight(t)), sys.formula("phi_w")).holds();
    if (failed) {
      EXPECT_FALSE(holds) << t;
    }
    failed = failed || !holds;
    EXPECT_EQ(holds, t < 7) << t;
  }
}

TEST(Check, LiteralCaptureFormulaIsVacuous) {
  const auto& sys = drone_system();
  const auto& f = sys.formula("phi_w_literal");
  for (int t : {5, 7, 11}) EXPECT_TRUE(check(es_at(Weight(t)), f).holds());
  EXPECT_TRUE(satisfies(sys.lasso("cex_phi_w"), f, *sys.cas));
}

TEST(Check, EmptyLanguageSatisfiesEverything) {
  const auto& sys = drone_system();
  auto a = es_at(Weight(0));
  EXPECT_FALSE(find_accepted(to_ba(a)));
  std::mt19937 rng(51);
  for (int i = 0; i < 20; ++i) EXPECT_TRUE(check(a, testing::random_formula(rng, sys.cas->size(), 3, true)).holds());
  EXPECT_TRUE(check(a, neg(top())).holds());
}

TEST(Check, CounterexamplesAreSound) {
  const auto& sys = drone_system();
  std::mt19937 rng(52);
  int fails = 0;
  for (int i = 0; i < 60; ++i) {
    auto f = testing::random_formula(rng, sys.cas->size(), 2, true);
    auto a = es_at(Weight(static_cast<int>(rng() % 12)));
    auto v = check(a, f);
    if (!v.holds()) {
      ++fails;
      EXPECT_TRUE(accepts(a, *v.counterexample));
      EXPECT_FALSE(satisfies(*v.counterexample, f, *sys.cas));
    } else {
      Ba b = to_ba(a);
      for (int k = 0; k < 5; ++k)
        if (auto s = testing::random_run(rng, b)) {
          EXPECT_TRUE(satisfies(*s, f, *sys.cas));
        }
    }
  }
  EXPECT_GT(fails, 10);
}

/// Longest run of admissible non-charge transitions in the energy component.
std::size_t longest_discharge(const WSca& e) {
  std::vector<std::size_t> memo(e.size(), 0);
  std::vector<char> done(e.size(), 0);
  std::function<std::size_t(State)> go = [&](State q) -> std::size_t {
    if (done[q]) return memo[q];
    std::size_t best = 0;
    for (auto i : e.outgoing(q)) {
      const auto& t = e.transitions()[i];
      if (e.admissible(t) && e.cas().name(t.action) != "charge") best = std::max(best, 1 + go(t.to));
    }
    done[q] = 1;
    return memo[q] = best;
  };
  std::size_t best = 0;
  for (State q : reachable(e)) best = std::max(best, go(q));
  return best;
}

TEST(Check, ChargeWindowPinned) {
  const auto& sys = drone_system();
  for (int t : {0, 1, 2, 4, 5, 6, 10, 100}) {
    auto e = sys.automaton("e").with_threshold(Weight(t));
    bool oracle = longest_discharge(e) < 5;
    auto v = check(e, sys.formula("phi_c"));
    EXPECT_EQ(v.holds(), oracle) << t;
    EXPECT_TRUE(v.holds()) << t;
    EXPECT_EQ(check_interface(e, sys.formula("phi_c_body")).holds(), v.holds()) << t;
  }
}

TEST(Check, ChargeWindowFailsWithoutRecharging) {
  // the same body fails for an energy component that can discharge forever
  const auto& sys = drone_system();
  auto cas = sys.cas;
  WSca e(WeightedSemiring{}, cas, {"q"}, 0, Weight(5), {{0, cas->action("discharge1"), Weight(1), 0}}, "e");
  auto v = check(e, sys.formula("phi_c"));
  ASSERT_FALSE(v.holds());
  EXPECT_EQ(sys.format(*v.counterexample), "<discharge1>^w");
}

TEST(CheckInterface, TopHolds) {
  EXPECT_TRUE(check_interface(es_at(Weight(11)), top()).holds());
}

TEST(Report, FailureRecord) {
  const auto& sys = drone_system();
  auto a = sys.automaton("e_s").with_factor_thresholds({Weight(6), Weight(1)});
  auto v = check(a, sys.formula("phi_w"));
  auto r = verdict_report(sys, a, "e_s", sys.formula("phi_w"), "phi_w", v);
  EXPECT_EQ(r["verdict"], "fails");
  EXPECT_EQ(r["counterexample"]["prefix"].size(), 0u);
  EXPECT_EQ(r["counterexample"]["cycle"].size(), 3u);
  EXPECT_EQ(r["counterexample"]["cycle"][0], "move2");
  EXPECT_EQ(r["thresholds"]["threshold"], 7);
  EXPECT_EQ(r["thresholds"]["factors"]["e"], 6);
  EXPECT_FALSE(r.contains("wall_time_ms"));
  EXPECT_GE(r["automata"].size(), 3u);
  for (const auto& e : r["automata"]) EXPECT_LE(e["states"].get<std::size_t>(), 100000u);
  EXPECT_TRUE(verdict_report(sys, a, "e_s", sys.formula("phi_w"), "phi_w", v, true).contains("wall_time_ms"));
}

TEST(Report, HoldsRecord) {
  const auto& sys = drone_system();
  auto a = es_at(Weight(5));
  auto v = check(a, sys.formula("phi_w"));
  auto r = verdict_report(sys, a, "e_s", sys.formula("phi_w"), "phi_w", v);
  EXPECT_EQ(r["verdict"], "holds");
  EXPECT_TRUE(r["counterexample"].is_null());
}

TEST(Report, CapacityAbortNamesStage) {
  const auto& sys = drone_system();
  try {
    check(es_at(Weight(7)), cap(next_n(3, atom(sys.cas->action("move")))), Limits{3});
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.stage(), "complement");
  }
}

}  // namespace
}  // namespace softca
