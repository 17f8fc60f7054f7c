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


#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "support.hpp"

namespace softca {
namespace {

using testing::member_oracle;

Lasso<Action> lasso(std::vector<Action> p, std::vector<Action> c) { return Lasso<Action>(std::move(p), std::move(c)); }

/// Nonemptiness by boolean reachability closure.
bool nonempty_oracle(const Ba& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (State s = 0; s < n; ++s)
    for (const auto& e : a.edges(s)) r[s][e.to] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  for (State f = 0; f < n; ++f)
    if (a.accepting(f) && r[f][f] && (f == a.initial() || r[a.initial()][f])) return true;
  return false;
}

TEST(Atom, FirstLetterOnly) {
  Ba a = atom_ba(0, 3);
  EXPECT_TRUE(member(a, lasso({0, 1}, {1})));
  EXPECT_FALSE(member(a, lasso({}, {1})));
  EXPECT_TRUE(member(a, lasso({}, {0})));
}

TEST(Atom, ExactActionWithoutCapture) {
  Cas cas = testing::drone_cas();
  Ba a = atom_ba(cas.action("move"), cas.size());
  EXPECT_FALSE(member(a, lasso({}, {cas.action("move2")})));
}

TEST(Intersect, Trivial) {
  EXPECT_TRUE(member(intersect(atom_ba(0, 2), atom_ba(0, 2)), lasso({}, {0})));
  EXPECT_FALSE(find_accepted(intersect(atom_ba(0, 2), atom_ba(1, 2))).has_value());
}

TEST(Intersect, RandomAgreesWithConjunction) {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    Ba a = testing::random_ba(rng, 4, 2), b = testing::random_ba(rng, 4, 2);
    Ba c = intersect(a, b);
    EXPECT_LE(c.size(), 2 * a.size() * b.size());
    auto s = testing::random_lasso(rng, 2, 4, 4);
    EXPECT_EQ(member(c, s), member_oracle(a, s) && member_oracle(b, s));
  }
}

TEST(Member, AgreesWithOracle) {
  std::mt19937 rng(6);
  for (int i = 0; i < 300; ++i) {
    Ba a = testing::random_ba(rng, 5, 2);
    auto s = testing::random_lasso(rng, 2, 4, 4);
    EXPECT_EQ(member(a, s), member_oracle(a, s));
  }
}

TEST(Until, AtomUntilAtom) {
  // letters a=0, b=1, c=2
  Ba u = dealternate(until_aba(atom_ba(0, 3), atom_ba(1, 3)));
  EXPECT_TRUE(member(u, lasso({0, 0, 1}, {2})));
  EXPECT_FALSE(member(u, lasso({}, {0})));
  EXPECT_TRUE(member(u, lasso({1}, {2})));
  EXPECT_FALSE(member(u, lasso({0, 2, 1}, {2})));
}

TEST(Until, RandomAgreesWithDirectSemantics) {
  std::mt19937 rng(8);
  for (int i = 0; i < 200; ++i) {
    auto f = testing::random_formula(rng, 2, 1);
    auto g = testing::random_formula(rng, 2, 1);
    Ba u = dealternate(until_aba(compile(f, Cas::symmetric({"p", "q"}, {})), compile(g, Cas::symmetric({"p", "q"}, {}))));
    auto s = testing::random_lasso(rng, 2, 6, 6);
    EXPECT_EQ(member(u, s), satisfies_direct(s, until(f, g)));
  }
}

TEST(Until, PivotStructure) {
  Aba u = until_aba(atom_ba(0, 2), atom_ba(1, 2));
  EXPECT_EQ(u.size(), 5u);
  EXPECT_EQ(u.initial(), 4u);
  EXPECT_FALSE(u.accepting(4));
  bool branch = false;
  for (const auto& t : u.transitions(4)) branch = branch || t.to.size() == 2;
  EXPECT_TRUE(branch);
}

TEST(Release, RandomAgreesWithDirectSemantics) {
  std::mt19937 rng(16);
  Cas cas = Cas::symmetric({"p", "q"}, {});
  for (int i = 0; i < 200; ++i) {
    auto f = testing::random_formula(rng, 2, 1);
    auto g = testing::random_formula(rng, 2, 1);
    Ba r = dealternate(release_aba(compile(f, cas), compile(g, cas)));
    auto s = testing::random_lasso(rng, 2, 6, 6);
    // f R g is !(!f U !g)
    EXPECT_EQ(member(r, s), satisfies_direct(s, neg(until(neg(f), neg(g)))));
  }
}

TEST(Union, AgreesWithDisjunction) {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    Ba a = testing::random_ba(rng, 4, 2), b = testing::random_ba(rng, 4, 2);
    auto s = testing::random_lasso(rng, 2, 4, 4);
    EXPECT_EQ(member(union_ba(a, b), s), member_oracle(a, s) || member_oracle(b, s));
  }
  EXPECT_TRUE(member(not_atom_ba(0, 3), lasso({1}, {0})));
  EXPECT_FALSE(member(not_atom_ba(0, 3), lasso({0}, {1})));
}

TEST(Next, ShiftsByOne) {
  Ba x = next_ba(atom_ba(0, 3));
  EXPECT_TRUE(member(x, lasso({1, 0}, {2})));
  EXPECT_FALSE(member(x, lasso({0, 1}, {2})));
}

TEST(Next, IteratedNextShifts) {
  std::mt19937 rng(9);
  Ba x = atom_ba(1, 2);
  for (int k = 0; k < 5; ++k) x = next_ba(x);
  for (int i = 0; i < 200; ++i) {
    auto s = testing::random_lasso(rng, 2, 6, 6);
    EXPECT_EQ(member(x, s), s[5] == 1);
  }
}

TEST(Lift, CaptureLiftDrone) {
  Cas cas = testing::drone_cas();
  Ba c = capture_lift(atom_ba(cas.action("move"), cas.size()), cas);
  EXPECT_TRUE(member(c, lasso({}, {cas.action("move2")})));
  EXPECT_FALSE(member(c, lasso({}, {cas.action("charge")})));
}

TEST(Lift, ComposableLiftDrone) {
  Cas cas = testing::drone_cas();
  Ba c = composable_lift(atom_ba(cas.action("charge"), cas.size()), cas);
  EXPECT_TRUE(member(c, lasso({}, {cas.action("pass")})));
  EXPECT_FALSE(member(c, lasso({cas.action("move")}, {cas.action("pass")})));
}

TEST(Lift, IdentityRelationLeavesLanguage) {
  Cas id = Cas::symmetric({"a", "b"}, {});
  std::mt19937 rng(10);
  for (int i = 0; i < 100; ++i) {
    Ba a = testing::random_ba(rng, 4, 2);
    auto s = testing::random_lasso(rng, 2, 3, 3);
    EXPECT_EQ(member(capture_lift(a, id), s), member(a, s));
    EXPECT_EQ(member(composable_lift(a, id), s), member(a, s));
  }
}

TEST(Lift, RandomAgreesWithWitnessSearch) {
  std::mt19937 rng(12);
  for (int i = 0; i < 200; ++i) {
    Cas cas = testing::random_valid_cas(rng, 3);
    Ba a = testing::random_ba(rng, 3, cas.size());
    auto s = testing::random_lasso(rng, cas.size(), 6, 6);
    // sigma is in the lift iff some tau related pointwise to sigma is in a
    auto cap_n = lasso_neighbourhood(s, 0, cas.size(), [&](Action b, Action x) { return cas.captures(b, x); });
    auto cmp_n = lasso_neighbourhood(s, 0, cas.size(), [&](Action b, Action x) { return cas.composable(b, x); });
    EXPECT_EQ(member(capture_lift(a, cas), s), nonempty_oracle(intersect(cap_n, a)));
    EXPECT_EQ(member(composable_lift(a, cas), s), nonempty_oracle(intersect(cmp_n, a)));
  }
}

TEST(Dealternate, EmbeddedBaKeepsLanguage) {
  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    Ba a = testing::random_ba(rng, 4, 2);
    Ba d = dealternate(embed(a));
    auto s = testing::random_lasso(rng, 2, 4, 4);
    EXPECT_EQ(member(d, s), member_oracle(a, s));
  }
}

TEST(Dealternate, EmptyDestinationAccepts) {
  // q0 --a--> {} : a branch that ends has nothing left to prove
  Aba x(2);
  State q0 = x.add_state(false);
  x.add_transition(q0, 0, {});
  x.set_initial(q0);
  x.finish();
  Ba d = dealternate(x);
  EXPECT_TRUE(member(d, lasso({0}, {1})));
  EXPECT_TRUE(member(d, lasso({}, {0})));
  EXPECT_FALSE(member(d, lasso({1}, {0})));
}

TEST(Dealternate, UniversalBranching) {
  // q0 --a--> {q1, q2}: q1 demands b forever after, q2 demands a b soon
  Aba x(2);
  State q0 = x.add_state(false), q1 = x.add_state(true), q2 = x.add_state(false), q3 = x.add_state(true);
  x.add_transition(q0, 0, {q1, q2});
  x.add_transition(q1, 1, {q1});
  x.add_transition(q2, 1, {q3});
  x.add_transition(q3, 0, {q3});
  x.add_transition(q3, 1, {q3});
  x.set_initial(q0);
  x.finish();
  Ba d = dealternate(x);
  EXPECT_TRUE(member(d, lasso({0}, {1})));
  EXPECT_FALSE(member(d, lasso({0, 1}, {0})));
  EXPECT_FALSE(member(d, lasso({}, {1})));
}

TEST(Emptiness, CanonicalWitness) {
  auto w = find_accepted(atom_ba(1, 3));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, lasso({1}, {0}));
  EXPECT_EQ(*find_accepted(atom_ba(0, 3)), lasso({}, {0}));
  EXPECT_FALSE(find_accepted(empty_ba(2)));
}

TEST(Emptiness, UnreachableAcceptingState) {
  Ba a(1);
  State q0 = a.add_state(false), q1 = a.add_state(true);
  a.add_edge(q0, 0, q0);
  a.add_edge(q1, 0, q1);
  a.set_initial(q0);
  a.finish();
  EXPECT_FALSE(find_accepted(a));
  EXPECT_FALSE(has_accepting_run(a));
}

TEST(Emptiness, AgreesWithExhaustiveSearch) {
  std::mt19937 rng(14);
  for (int i = 0; i < 200; ++i) {
    Ba a = testing::random_ba(rng, 5, 2, 0.2);
    auto w = find_accepted(a);
    EXPECT_EQ(w.has_value(), has_accepting_run(a));
    EXPECT_EQ(w.has_value(), nonempty_oracle(a));
    bool found = false;
    for (const auto& s : testing::all_lassos(2, a.size(), a.size()))
      if (member(a, s)) {
        found = true;
        break;
      }
    EXPECT_EQ(w.has_value(), found);
    if (w) {
      EXPECT_TRUE(member_oracle(a, *w));
      EXPECT_LE(w->prefix().size(), a.size());
      EXPECT_LE(w->cycle().size(), a.size());
      EXPECT_EQ(*w, *find_accepted(a));
    }
  }
}

TEST(Reduce, KeepsLanguage) {
  std::mt19937 rng(15);
  for (int i = 0; i < 200; ++i) {
    Ba a = testing::random_ba(rng, 5, 2);
    Ba r = reduce(a);
    EXPECT_LE(r.size(), a.size());
    auto s = testing::random_lasso(rng, 2, 4, 4);
    EXPECT_EQ(member(r, s), member_oracle(a, s));
  }
}

TEST(Capacity, IntersectNamesStage) {
  Limits tiny{2};
  try {
    intersect(atom_ba(0, 2), next_ba(atom_ba(1, 2)), tiny);
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.stage(), "intersect");
  }
}

TEST(Hoa, Dump) {
  std::ostringstream os;
  write_hoa(os, atom_ba(0, 2), {"a", "b"}, "atom");
  auto s = os.str();
  EXPECT_NE(s.find("HOA: v1"), std::string::npos);
  EXPECT_NE(s.find("States: 2"), std::string::npos);
  EXPECT_NE(s.find("AP: 2 \"a\" \"b\""), std::string::npos);
  EXPECT_NE(s.find("[0&!1] 1"), std::string::npos);
  EXPECT_NE(s.find("--END--"), std::string::npos);
}

}  // namespace
}  // namespace softca
