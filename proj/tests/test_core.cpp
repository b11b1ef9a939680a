#include <doctest.h>

#include <string>
#include <vector>

#include "procgame/action.hpp"
#include "procgame/errors.hpp"
#include "procgame/process_expr.hpp"
#include "procgame/transition_system.hpp"
#include "testutil.hpp"

using namespace procgame;

TEST_SUITE("core") {

TEST_CASE("labels: tau, atomic, joint") {
  ActionLabel tau = ActionLabel::tau();
  CHECK(tau.is_tau());
  CHECK(tau.str() == "tau");
  CHECK(tau.arity() == 0);

  ActionLabel m = ActionLabel::atomic("M", 0);
  CHECK(m.is_atomic());
  CHECK(m.name() == "M");
  CHECK(m.owner() == 0);
  CHECK(m.str() == "M");
  CHECK(m.contains_name("M"));
  CHECK_FALSE(m.contains_name("F"));

  ActionLabel r = ActionLabel::atomic("R", 1);
  ActionLabel joint = ActionLabel::joint({r, m});
  CHECK(joint.is_joint());
  CHECK(joint.arity() == 2);
  CHECK(joint.str() == "{M,R}");  // atoms ordered by name
  CHECK(joint.contains_name("M"));
  CHECK(joint.contains_name("R"));
  CHECK_THROWS_AS(joint.name(), Error);
  CHECK_THROWS_AS(joint.owner(), Error);
}

TEST_CASE("labels: joint construction rules") {
  ActionLabel a = ActionLabel::atomic("a", 0);
  ActionLabel b = ActionLabel::atomic("b", 1);
  ActionLabel c = ActionLabel::atomic("c", 2);

  // flattening: a joint part contributes its atoms
  ActionLabel ab = ActionLabel::joint({a, b});
  CHECK(ActionLabel::joint({ab, c}).str() == "{a,b,c}");

  // one atom per player
  ActionLabel a2 = ActionLabel::atomic("x", 0);
  CHECK_THROWS_AS(ActionLabel::joint({a, a2}), Error);
  // at least two parts
  CHECK_THROWS_AS(ActionLabel::joint({a}), Error);
  // no silent step inside a joint move
  CHECK_THROWS_AS(ActionLabel::joint({a, ActionLabel::tau()}), Error);
}

TEST_CASE("labels: subset order") {
  ActionLabel a = ActionLabel::atomic("a", 0);
  ActionLabel b = ActionLabel::atomic("b", 1);
  ActionLabel c = ActionLabel::atomic("c", 2);
  ActionLabel ab = ActionLabel::joint({a, b});
  ActionLabel abc = ActionLabel::joint({a, b, c});

  CHECK(a.subset_of(ab));
  CHECK(a.proper_subset_of(ab));
  CHECK(ab.proper_subset_of(abc));
  CHECK(ab.subset_of(ab));
  CHECK_FALSE(ab.proper_subset_of(ab));
  CHECK_FALSE(ab.subset_of(a));
  CHECK_FALSE(c.subset_of(ab));
}

TEST_CASE("traces print space separated") {
  Trace t{ActionLabel::atomic("Z", 0), ActionLabel::atomic("X", 1)};
  CHECK(trace_str(t) == "Z X");
  CHECK(trace_str(Trace{}) == "");
}

TEST_CASE("builder compacts breadth first from the initial state") {
  TransitionSystemBuilder builder;
  StateId s0 = builder.add_state();
  StateId s1 = builder.add_state();
  StateId orphan = builder.add_state();
  StateId s2 = builder.add_state();
  builder.add_transition(s0, Formula::top(), ActionLabel::atomic("a", 0), s1);
  builder.add_transition(s1, Formula::top(), ActionLabel::atomic("b", 0), s2);
  builder.add_transition(orphan, Formula::top(), ActionLabel::atomic("z", 0), s0);
  builder.set_terminating(s2);

  TransitionSystem ts = builder.build();
  CHECK(ts.state_count() == 3);  // orphan dropped
  CHECK(ts.initial() == 0);
  REQUIRE(ts.outgoing(0).size() == 1);
  CHECK(ts.outgoing(0)[0].action.label.name() == "a");
  CHECK(ts.transition_count() == 2);
  CHECK_FALSE(ts.terminating(0));
  CHECK(ts.terminating(2));
}

TEST_CASE("histories of states") {
  TransitionSystemBuilder builder;
  StateId s0 = builder.add_state();
  StateId s1 = builder.add_state();
  StateId s2 = builder.add_state();
  builder.add_transition(s0, Formula::top(), ActionLabel::atomic("a", 0), s1);
  builder.add_transition(s1, Formula::top(), ActionLabel::atomic("b", 0), s2);
  builder.set_terminating(s2);
  TransitionSystem ts = builder.build();

  CHECK(trace_str(history_of(ts, 0)) == "");
  CHECK(trace_str(history_of(ts, 2)) == "a b");
}

TEST_CASE("a state reachable two ways has no history") {
  TransitionSystemBuilder builder;
  StateId s0 = builder.add_state();
  StateId join = builder.add_state();
  builder.add_transition(s0, Formula::top(), ActionLabel::atomic("a", 0), join);
  builder.add_transition(s0, Formula::top(), ActionLabel::atomic("b", 0), join);
  TransitionSystem ts = builder.build();
  CHECK_THROWS_AS(history_of(ts, 1), AmbiguousHistoryError);
}

TEST_CASE("process expressions print canonically") {
  ProcessExpr a = ProcessExpr::act("a");
  ProcessExpr b = ProcessExpr::act("b");
  ProcessExpr c = ProcessExpr::act("c");
  CHECK(ProcessExpr::choice(a, ProcessExpr::seq(b, c)).str() == "a+b.c");
  CHECK(ProcessExpr::seq(ProcessExpr::choice(a, b), c).str() == "(a+b).c");
  CHECK(ProcessExpr::cond(Formula::mid({"x"}), ProcessExpr::seq(a, b)).str() ==
        "[mid(x)](a.b)");
  CHECK(ProcessExpr::cond(Formula::top(), a).str() == "[true]a");
}

TEST_CASE("expression to system: shapes and state counts") {
  // (a+b).(c+d): both choices funnel through one junction
  ProcessExpr e = ProcessExpr::seq(
      ProcessExpr::choice(ProcessExpr::act("a"), ProcessExpr::act("b")),
      ProcessExpr::choice(ProcessExpr::act("c"), ProcessExpr::act("d")));
  TransitionSystem ts = expr_to_ts(e, 0);
  CHECK(ts.state_count() == 4);
  CHECK(ts.transition_count() == 4);
  REQUIRE(ts.outgoing(0).size() == 2);

  // M+F: one entry, two exits
  TransitionSystem mf = expr_to_ts(
      ProcessExpr::choice(ProcessExpr::act("M"), ProcessExpr::act("F")), 0);
  CHECK(mf.state_count() == 3);
  CHECK(mf.terminating(1));
  CHECK(mf.terminating(2));

  // four guarded variants in one choice share the entry
  ProcessExpr wife = ProcessExpr::choice(
      ProcessExpr::choice(
          ProcessExpr::cond(Formula::mid({"M"}), ProcessExpr::act("R")),
          ProcessExpr::cond(Formula::mid({"M"}), ProcessExpr::act("W"))),
      ProcessExpr::choice(
          ProcessExpr::cond(Formula::mid({"F"}), ProcessExpr::act("R")),
          ProcessExpr::cond(Formula::mid({"F"}), ProcessExpr::act("W"))));
  CHECK(expr_to_ts(wife, 1).state_count() == 5);
}

TEST_CASE("expression to system: owner and conditions land on transitions") {
  ProcessExpr e = ProcessExpr::cond(
      Formula::mid({"H"}),
      ProcessExpr::choice(ProcessExpr::act("M"), ProcessExpr::act("F")));
  TransitionSystem ts = expr_to_ts(e, 3);
  REQUIRE(ts.outgoing(0).size() == 2);
  for (const auto& t : ts.outgoing(0)) {
    CHECK(t.action.label.owner() == 3);
    CHECK(t.action.condition == Formula::mid({"H"}));
  }
  std::vector<ActionLabel> labels = ts.action_labels();
  REQUIRE(labels.size() == 2);
  CHECK(labels[0].name() == "M");  // first occurrence order
  CHECK(labels[1].name() == "F");
}

TEST_CASE("sequencing funnels into a junction whose history is ambiguous") {
  // (a+c).b: the state before b is reached by a and by c
  ProcessExpr e = ProcessExpr::seq(
      ProcessExpr::choice(ProcessExpr::act("a"), ProcessExpr::act("c")),
      ProcessExpr::act("b"));
  TransitionSystem ts = expr_to_ts(e, 0);
  CHECK(ts.state_count() == 3);
  StateId junction = ts.outgoing(0)[0].target;
  CHECK_THROWS_AS(history_of(ts, junction), AmbiguousHistoryError);
}

TEST_CASE("action name collection") {
  ProcessExpr e = ProcessExpr::seq(
      ProcessExpr::cond(Formula::mid({"q"}), ProcessExpr::act("a")),
      ProcessExpr::choice(ProcessExpr::act("b"), ProcessExpr::act("a")));
  std::set<std::string> names;
  e.collect_action_names(names);
  CHECK(names == std::set<std::string>{"a", "b"});
  std::set<std::string> letters;
  e.collect_condition_letters(letters);
  CHECK(letters == std::set<std::string>{"q"});
  CHECK(e.action_occurrences() == 3);
}

TEST_CASE("parse error text carries the position") {
  ParseError err("expected ':'", 4, 7);
  CHECK(std::string(err.what()) == "4:7: expected ':'");
  CHECK(err.line() == 4);
  CHECK(err.column() == 7);
}

}  // TEST_SUITE
