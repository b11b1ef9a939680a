#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "procgame/algebra.hpp"
#include "procgame/errors.hpp"
#include "procgame/process_expr.hpp"
#include "testutil.hpp"

using namespace procgame;

namespace {

std::set<std::string> label_set(const std::vector<GameMove>& moves) {
  std::set<std::string> out;
  for (const GameMove& m : moves) out.insert(m.label.str());
  return out;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("communicate joins labels and conjoins conditions") {
  ConditionalAction first{Formula::mid({"H"}), ActionLabel::atomic("M", 0)};
  ConditionalAction second{Formula::mid({"N"}), ActionLabel::atomic("R", 1)};
  std::vector<ConditionalAction> parts{first, second};
  ConditionalAction joint = communicate(parts);
  CHECK(joint.label.str() == "{M,R}");
  CHECK(joint.condition == Formula::conjunction(Formula::mid({"H"}),
                                                Formula::mid({"N"})));

  std::vector<ConditionalAction> same_owner{
      first, {Formula::top(), ActionLabel::atomic("F", 0)}};
  CHECK_THROWS_AS(communicate(same_owner), Error);
  std::vector<ConditionalAction> lone{first};
  CHECK_THROWS_AS(communicate(lone), Error);
}

TEST_CASE("composition refuses components sharing an atom") {
  ProcessExpr e = ProcessExpr::choice(ProcessExpr::act("a"), ProcessExpr::act("b"));
  TransitionSystem one = expr_to_ts(e, 0);
  TransitionSystem clone = expr_to_ts(e, 0);
  CHECK_THROWS_AS(ComposedGame({&one, &clone}, CommMode::None),
                  AlphabetOverlapError);
  // the same names under another owner are different atoms
  TransitionSystem other = expr_to_ts(e, 1);
  CHECK_NOTHROW(ComposedGame({&one, &other}, CommMode::None));
}

TEST_CASE("conditions gate moves by the node history") {
  ProcessGame game = testutil::load_fixture("bos.pg");
  ComposedGame tree = build_game_tree(game);
  ProductNode root = tree.root();

  // the wife's guarded moves exist raw but are filtered at the root
  CHECK(tree.raw_moves(root).size() == 6);
  CHECK(label_set(tree.moves(root)) == std::set<std::string>{"M", "F"});

  ProductNode after_m = tree.child(root, tree.moves(root)[0]);
  CHECK(trace_str(after_m.history) == "M");
  CHECK(label_set(tree.moves(after_m)) == std::set<std::string>{"R", "W"});
  ProductNode leaf = tree.child(after_m, tree.moves(after_m)[0]);
  CHECK(tree.moves(leaf).empty());
  CHECK(tree.terminating(leaf));
}

TEST_CASE("subsumption removes covered moves at simultaneous nodes") {
  ProcessGame game = testutil::load_fixture("extended-bos.pg");
  ComposedGame tree = build_game_tree(game);
  ProductNode root = tree.root();
  REQUIRE(label_set(tree.moves(root)) == std::set<std::string>{"H", "N"});

  GameMove to_h = tree.moves(root)[0].label.str() == "H" ? tree.moves(root)[0]
                                                         : tree.moves(root)[1];
  ProductNode after_h = tree.child(root, to_h);

  // before the cut: four singles and four joints; after: joints only
  CHECK(tree.conditional_moves(after_h).size() == 8);
  std::vector<GameMove> resolved = tree.moves(after_h);
  CHECK(label_set(resolved) ==
        std::set<std::string>{"{M,R}", "{M,W}", "{F,R}", "{F,W}"});
  for (const GameMove& m : resolved) CHECK(m.label.is_joint());
}

TEST_CASE("without communication no joints form") {
  ProcessGame game = testutil::load_fixture("bos.pg");
  ComposedGame tree = build_game_tree(game);
  std::vector<RawMove> raw = tree.raw_moves(tree.root());
  for (const RawMove& m : raw) CHECK(m.action.label.is_atomic());
}

TEST_CASE("encapsulation drops the cut labels") {
  ProcessExpr e = ProcessExpr::choice(
      ProcessExpr::choice(ProcessExpr::act("a"), ProcessExpr::act("b")),
      ProcessExpr::act("c"));
  TransitionSystem ts = expr_to_ts(e, 0);
  TransitionSystem cut =
      encapsulate(ts, {ActionLabel::atomic("b", 0), ActionLabel::atomic("c", 0)});
  REQUIRE(cut.outgoing(0).size() == 1);
  CHECK(cut.outgoing(0)[0].action.label.name() == "a");
}

TEST_CASE("statewise subsumption cut") {
  ActionLabel a = ActionLabel::atomic("a", 0);
  ActionLabel b = ActionLabel::atomic("b", 1);
  ActionLabel ab = ActionLabel::joint({a, b});
  TransitionSystemBuilder builder;
  StateId s0 = builder.add_state();
  StateId s1 = builder.add_state();
  builder.add_transition(s0, Formula::top(), a, s1);
  builder.add_transition(s0, Formula::top(), b, s1);
  builder.add_transition(s0, Formula::top(), ab, s1);
  builder.add_transition(s1, Formula::top(), a, s1);
  TransitionSystem ts = builder.build();

  TransitionSystem cut = cut_subsumed(ts);
  REQUIRE(cut.outgoing(0).size() == 1);
  CHECK(cut.outgoing(0)[0].action.label == ab);
  CHECK(cut.outgoing(1).size() == 1);  // nothing to cut elsewhere
}

TEST_CASE("materialized tree carries histories in notes") {
  ProcessGame game = testutil::load_fixture("bos.pg");
  ComposedGame tree = build_game_tree(game);
  TransitionSystem ts = materialize_tree(tree, 1000);
  CHECK(ts.state_count() == 7);  // root plus six
  CHECK(ts.note(0) == "");
  std::set<std::string> notes;
  for (StateId s = 0; s < ts.state_count(); ++s) notes.insert(ts.note(s));
  CHECK(notes.contains("M R"));
  CHECK(notes.contains("F W"));
  CHECK_THROWS_AS(materialize_tree(tree, 3), BudgetExceededError);
}

TEST_CASE("materialized raw composition keeps conditions") {
  ProcessGame game = testutil::load_fixture("pennies.pg");
  ComposedGame tree = build_game_tree(game);
  TransitionSystem raw = materialize_raw(tree, 1000);
  // two singles each and four joints at the root
  CHECK(raw.outgoing(0).size() == 8);
}

TEST_CASE("property: encapsulation is idempotent") {
  CHECK(testutil::property_encapsulate_idempotent(200));
}

TEST_CASE("property: the subsumption cut is idempotent") {
  CHECK(testutil::property_cut_idempotent(200));
}

TEST_CASE("property: resolving conditions only removes moves") {
  CHECK(testutil::property_moves_monotone(200));
}

TEST_CASE("property: joining moves commutes") {
  CHECK(testutil::property_communicate_commutes(200));
}

TEST_CASE("property: component order does not change the unfolding") {
  CHECK(testutil::property_order_invariance(200));
}

}  // TEST_SUITE
