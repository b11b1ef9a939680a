#include <doctest.h>

#include <string>
#include <vector>

#include "procgame/formula.hpp"
#include "testutil.hpp"

using namespace procgame;

namespace {

Trace atomic_trace(const std::string& letters) {
  Trace t;
  for (char c : letters) t.push_back(ActionLabel::atomic(std::string(1, c), 0));
  return t;
}

// every trace over {a,b,c} up to the given length, as strings
std::vector<std::string> all_words(std::size_t max_len) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (char c : {'a', 'b', 'c'}) out.push_back(out[i] + c);
    begin = end;
  }
  return out;
}

Pattern pattern_of(const std::string& word) {
  Pattern p;
  for (char c : word) p.push_back(std::string(1, c));
  return p;
}

}  // namespace

TEST_SUITE("formula") {

TEST_CASE("printing respects precedence") {
  Formula a = Formula::exact({"a"});
  Formula b = Formula::mid({"b"});
  Formula c = Formula::pos({"c"});
  CHECK(Formula::disjunction(a, Formula::conjunction(b, c)).str() ==
        "a | mid(b) & pos(c)");
  CHECK(Formula::conjunction(Formula::disjunction(a, b), c).str() ==
        "(a | mid(b)) & pos(c)");
  CHECK(Formula::negation(Formula::conjunction(b, c)).str() ==
        "!(mid(b) & pos(c))");
  CHECK(Formula::negation(b).str() == "!mid(b)");
  CHECK(Formula::pre({"a", "b", "c"}).str() == "pre(a.b.c)");
  CHECK(Formula::exact({"a", "b"}).str() == "a.b");
  CHECK(Formula::top().str() == "true");
}

TEST_CASE("conjunction and disjunction fold the constant true") {
  Formula f = Formula::mid({"a"});
  CHECK(Formula::conjunction(Formula::top(), f) == f);
  CHECK(Formula::conjunction(f, Formula::top()) == f);
  CHECK(Formula::disjunction(Formula::top(), f).is_true());
  CHECK(Formula::disjunction(f, Formula::top()).is_true());
  // nothing else folds
  CHECK(Formula::conjunction(f, f).kind() == Formula::Kind::And);
}

TEST_CASE("size counts nodes and letters") {
  CHECK(Formula::top().size() == 1);
  CHECK(Formula::mid({"a", "b"}).size() == 3);
  CHECK(Formula::negation(Formula::mid({"a"})).size() == 3);
  CHECK(Formula::conjunction(Formula::mid({"a"}), Formula::pos({"b"})).size() ==
        5);
}

TEST_CASE("letter collection") {
  Formula f = Formula::conjunction(Formula::mid({"a", "b"}),
                                   Formula::negation(Formula::pre({"c"})));
  std::set<std::string> letters;
  f.collect_letters(letters);
  CHECK(letters == std::set<std::string>{"a", "b", "c"});
  CHECK(f.references_only({"a", "b", "c", "d"}));
  CHECK_FALSE(f.references_only({"a", "b"}));
}

TEST_CASE("structural equality") {
  CHECK(Formula::mid({"a"}) == Formula::mid({"a"}));
  CHECK_FALSE(Formula::mid({"a"}) == Formula::pos({"a"}));
  CHECK(Formula::conjunction(Formula::mid({"a"}), Formula::mid({"b"})) ==
        Formula::conjunction(Formula::mid({"a"}), Formula::mid({"b"})));
  CHECK_FALSE(Formula::conjunction(Formula::mid({"a"}), Formula::mid({"b"})) ==
              Formula::conjunction(Formula::mid({"b"}), Formula::mid({"a"})));
}

TEST_CASE("satisfaction on hand cases") {
  Trace habc = atomic_trace("abc");
  CHECK(satisfies(habc, Formula::exact({"a", "b", "c"})));
  CHECK_FALSE(satisfies(habc, Formula::exact({"a", "b"})));
  CHECK(satisfies(habc, Formula::pre({"a", "b"})));
  CHECK_FALSE(satisfies(habc, Formula::pre({"b"})));
  CHECK(satisfies(habc, Formula::mid({"b"})));
  CHECK(satisfies(habc, Formula::mid({"b", "c"})));
  CHECK_FALSE(satisfies(habc, Formula::mid({"c", "b"})));
  CHECK(satisfies(habc, Formula::pos({"c"})));
  CHECK_FALSE(satisfies(habc, Formula::pos({"a"})));
  CHECK(satisfies(habc, Formula::negation(Formula::pos({"a"}))));
  CHECK(satisfies(habc, Formula::top()));

  // empty pattern edge cases
  CHECK(satisfies(Trace{}, Formula::exact(Pattern{})));
  CHECK_FALSE(satisfies(habc, Formula::exact(Pattern{})));
  CHECK(satisfies(habc, Formula::pre(Pattern{})));
  CHECK(satisfies(habc, Formula::mid(Pattern{})));
  CHECK(satisfies(habc, Formula::pos(Pattern{})));
  CHECK(satisfies(Trace{}, Formula::mid(Pattern{})));
}

TEST_CASE("letters see through joint moves") {
  ActionLabel joint = ActionLabel::joint(
      {ActionLabel::atomic("M", 0), ActionLabel::atomic("R", 1)});
  CHECK(letter_matches("M", joint));
  CHECK(letter_matches("R", joint));
  CHECK_FALSE(letter_matches("F", joint));

  Trace t{ActionLabel::atomic("H", 0), joint};
  CHECK(satisfies(t, Formula::mid({"M"})));
  CHECK(satisfies(t, Formula::mid({"R"})));
  CHECK(satisfies(t, Formula::conjunction(Formula::mid({"M"}),
                                          Formula::mid({"R"}))));
  CHECK(satisfies(t, Formula::pos({"M"})));
  CHECK(satisfies(t, Formula::exact({"H", "M"})));
  CHECK_FALSE(satisfies(t, Formula::mid({"F"})));
}

TEST_CASE("pattern kinds agree with plain string matching") {
  std::vector<std::string> words = all_words(4);
  std::vector<std::string> patterns;
  for (const std::string& w : all_words(3))
    if (!w.empty()) patterns.push_back(w);

  for (const std::string& w : words) {
    Trace trace = atomic_trace(w);
    for (const std::string& p : patterns) {
      Pattern pat = pattern_of(p);
      CHECK(satisfies(trace, Formula::exact(pat)) == (w == p));
      CHECK(satisfies(trace, Formula::pre(pat)) == w.starts_with(p));
      CHECK(satisfies(trace, Formula::mid(pat)) ==
            (w.find(p) != std::string::npos));
      CHECK(satisfies(trace, Formula::pos(pat)) == w.ends_with(p));
    }
  }
}

TEST_CASE("connectives behave pointwise on random formulas") {
  testutil::Rng rng(11);
  const std::vector<std::string> letters{"a", "b", "c"};
  std::vector<std::string> words = all_words(4);
  for (int i = 0; i < 200; ++i) {
    Formula f = testutil::random_formula(rng, letters, 2);
    Formula g = testutil::random_formula(rng, letters, 2);
    const std::string& w = words[rng.below(words.size())];
    Trace trace = atomic_trace(w);
    CHECK(satisfies(trace, Formula::negation(f)) == !satisfies(trace, f));
    CHECK(satisfies(trace, Formula::conjunction(f, g)) ==
          (satisfies(trace, f) && satisfies(trace, g)));
    CHECK(satisfies(trace, Formula::disjunction(f, g)) ==
          (satisfies(trace, f) || satisfies(trace, g)));
  }
}

}  // TEST_SUITE
