#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ietw/diet.hpp"
#include "ietw/rauzy.hpp"
#include "oracles.hpp"

using namespace ietw;

namespace {
  QuadNum lin(long c0, long c1) {  // c0 + c1·α
    return QuadNum(c0) + QuadNum(c1) * fixtures::alpha();
  }
}  // namespace

TEST_CASE("first right step on the golden map") {
  auto T = fixtures::golden();
  auto s = rauzy_right(T);
  CHECK(s.record.kind == StepKind::right);
  CHECK(s.record.step_case == StepCase::top_longer);
  CHECK(s.record.pivot == 'c');
  CHECK(s.record.partner == 'a');
  CHECK(s.result.alphabet().letters() == "abc");
  CHECK(s.result.image_order() == "bca");
  CHECK(s.result.domain() == Interval{QuadNum(0), lin(0, 2)});
  CHECK(s.result.length('c') == QuadNum::parse("(7, -3, 2)", 5));
  CHECK(step_morphism(s.record) == make_alpha('a', 'c', OrderedAlphabet("abc")));
}

TEST_CASE("golden induction onto I_b reproduces the worked sequence") {
  auto T  = fixtures::golden();
  auto tr = induce_to_cylinder(T, "b");
  REQUIRE(tr.steps.size() == 4);
  std::vector<StepKind> kinds;
  for (auto const& s : tr.steps) {
    kinds.push_back(s.kind);
  }
  CHECK(kinds == std::vector<StepKind>{StepKind::right, StepKind::right, StepKind::left, StepKind::left});

  std::vector<std::string> alphabets;
  for (auto const& st : tr.stages) {
    alphabets.push_back(st.alphabet().letters());
  }
  CHECK(alphabets == std::vector<std::string>{"abc", "abc", "acb", "cab", "acb"});

  CHECK(tr.stages[1].domain() == Interval{QuadNum(0), lin(0, 2)});
  CHECK(tr.stages[2].domain() == Interval{QuadNum(0), lin(1, -1)});
  CHECK(tr.stages[2].length('a') == lin(2, -5));
  CHECK(tr.stages[3].domain() == Interval{lin(2, -5), lin(1, -1)});
  CHECK(tr.stages[3].image_order() == "bca");
  CHECK(tr.final.domain() == T.piece('b'));
  CHECK(tr.final.piece('a') == Interval{lin(1, -2), lin(3, -7)});
  CHECK(tr.final.piece('c') == Interval{lin(3, -7), lin(2, -4)});
  CHECK(tr.final.piece('b') == Interval{lin(2, -4), lin(1, -1)});

  CHECK(step_morphism(tr.steps[0]) == make_alpha('a', 'c', OrderedAlphabet("abc")));
  CHECK(step_morphism(tr.steps[1]).to_string() == "a:a,c:ac,b:b");
  CHECK(step_morphism(tr.steps[2]).to_string() == "c:c,a:ba,b:b");
  CHECK(step_morphism(tr.steps[3]).to_string() == "a:a,c:bc,b:b");
  CHECK(tr.theta.image('a') == "bac");
  CHECK(tr.theta.image('b') == "b");
  CHECK(tr.theta.image('c') == "bacc");
  CHECK(return_words_induction(T, "b") == std::set<Word>{"b", "bac", "bacc"});
}

TEST_CASE("theta sends each final letter to its induced path") {
  auto T = fixtures::golden();
  for (auto const& w : language(T, 4)) {
    auto tr     = induce_to_cylinder(T, w);
    auto pieces = induced_pieces(T, tr.final.domain(), 1000);
    REQUIRE(pieces.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
      Letter a = tr.final.alphabet()[k];
      CHECK(tr.theta.image(a) == pieces[k].path);
      CHECK(tr.final.piece(a) == pieces[k].domain);
      CHECK(is_return_word(T, w, pieces[k].path));
    }
  }
}

TEST_CASE("induction and scanning agree") {
  auto T = fixtures::golden();
  for (auto const& w : language(T, 5)) {
    if (w.empty()) {
      continue;
    }
    CHECK(return_words_induction(T, w) == return_words_scan(T, w).words);
  }
}

TEST_CASE("the final map does not depend on the branch tried first") {
  auto T = fixtures::golden();
  for (auto const& w : language(T, 5)) {
    InductionOptions r, l;
    l.prefer = StepKind::left;
    auto a   = induce_to_cylinder(T, w, r);
    auto b   = induce_to_cylinder(T, w, l);
    CHECK(a.final.domain() == b.final.domain());
    CHECK(return_words_induction(T, w, r) == return_words_induction(T, w, l));
  }
}

TEST_CASE("equal pivot and partner lengths") {
  OrderedAlphabet A("abc");
  Iet             T(A, parse_permutation("cba", A), {QuadNum(1), QuadNum(0, 1, 1, 2), QuadNum(1)});
  CHECK_THROWS_AS(rauzy_right(T), ZeroConnection);
  CHECK_THROWS_AS(rauzy_left(T), ZeroConnection);
  CHECK_THROWS_AS(induce_to_cylinder(T, "b"), KeaneFailure);
}

TEST_CASE("a fixed end letter cannot pivot") {
  OrderedAlphabet A("abc");
  Iet             T(A, parse_permutation("bac", A), {QuadNum(1), QuadNum(0, 1, 1, 2), QuadNum(2)});
  CHECK_THROWS_AS(rauzy_right(T), DegenerateStep);
  CHECK_THROWS_AS(rauzy_step(Iet(OrderedAlphabet("a"), Permutation::identity(1), {QuadNum(1)}), StepKind::left),
                  DegenerateStep);
}

TEST_CASE("periodic maps are refused") {
  OrderedAlphabet A("abc");
  auto            D = diet_as_iet(Diet({4, 2, 1}, Permutation::symmetric(3)), A);
  CHECK_THROWS_AS(induce_to_cylinder(D, "a"), KeaneFailure);
  CHECK_THROWS_AS(induce_to_cylinder(fixtures::golden(), "ab"), NotInLanguage);
}

TEST_CASE("the step cap is honoured") {
  InductionOptions o;
  o.cap = 2;
  CHECK_THROWS_AS(induce_to_cylinder(fixtures::golden(), "b", o), CapExceeded);
  // a shorter route rho lambda rho exists and lands on the same map
  o.cap   = 3;
  auto tr = induce_to_cylinder(fixtures::golden(), "b", o);
  CHECK(tr.steps.size() == 3);
  CHECK(tr.final == induce_to_cylinder(fixtures::golden(), "b").final);
  CHECK(tr.theta == induce_to_cylinder(fixtures::golden(), "b").theta);
}
