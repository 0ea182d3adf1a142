#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ietw/diet.hpp"
#include "ietw/iet.hpp"
#include "oracles.hpp"

using namespace ietw;

namespace {
  QuadNum q5(char const* s) {
    return QuadNum::parse(s, 5);
  }
}  // namespace

TEST_CASE("golden pieces and translations") {
  auto T = fixtures::golden();
  CHECK(T.piece('a') == Interval{QuadNum(0), q5("(-2, 1, 1)")});
  CHECK(T.piece('b') == Interval{q5("(-2, 1, 1)"), q5("(-1, 1, 2)")});
  CHECK(T.piece('c') == Interval{q5("(-1, 1, 2)"), QuadNum(1)});
  CHECK(T.translation('a') == fixtures::alpha() * QuadNum(2));
  CHECK(T.translation('b') == q5("(2, -1, 1)"));
  CHECK(T.translation('c') == q5("(2, -1, 1)"));
  CHECK(T.image_order() == "bca");
  CHECK(T.domain() == Interval{QuadNum(0), QuadNum(1)});
}

TEST_CASE("discontinuities of the map and its inverse") {
  auto d = discontinuities(fixtures::golden());
  CHECK(d.of_map == std::vector<QuadNum>{q5("(-2, 1, 1)"), q5("(-1, 1, 2)")});
  CHECK(d.of_inverse == std::vector<QuadNum>{fixtures::alpha(), fixtures::alpha() * QuadNum(2)});
}

TEST_CASE("apply and its inverse") {
  auto T = fixtures::golden();
  auto x = QuadNum::rational(1, 3);
  CHECK(T.apply_inverse(T.apply(x)) == x);
  CHECK(T.apply(QuadNum(0)) == fixtures::alpha() * QuadNum(2));
  CHECK_THROWS_AS(T.apply(QuadNum(1)), OutsideDomain);
  CHECK_THROWS_AS(T.letter_at(QuadNum(-1)), OutsideDomain);
}

TEST_CASE("trajectories agree with floating point away from cuts") {
  auto T = fixtures::golden();
  CHECK(trajectory(T, QuadNum(0), 5) == "acbba");
  oracle::FloatGolden F;
  for (int k = 1; k < 40; ++k) {
    auto x = QuadNum::rational(k, 41);
    CHECK(trajectory(T, x, 25) == F.trajectory(k / 41.0, 25));
  }
}

TEST_CASE("golden language has 2n+1 factors of each length") {
  auto T = fixtures::golden();
  auto L = language(T, 6);
  for (std::size_t n = 0; n <= 6; ++n) {
    auto count = std::count_if(L.begin(), L.end(), [&](Word const& w) { return w.size() == n; });
    CHECK(static_cast<std::size_t>(count) == 2 * n + 1);
  }
  CHECK(L.size() == 49);
  std::set<Word> two;
  for (auto const& w : L) {
    if (w.size() == 2) {
      two.insert(w);
    }
  }
  CHECK(two == std::set<Word>{"ac", "ba", "bb", "cb", "cc"});
}

TEST_CASE("language matches dense floating-point sampling") {
  auto                T = fixtures::golden();
  oracle::FloatGolden F;
  std::mt19937_64     rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::set<Word>      seen;
  for (int i = 0; i < 20000; ++i) {
    auto t = F.trajectory(u(rng), 6);
    for (std::size_t n = 0; n <= 6; ++n) {
      seen.insert(t.substr(0, n));
    }
  }
  CHECK(seen == language(T, 6));
}

TEST_CASE("cylinders tile the domain at every length") {
  auto T = fixtures::golden();
  auto C = cylinders(T, 5);
  for (std::size_t n = 0; n <= 5; ++n) {
    QuadNum total(0);
    for (auto const& [w, I] : C) {
      if (w.size() == n) {
        total += I.length();
        CHECK(cylinder(T, w) == I);
      }
    }
    CHECK(total == QuadNum(1));
  }
  CHECK(cylinder(T, "b") == T.piece('b'));
  CHECK(cylinder(T, "ab").is_empty());
}

TEST_CASE("Keane check") {
  auto v = check_keane(fixtures::golden(), 500);
  CHECK(v.regular());
  CHECK(v.regular_to_depth == 500);

  OrderedAlphabet A("abc");
  auto            D = diet_as_iet(Diet({4, 2, 1}, Permutation::symmetric(3)), A);
  auto            d = discontinuities(D);
  CHECK(d.of_map == std::vector<QuadNum>{QuadNum(4), QuadNum(6)});
  CHECK(d.of_inverse == std::vector<QuadNum>{QuadNum(1), QuadNum(3)});
  auto w = check_keane(D, 50);
  REQUIRE_FALSE(w.regular());
  CHECK(w.failure->from == QuadNum(1));
  CHECK(w.failure->to == QuadNum(4));
  CHECK(w.failure->steps == 1);
  CHECK(trajectory(D, QuadNum::rational(7, 2), 6) == "acaaca");
}

TEST_CASE("return words to b by scanning") {
  auto T    = fixtures::golden();
  auto scan = return_words_scan(T, "b");
  CHECK(scan.complete);
  CHECK(scan.words == std::set<Word>{"b", "bac", "bacc"});
  CHECK(is_return_word(T, "b", "bac"));
  CHECK(is_return_word(T, "b", "b"));
  CHECK_FALSE(is_return_word(T, "b", "ba"));
  CHECK_FALSE(is_return_word(T, "b", "bacbac"));
  CHECK_THROWS_AS(return_words_scan(T, "ab"), NotInLanguage);
}

TEST_CASE("induced map on I_b") {
  auto T      = fixtures::golden();
  auto J      = T.piece('b');
  auto pieces = induced_pieces(T, J, 10);
  REQUIRE(pieces.size() == 3);
  QuadNum        total(0);
  std::set<Word> paths;
  for (auto const& p : pieces) {
    total += p.domain.length();
    paths.insert(p.path);
    CHECK(J.contains(p.domain.shifted(p.translation)));
    auto fr = first_return(T, J, p.domain.left, 10);
    CHECK(fr.path == p.path);
    CHECK(fr.point == p.domain.left + p.translation);
  }
  CHECK(total == J.length());
  CHECK(paths == std::set<Word>{"b", "bac", "bacc"});
  CHECK_THROWS_AS(induced_pieces(T, J, 2), CapExceeded);
}

TEST_CASE("construction errors") {
  OrderedAlphabet A("ab");
  CHECK_THROWS_AS(Iet(A, Permutation::symmetric(2), {QuadNum(1), QuadNum(0)}), Error);
  CHECK_THROWS_AS(Iet(A, Permutation::symmetric(3), {QuadNum(1), QuadNum(1)}), Error);
  CHECK_THROWS_AS(Iet(A, Permutation::symmetric(2), {QuadNum(1)}), Error);
}

TEST_CASE("shifted origin") {
  OrderedAlphabet A("ab");
  Iet             T(A, Permutation::symmetric(2), {QuadNum(1), QuadNum(0, 1, 1, 2)}, QuadNum(3));
  CHECK(T.piece('a').left == QuadNum(3));
  CHECK(T.apply(QuadNum(3)) == QuadNum(3) + QuadNum(0, 1, 1, 2));
  CHECK(check_keane(T, 200).regular());
}
