#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ietw/words.hpp"
#include "oracles.hpp"

using namespace ietw;

TEST_CASE("alphabet order is positional") {
  OrderedAlphabet A("nab");
  CHECK(A.size() == 3);
  CHECK(A.index('n') == 0);
  CHECK(A.index('b') == 2);
  CHECK(A.contains('a'));
  CHECK_FALSE(A.contains('z'));
  CHECK_THROWS_AS(A.index('z'), Error);
  CHECK_THROWS_AS(OrderedAlphabet("aba"), Error);
  CHECK_THROWS_AS(A.check_word("banana!"), Error);
  CHECK(A.support_of("ban").letters() == "nab");
  CHECK(OrderedAlphabet("abc").support_of("cca").letters() == "ac");
}

TEST_CASE("permutations in one-line and cycle syntax") {
  OrderedAlphabet A("abc");
  auto            pi = parse_permutation("bca", A);
  CHECK(to_one_line(pi, A) == "bca");
  CHECK(to_one_line(parse_permutation("(a c)(b)", A), A) == "cba");
  CHECK(parse_permutation("(a c)", A) == Permutation::symmetric(3));
  CHECK(parse_permutation("(a, b, c)", A) == parse_permutation("bca", A));
  CHECK(parse_permutation("abc", A).is_identity());
  CHECK(Permutation::symmetric(3).is_symmetric());
  CHECK(pi.after(pi.inverse()).is_identity());
  CHECK(pi.is_circular());
  CHECK(pi.is_irreducible());
  CHECK_FALSE(parse_permutation("bac", A).is_irreducible());
  CHECK_THROWS_AS(parse_permutation("ab", A), Error);
  CHECK_THROWS_AS(parse_permutation("aab", A), Error);
  CHECK_THROWS_AS(parse_permutation("(a b", A), Error);
}

TEST_CASE("cycle strings are 1-based and skip fixed points") {
  CHECK(to_cycle_string(Permutation({3, 4, 5, 6, 1, 2, 0})) == "(1,4,7)(2,5)(3,6)");
  CHECK(to_cycle_string(Permutation::identity(4)) == "()");
  CHECK(to_cycle_string(Permutation({1, 0, 2})) == "(1,2)");
}

TEST_CASE("lexicographic order follows the alphabet") {
  OrderedAlphabet A("ba");
  CHECK(compare_lex("b", "a", A) < 0);
  CHECK(compare_lex("ba", "b", A) > 0);
  CHECK(compare_lex("", "a", A) < 0);
  CHECK(compare_lex("ab", "ab", A) == 0);
}

TEST_CASE("omega order agrees with long power prefixes, equality iff uv = vu") {
  for (std::string letters : {"ab", "ba", "abc"}) {
    OrderedAlphabet   A(letters);
    std::vector<Word> corpus;
    for (std::size_t n = 1; n <= (letters.size() == 2 ? 5u : 3u); ++n) {
      for (auto const& w : oracle::words_of_length(letters, n)) {
        corpus.push_back(w);
      }
    }
    for (auto const& u : corpus) {
      for (auto const& v : corpus) {
        auto got  = compare_omega(u, v, A);
        auto want = oracle::omega_cmp(u, v, letters);
        CHECK((got < 0) == (want < 0));
        CHECK((got == 0) == (want == 0));
        CHECK((got == 0) == (u + v == v + u));
      }
    }
  }
}

TEST_CASE("conjugates and primitive roots") {
  CHECK(conjugates("abc") == std::vector<Word>{"abc", "bca", "cab"});
  CHECK(conjugates("abab").size() == 4);
  auto r = primitive_root("abababab");
  CHECK(r.root == "ab");
  CHECK(r.power == 4);
  CHECK(primitive_root("aab").power == 1);
  for (auto const& w : oracle::words_of_length("ab", 8)) {
    CHECK(is_primitive(w) == oracle::is_primitive(w));
    auto pr = primitive_root(w);
    Word back;
    for (std::size_t i = 0; i < pr.power; ++i) {
      back += pr.root;
    }
    CHECK(back == w);
    CHECK(oracle::is_primitive(pr.root));
  }
}

TEST_CASE("Lyndon words and representatives") {
  OrderedAlphabet A("abc");
  CHECK(is_lyndon("aac", A));
  CHECK(is_lyndon("ab", A));
  CHECK_FALSE(is_lyndon("ba", A));
  CHECK_FALSE(is_lyndon("abab", A));
  CHECK(is_lyndon("ba", OrderedAlphabet("ba")));
  CHECK(lyndon_representative("caa", A) == "aac");
  CHECK(lyndon_representative("nanaba", OrderedAlphabet("abn")) == "abanan");
  CHECK_THROWS_AS(lyndon_representative("abab", A), Error);
  for (auto const& w : oracle::words_of_length("abc", 6)) {
    CHECK(is_lyndon(w, A) == oracle::is_lyndon(w, "abc"));
    if (oracle::is_primitive(w)) {
      auto l = lyndon_representative(w, A);
      CHECK(oracle::is_lyndon(l, "abc"));
      CHECK((w + w).find(l) != std::string::npos);
    }
  }
}

TEST_CASE("Parikh vectors and occurrence counts") {
  OrderedAlphabet A("abc");
  CHECK(parikh("aacabab", A).counts() == std::vector<std::size_t>{4, 2, 1});
  CHECK(parikh(std::vector<Word>{"aac", "ab", "ab"}, A).counts() == std::vector<std::size_t>{4, 2, 1});
  CHECK((parikh("ab", A) + parikh("c", A)).total() == 3);
  CHECK(count_occurrences("aaaa", "aa") == 3);
  CHECK(count_occurrences("bacbacc", "bac") == 2);
  CHECK(count_occurrences("abc", "") == 4);
}

TEST_CASE("random permutations invert and compose") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::size_t> v(1 + rng() % 8);
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = i;
    }
    std::shuffle(v.begin(), v.end(), rng);
    Permutation p(v);
    CHECK(p.inverse().after(p).is_identity());
    std::size_t total = 0;
    for (auto const& c : p.cycles()) {
      total += c.size();
    }
    CHECK(total == v.size());
  }
}
