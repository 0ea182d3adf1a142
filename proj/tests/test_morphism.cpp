#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "ietw/bwt.hpp"
#include "ietw/morphism.hpp"
#include "oracles.hpp"

using namespace ietw;

TEST_CASE("parse, apply and print") {
  auto f = Morphism::parse("a:ab,b:b,c:c");
  CHECK(f("abc") == "abbc");
  CHECK(f("") == "");
  CHECK(f.to_string() == "a:ab,b:b,c:c");
  CHECK(f.source().letters() == "abc");
  CHECK(Morphism::parse(f.to_string()) == f);
  CHECK_THROWS_AS(Morphism::parse("a:ab,a:b"), Error);
  CHECK_THROWS_AS(Morphism::parse("a:"), Error);
  CHECK_THROWS_AS(f("abd"), Error);
}

TEST_CASE("elementary morphisms") {
  OrderedAlphabet A("abc");
  CHECK(make_alpha('a', 'c', A)("abc") == "acbc");
  CHECK(make_alpha_tilde('a', 'c', A)("abc") == "cabc");
  CHECK_THROWS_AS(make_alpha('b', 'b', A), Error);
  CHECK(Morphism::identity(A)("cab") == "cab");
}

TEST_CASE("composition applies the right factor first") {
  OrderedAlphabet A("abc");
  auto            f = make_alpha('a', 'c', A);
  auto            g = make_alpha_tilde('c', 'a', A);
  auto            h = compose(f, g);
  for (auto const& w : oracle::words_of_length("abc", 4)) {
    CHECK(h(w) == f(g(w)));
  }
  CHECK_THROWS_AS(compose(f, Morphism::identity(OrderedAlphabet("ab"))), Error);
}

TEST_CASE("the golden return-word morphism") {
  OrderedAlphabet abc("abc"), acb("acb"), cab("cab");
  auto t1 = make_alpha('a', 'c', abc);
  auto t2 = Morphism(acb, abc, {{'a', "a"}, {'b', "b"}, {'c', "ac"}});  // ᾱ_{c,a}
  auto t3 = Morphism(cab, acb, {{'a', "ba"}, {'b', "b"}, {'c', "c"}});  // ᾱ_{a,b}
  auto t4 = Morphism(acb, cab, {{'a', "a"}, {'b', "b"}, {'c', "bc"}});  // ᾱ_{c,b}
  auto theta = compose(compose(compose(t1, t2), t3), t4);
  CHECK(theta.image('a') == "bac");
  CHECK(theta.image('b') == "b");
  CHECK(theta.image('c') == "bacc");
}

TEST_CASE("renaming") {
  OrderedAlphabet A("abc");
  auto            r = rename(Permutation({1, 2, 0}), A);
  CHECK(r("abc") == "bca");
  CHECK(r.target().letters() == "bca");
}

TEST_CASE("clustering cases: preconditions") {
  OrderedAlphabet A("abc");
  auto            pi = parse_permutation("cba", A);
  // b = a_1 right after a in the image order
  CHECK(clustering_case_target(ClusteringCase::alpha_first, 'b', 'a', pi, A) == A);
  CHECK_THROWS_AS(clustering_case_target(ClusteringCase::alpha_first, 'c', 'a', pi, A), PreconditionError);
  CHECK_THROWS_AS(clustering_case_target(ClusteringCase::alpha_first, 'a', 'b', pi, A), PreconditionError);
  // b = a_d right before a in the image order
  CHECK(clustering_case_target(ClusteringCase::alpha_last, 'b', 'c', pi, A) == A);
  CHECK_THROWS_AS(clustering_case_target(ClusteringCase::alpha_last, 'a', 'c', pi, A), PreconditionError);
  // b first in the image, a just before b in A; a moves to the front
  CHECK(clustering_case_target(ClusteringCase::tilde_first, 'b', 'c', pi, A).letters() == "bac");
  CHECK_THROWS_AS(clustering_case_target(ClusteringCase::tilde_first, 'a', 'c', pi, A), PreconditionError);
  // b last in the image, a just after b in A; a moves to the end
  CHECK(clustering_case_target(ClusteringCase::tilde_last, 'b', 'a', pi, A).letters() == "acb");
  CHECK_THROWS_AS(clustering_case_target(ClusteringCase::tilde_last, 'c', 'a', pi, A), PreconditionError);
  CHECK_THROWS_AS(clustering_case_target(ClusteringCase::rename, 'a', 'b', pi, A), PreconditionError);
  CHECK_THROWS_AS(clustering_case_target(ClusteringCase::tilde_last, 'a', 'a', pi, A), PreconditionError);
}

TEST_CASE("clustering cases: worked image") {
  // abacaac is cba-clustering
  OrderedAlphabet A("abc");
  auto            pi = parse_permutation("cba", A);
  Word            w  = "abacaac";
  REQUIRE(is_pi_clustering(w, pi, A));
  auto f = clustering_case_morphism(ClusteringCase::tilde_last, 'b', 'a', pi, A);
  CHECK(f(w) == "aabacaac");
  CHECK(f.target().letters() == "acb");
  CHECK(clustering_report(f(w), f.target()).is_clustering);
}

TEST_CASE("every applicable case keeps random clustering words clustering") {
  std::mt19937 rng(2024);
  std::size_t  applied = 0;
  for (int t = 0; t < 300; ++t) {
    auto s = gen::clustering_word(rng, 12);
    REQUIRE(is_pi_clustering(s.word, s.pi, s.alphabet));
    auto const& L = s.alphabet.letters();
    for (auto c : {ClusteringCase::alpha_first, ClusteringCase::alpha_last, ClusteringCase::tilde_first, ClusteringCase::tilde_last}) {
      for (Letter a : L) {
        for (Letter b : L) {
          try {
            auto f = clustering_case_morphism(c, a, b, s.pi, s.alphabet);
            ++applied;
            CHECK(clustering_report(f(s.word), f.target()).is_clustering);
          } catch (PreconditionError const&) {
          }
        }
      }
    }
    std::vector<std::size_t> mu(L.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
      mu[i] = (i + 1) % mu.size();
    }
    auto f = clustering_case_morphism(ClusteringCase::rename, 0, 0, s.pi, s.alphabet, Permutation(mu));
    CHECK(clustering_report(f(s.word), f.target()).is_clustering);
  }
  CHECK(applied > 300);
}
