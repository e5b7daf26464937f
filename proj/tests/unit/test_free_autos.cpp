#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ringwicket/free_autos.hpp"
#include "ringwicket/verify.hpp"
#include "support/random_words.hpp"

using namespace ringwicket;

TEST_CASE("free words reduce and parse") {
  FreeWord w(3);
  w.push(1, 1);
  w.push(1, -1);
  REQUIRE(w.empty());
  w.push(2, 1);
  w.push(3, 1);
  w.push(3, -1);
  REQUIRE(to_string(w) == "x2");
  REQUIRE(parse_free_word("x1 x2^-1 x2 x1^-1", 2).empty());
  REQUIRE(parse_free_word("x2^3", 3).size() == 3);
  REQUIRE_THROWS_AS(parse_free_word("x4", 3), DomainError);
}

TEST_CASE("compose, apply, is_identity") {
  const SymAuto id = SymAuto::identity(3);
  REQUIRE(is_identity(id));
  const SymAuto swap12 = detail::letter_auto(sigma(1), 3);
  REQUIRE(!is_identity(swap12));
  REQUIRE(is_identity(compose(swap12, swap12)));
  REQUIRE(apply(id, parse_free_word("x1 x2", 3)) == parse_free_word("x1 x2", 3));
  REQUIRE(apply(swap12, FreeWord::basis(3, 1)) == FreeWord::basis(3, 2));
  // rho and its inverse cancel both ways
  const SymAuto r = detail::letter_auto(rho(1), 3);
  const SymAuto rinv = detail::letter_auto(rho(1, -1), 3);
  REQUIRE(is_identity(compose(r, rinv)));
  REQUIRE(is_identity(compose(rinv, r)));
  REQUIRE_THROWS_AS(compose(SymAuto::identity(2), SymAuto::identity(3)), DomainError);
}

TEST_CASE("dahm_rep kills the R relators") {
  REQUIRE(is_identity(dahm_rep(parse_word("s1 s1", {Family::R, 2}))));
  REQUIRE(is_identity(dahm_rep(parse_word("t1 t1", {Family::R, 2}))));
  for (const GroupWord& rel : relators({Family::R, 4}).relators)
    REQUIRE(is_identity(dahm_rep(rel)));
}

TEST_CASE("dahm_rep images have the symmetric automorphism shape") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 150; ++trial) {
    const GroupWord w = testing::random_word({Family::R, 5}, rng() % 24, rng);
    const SymAuto a = dahm_rep(w);
    REQUIRE(is_symmetric_shape(a));
  }
}

TEST_CASE("mccool generators") {
  REQUIRE(apply(mccool(1, 3, 3), FreeWord::basis(3, 2)) == FreeWord::basis(3, 2));
  REQUIRE(to_string(apply(mccool(1, 3, 3), FreeWord::basis(3, 1))) == "x3^-1 x1 x3");
  REQUIRE_THROWS_AS(mccool(2, 2, 3), DomainError);
  // McCool relations as automorphism identities, all distinct triples <= 5
  const int n = 5;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        const SymAuto lhs =
            compose(compose(mccool(i, j, n), mccool(i, k, n)), mccool(j, k, n));
        const SymAuto rhs =
            compose(compose(mccool(j, k, n), mccool(i, k, n)), mccool(i, j, n));
        REQUIRE(lhs == rhs);
      }
  // commutation for fully distinct index pairs <= 4
  const int m = 4;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= m; ++k)
        for (int l = 1; l <= m; ++l) {
          if (i == j || k == l) continue;
          if (k == i || k == j || l == i || l == j) continue;
          REQUIRE(compose(mccool(i, j, m), mccool(k, l, m)) ==
                  compose(mccool(k, l, m), mccool(i, j, m)));
        }
}

TEST_CASE("PUR relators hold and restrict to the upper triangular subset") {
  const RelatorSet rs = relators({Family::PUR, 4});
  for (const GroupWord& r : rs.relators) REQUIRE(is_identity(dahm_rep(r)));
  // the relators whose letters are all upper triangular still hold verbatim
  int upper = 0;
  for (const GroupWord& r : rs.relators) {
    const bool ut = std::all_of(r.letters.begin(), r.letters.end(),
                                [](const GenLetter& l) { return l.index < l.jndex; });
    if (!ut) continue;
    ++upper;
    REQUIRE(is_identity(dahm_rep(r)));
  }
  REQUIRE(upper > 0);
}

TEST_CASE("alpha_word equals the McCool automorphism") {
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        const GroupWord w = alpha_word(i, j, n);
        REQUIRE(w.group.family == Family::UR);
        REQUIRE(dahm_rep(w) == mccool(i, j, n));
        REQUIRE(is_pure(w));
      }
  // alpha_12 and alpha_21 are different automorphisms
  REQUIRE(apply(dahm_rep(alpha_word(1, 2, 2)), FreeWord::basis(2, 1)) !=
          apply(dahm_rep(alpha_word(2, 1, 2)), FreeWord::basis(2, 1)));
}

TEST_CASE("alpha_in generators commute pairwise (Z^{n-1})") {
  const int n = 6;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      REQUIRE(compose(mccool(i, n, n), mccool(j, n, n)) ==
              compose(mccool(j, n, n), mccool(i, n, n)));
}

TEST_CASE("word problem torsion witnesses") {
  REQUIRE(word_is_trivial_R(parse_word("t1 t1", {Family::R, 2})));
  REQUIRE(!word_is_trivial_VR(parse_word("t1 t1", {Family::VR, 2})));
  REQUIRE(word_is_trivial_UR(parse_word("s1 s1", {Family::UR, 2})));
  REQUIRE(!word_is_trivial_R(parse_word("r1 s1^-1", {Family::R, 2})));
}

TEST_CASE("the three ring solvers agree on tau-free words") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const GroupWord w = testing::random_word({Family::UR, n}, rng() % 20, rng);
    GroupWord as_vr(GroupId{Family::VR, n}, w.letters);
    GroupWord as_r(GroupId{Family::R, n}, w.letters);
    const bool ur = word_is_trivial_UR(w);
    REQUIRE(word_is_trivial_VR(as_vr) == ur);
    REQUIRE(word_is_trivial_R(as_r) == ur);
  }
}

TEST_CASE("dahm_rep is relator-insertion invariant") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const GroupId g{Family::R, n};
    const RelatorSet rs = relators(g);
    const GroupWord w = testing::random_word(g, rng() % 14, rng);
    GroupWord spliced = w;
    const GroupWord& rel = rs.relators[rng() % rs.relators.size()];
    const std::size_t cut = rng() % (w.letters.size() + 1);
    spliced.letters.insert(spliced.letters.begin() + static_cast<long>(cut), rel.letters.begin(),
                           rel.letters.end());
    REQUIRE(dahm_rep(spliced) == dahm_rep(w));
  }
}
