#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "ringwicket/coset.hpp"
#include "ringwicket/quotients.hpp"
#include "ringwicket/verify.hpp"
#include "support/random_words.hpp"

using namespace ringwicket;

namespace {

// Signed permutations as matrices with entries in {-1,0,1}: the concrete
// oracle for the semidirect product law.
struct SignedMatrix {
  int n;
  std::vector<int> a;  // row-major

  static SignedMatrix from(const SignedPerm& g) {
    SignedMatrix m{g.n(), std::vector<int>(static_cast<std::size_t>(g.n()) * g.n(), 0)};
    for (int k = 1; k <= g.n(); ++k)
      m.a[static_cast<std::size_t>(g.p(k) - 1) * m.n + (k - 1)] =
          g.sign[static_cast<std::size_t>(k - 1)];
    return m;
  }

  friend SignedMatrix operator*(const SignedMatrix& x, const SignedMatrix& y) {
    SignedMatrix r{x.n, std::vector<int>(static_cast<std::size_t>(x.n) * x.n, 0)};
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k)
        for (int j = 0; j < x.n; ++j)
          r.a[static_cast<std::size_t>(i) * x.n + j] +=
              x.a[static_cast<std::size_t>(i) * x.n + k] *
              y.a[static_cast<std::size_t>(k) * x.n + j];
    return r;
  }
  friend bool operator==(const SignedMatrix& x, const SignedMatrix& y) {
    return x.n == y.n && x.a == y.a;
  }
};

SignedPerm random_signed(int n, std::mt19937_64& rng) {
  SignedPerm g(n);
  for (int k = n; k >= 2; --k) {
    const int pick = 1 + static_cast<int>(rng() % k);
    std::swap(g.p.img[static_cast<std::size_t>(k - 1)],
              g.p.img[static_cast<std::size_t>(pick - 1)]);
  }
  for (int k = 0; k < n; ++k) g.sign[static_cast<std::size_t>(k)] = rng() % 2 ? 1 : -1;
  return g;
}

}  // namespace

TEST_CASE("permutation images") {
  REQUIRE(cycle_string(perm_image(parse_word("s1", {Family::R, 3}))) == "(1 2)");
  REQUIRE(perm_image(parse_word("t3", {Family::R, 3})).is_identity());
  REQUIRE(perm_image(parse_word("r1 s1", {Family::R, 3})).is_identity());
  REQUIRE(cycle_string(perm_image(parse_word("s1 s2", {Family::R, 3}))) == "(1 2 3)");
}

TEST_CASE("signed and twist images") {
  const SignedPerm s = signed_image(parse_word("t1", {Family::R, 3}));
  REQUIRE(s.p.is_identity());
  REQUIRE(s.sign == std::vector<int>{-1, 1, 1});
  REQUIRE(signed_image(parse_word("t1 t1", {Family::R, 3})).is_identity());

  const TwistPerm t = twist_image(parse_word("t1^5", {Family::VR, 3}));
  REQUIRE(t.p.is_identity());
  REQUIRE(t.twist == std::vector<long long>{5, 0, 0});
  REQUIRE(!t.is_identity());

  // conjugation moves the twist coordinate along the permutation
  const SignedPerm c = signed_image(parse_word("s1 t1 s1", {Family::R, 3}));
  REQUIRE(c.p.is_identity());
  REQUIRE(c.sign == std::vector<int>{1, -1, 1});
}

TEST_CASE("signed image matches the matrix oracle") {
  std::mt19937_64 rng(12);
  for (int n : {2, 3, 4})
    for (int trial = 0; trial < 200; ++trial) {
      const SignedPerm a = random_signed(n, rng);
      const SignedPerm b = random_signed(n, rng);
      REQUIRE(SignedMatrix::from(a * b) == SignedMatrix::from(a) * SignedMatrix::from(b));
    }
}

TEST_CASE("images are homomorphic and reduction-invariant") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const GroupId g{Family::R, 4};
    const GroupWord w1 = testing::random_word(g, rng() % 18, rng);
    const GroupWord w2 = testing::random_word(g, rng() % 18, rng);
    REQUIRE(signed_image(concat(w1, w2)) == signed_image(w1) * signed_image(w2));
    REQUIRE(perm_image(free_reduce(w1)) == perm_image(w1));
    const GroupId v{Family::VR, 4};
    const GroupWord w3 = testing::random_word(v, rng() % 18, rng);
    const GroupWord w4 = testing::random_word(v, rng() % 18, rng);
    REQUIRE(twist_image(concat(w3, w4)) == twist_image(w3) * twist_image(w4));
  }
}

TEST_CASE("twists mod 2 give the signs") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 150; ++trial) {
    const GroupWord w = testing::random_word({Family::VR, 4}, rng() % 24, rng);
    const TwistPerm t = twist_image(w);
    const SignedPerm s = signed_image(GroupWord(GroupId{Family::R, 4}, w.letters));
    REQUIRE(t.p == s.p);
    for (int k = 0; k < 4; ++k)
      REQUIRE((t.twist[static_cast<std::size_t>(k)] % 2 != 0) ==
              (s.sign[static_cast<std::size_t>(k)] == -1));
  }
}

TEST_CASE("R_n surjects onto the signed permutation group (n <= 3)") {
  for (int n : {2, 3}) {
    const GroupId g{Family::R, n};
    std::vector<GroupWord> gens;
    for (int i = 1; i <= n - 1; ++i) {
      gens.push_back(parse_word("r" + std::to_string(i), g));
      gens.push_back(parse_word("s" + std::to_string(i), g));
    }
    for (int i = 1; i <= n; ++i) gens.push_back(parse_word("t" + std::to_string(i), g));
    // BFS over products of generator images
    std::set<std::string> seen;
    std::vector<SignedPerm> frontier = {SignedPerm(n)};
    seen.insert(to_string(SignedPerm(n)));
    while (!frontier.empty()) {
      std::vector<SignedPerm> next;
      for (const auto& e : frontier)
        for (const auto& w : gens) {
          const SignedPerm f = e * signed_image(w);
          if (seen.insert(to_string(f)).second) next.push_back(f);
        }
      frontier = std::move(next);
    }
    std::size_t order = 1;
    for (int k = 2; k <= n; ++k) order *= static_cast<std::size_t>(k);
    order <<= n;
    REQUIRE(seen.size() == order);
  }
}

TEST_CASE("canonical section splits the signed quotient") {
  const GroupId g{Family::R, 3};
  // exhaustive over Sigma_3^±
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 500; ++trial) {
    const SignedPerm target = random_signed(3, rng);
    REQUIRE(signed_image(section_word(target, g)) == target);
  }
  // stripping the section leaves a pure untwisted word
  for (int trial = 0; trial < 100; ++trial) {
    const GroupWord w = testing::random_word(g, rng() % 24, rng);
    const GroupWord stripped = concat(w, invert(section_word(signed_image(w), g)));
    REQUIRE(is_pure(stripped));
    REQUIRE(in_untwisted(stripped));
  }
}

TEST_CASE("purity predicates") {
  REQUIRE(is_pure(parse_word("r1 s1^-1", {Family::R, 2})));
  REQUIRE(!in_untwisted(parse_word("t1", {Family::R, 2})));
  REQUIRE(in_untwisted(parse_word("s1 r2", {Family::R, 3})));
}

TEST_CASE("todd_coxeter recovers the symmetric group orders") {
  for (int n = 2; n <= 4; ++n) {
    const CosetTable t = todd_coxeter(sigma_presentation(n, true), {}, 100000);
    REQUIRE(t.complete());
    std::size_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= static_cast<std::size_t>(k);
    REQUIRE(t.coset_count == fact);
  }
}

TEST_CASE("todd_coxeter on the rho=sigma quotient of R_n") {
  for (int n : {2, 3}) {
    const GroupId g{Family::R, n};
    std::vector<GroupWord> extra;
    for (int i = 1; i <= n - 1; ++i)
      extra.push_back(parse_word("r" + std::to_string(i) + " s" + std::to_string(i) + "^-1", g));
    const CosetTable t = todd_coxeter(relators(g), extra, {}, 100000);
    REQUIRE(t.complete());
    std::size_t order = 1;
    for (int k = 2; k <= n; ++k) order *= static_cast<std::size_t>(k);
    order <<= n;
    REQUIRE(t.coset_count == order);
  }
}

TEST_CASE("todd_coxeter subgroup cases") {
  const GroupId g{Family::R, 3};
  // whole generator set -> one coset
  std::vector<GroupWord> all;
  for (const char* s : {"r1", "r2", "s1", "s2", "t1", "t2", "t3"})
    all.push_back(parse_word(s, g));
  REQUIRE(todd_coxeter(relators(g), {}, all, 100000).coset_count == 1);
  // untwisted subgroup has index 2^n
  std::vector<GroupWord> untwisted;
  for (const char* s : {"r1", "r2", "s1", "s2"}) untwisted.push_back(parse_word(s, g));
  const CosetTable t = todd_coxeter(relators(g), {}, untwisted, 100000);
  REQUIRE(t.complete());
  REQUIRE(t.coset_count == 8);
}

TEST_CASE("todd_coxeter reports overflow on an infinite enumeration") {
  const CosetTable t = todd_coxeter(sigma_presentation(3, false), {}, 500);
  REQUIRE(!t.complete());
  REQUIRE(t.status == CosetTable::Status::Overflow);
}

TEST_CASE("coset table csv is standardized and deterministic") {
  const CosetTable t1 = todd_coxeter(sigma_presentation(3, true), {}, 100000);
  const CosetTable t2 = todd_coxeter(sigma_presentation(3, true), {}, 100000);
  const std::string csv = coset_table_csv(t1);
  REQUIRE(csv == coset_table_csv(t2));
  REQUIRE(csv.rfind("coset,generator,target\n", 0) == 0);
  REQUIRE(csv.find("1,s1,") != std::string::npos);
  REQUIRE(csv.find("s1^-1") != std::string::npos);
}
