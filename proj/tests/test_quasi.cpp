#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xha/builders.hpp"
#include "xha/quasi.hpp"

#include <random>

using namespace xha;

namespace {

// Brute-force bicharacter test for scalar families on 1-dimensional
// components: multiplicativity in both slots over the whole group.
bool is_bicharacter(const FiniteGroup& g, const std::vector<std::vector<Mat>>& gamma) {
  auto v = [&](long a, long b) { return gamma[a][b].at(0, 0); };
  for (long a = 0; a < g.order(); ++a)
    for (long b = 0; b < g.order(); ++b)
      for (long c = 0; c < g.order(); ++c) {
        if (v(g.mul(a, b), c) != v(a, c) * v(b, c)) return false;
        if (v(a, g.mul(b, c)) != v(a, b) * v(a, c)) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("counit cobraiding and cotwist pass on the trivial structure") {
  auto h = group_algebra_crossed(FiniteGroup::trivial());
  auto c = counit_cobraiding(h);
  auto t = counit_cotwist(h);
  CHECK(verify_cobraiding(h, c).all_passed());
  CHECK(verify_cotwist(h, c, t).all_passed());
  // also over a nonabelian group
  auto s3 = group_algebra_crossed(FiniteGroup::symmetric3());
  CHECK(verify_cobraiding(s3, counit_cobraiding(s3)).all_passed());
  CHECK(verify_cotwist(s3, counit_cobraiding(s3), counit_cotwist(s3)).all_passed());
}

TEST_CASE("the i^{ab} bicharacter and i^{a^2} quadratic form on k[Z/4] pass all ten identities") {
  auto h = group_algebra_crossed(FiniteGroup::cyclic(4));
  auto c = bicharacter_cobraiding(4, 4, 1);
  auto t = quadratic_cotwist(4, 4, 1);
  Report rc = verify_cobraiding(h, c);
  INFO(rc.to_text());
  CHECK(rc.all_passed());
  Report rt = verify_cotwist(h, c, t);
  INFO(rt.to_text());
  CHECK(rt.all_passed());
  // ten distinct named identities altogether
  CHECK(rc.check_passed("cobraiding-convolution-inverse"));
  CHECK(rc.check_passed("cobraiding-quasi-commutativity"));
  CHECK(rc.check_passed("cobraiding-mult-first-slot"));
  CHECK(rc.check_passed("cobraiding-mult-second-slot"));
  CHECK(rc.check_passed("cobraiding-conjugation-invariance"));
  CHECK(rt.check_passed("cotwist-convolution-inverse"));
  CHECK(rt.check_passed("cotwist-conjugation-commutation"));
  CHECK(rt.check_passed("cotwist-product-expansion"));
  CHECK(rt.check_passed("cotwist-antipode"));
  CHECK(rt.check_passed("cotwist-conjugation-invariance"));
}

TEST_CASE("setting gamma(g1,g1) = 2 breaks multiplicativity in the first slot") {
  auto h = group_algebra_crossed(FiniteGroup::cyclic(4));
  auto c = bicharacter_cobraiding(4, 4, 1);
  c.gamma[1][1] = Mat::scalar(Cyc(2));
  c.gamma_inv[1][1] = Mat::scalar(Cyc(Rat(1, 2)));
  Report r = verify_cobraiding(h, c);
  CHECK_FALSE(r.all_passed());
  CHECK_FALSE(r.check_passed("cobraiding-mult-first-slot"));
  bool witnessed = false;
  for (const auto& res : r.results())
    if (res.name == "cobraiding-mult-first-slot" && res.status == CheckStatus::Fail)
      witnessed = witnessed || res.witness.find("(g1,g1;g1)") != std::string::npos ||
                  res.witness.find("(g1,g1;") != std::string::npos;
  CHECK(witnessed);
}

TEST_CASE("a vanishing cotwist value fails convolution invertibility") {
  auto h = group_algebra_crossed(FiniteGroup::cyclic(4));
  auto c = bicharacter_cobraiding(4, 4, 1);
  auto t = quadratic_cotwist(4, 4, 1);
  t.tau[1] = Mat::scalar(Cyc::zero());
  Report r = verify_cotwist(h, c, t);
  CHECK_FALSE(r.check_passed("cotwist-convolution-inverse"));
}

TEST_CASE("pointed group algebras carry bicharacter cobraidings and quadratic cotwists") {
  // H_1 = k[Z/3] over the trivial group, gamma(e_a, e_b) = omega^{ab}.
  auto z3 = group_algebra_one_component(FiniteGroup::cyclic(3));
  auto c3 = pointed_bicharacter_cobraiding(3, 3, 1);
  auto t3 = pointed_quadratic_cotwist(3, 3, 1);
  Report rc = verify_cobraiding(z3, c3);
  INFO(rc.to_text());
  CHECK(rc.all_passed());
  Report rt = verify_cotwist(z3, c3, t3);
  INFO(rt.to_text());
  CHECK(rt.all_passed());

  // H_1 = k[Z/2], gamma = (-1)^{ab}: the symmetric (unitary) case.
  auto z2 = group_algebra_one_component(FiniteGroup::cyclic(2));
  auto c2 = pointed_bicharacter_cobraiding(2, 2, 1);
  auto t2 = pointed_quadratic_cotwist(2, 2, 1);
  CHECK(verify_cobraiding(z2, c2).all_passed());
  CHECK(verify_cotwist(z2, c2, t2).all_passed());
}

TEST_CASE("on 1-dimensional components over abelian G the verifier accepts exactly the bicharacters") {
  std::mt19937 rng(20240817);
  for (long n : {2L, 3L, 4L}) {
    auto g = FiniteGroup::cyclic(n);
    auto h = group_algebra_crossed(g);
    for (int trial = 0; trial < 30; ++trial) {
      Cobraiding c;
      c.gamma.assign(n, std::vector<Mat>(n));
      c.gamma_inv.assign(n, std::vector<Mat>(n));
      if (trial % 3 == 0) {
        // planted bicharacter zeta_n^{q a b}
        long q = static_cast<long>(rng() % static_cast<unsigned long>(n));
        c = bicharacter_cobraiding(n, n, q);
      } else {
        for (long a = 0; a < n; ++a)
          for (long b = 0; b < n; ++b) {
            long k = static_cast<long>(rng() % static_cast<unsigned long>(2 * n));
            Cyc v = Cyc::root_of_unity(2 * n, k);
            c.gamma[a][b] = Mat::scalar(v);
            c.gamma_inv[a][b] = Mat::scalar(v.inverse());
          }
      }
      bool verdict = verify_cobraiding(h, c).all_passed();
      CAPTURE(n);
      CAPTURE(trial);
      CHECK(verdict == is_bicharacter(g, c.gamma));
    }
  }
}

TEST_CASE("the linear solver recovers convolution inverses") {
  auto h = group_algebra_crossed(FiniteGroup::cyclic(4));
  auto c = bicharacter_cobraiding(4, 4, 1);
  auto solved = solve_cobraiding_inverse(h, c.gamma);
  REQUIRE(solved.has_value());
  for (long a = 0; a < 4; ++a)
    for (long b = 0; b < 4; ++b) CHECK((*solved)[a][b] == c.gamma_inv[a][b]);

  auto t = quadratic_cotwist(4, 4, 1);
  auto tsolved = solve_cotwist_inverse(h, t.tau);
  REQUIRE(tsolved.has_value());
  for (long a = 0; a < 4; ++a) CHECK((*tsolved)[a] == t.tau_inv[a]);

  // pointed case: a genuinely multi-dimensional convolution
  auto z3 = group_algebra_one_component(FiniteGroup::cyclic(3));
  auto c3 = pointed_bicharacter_cobraiding(3, 3, 1);
  auto s3 = solve_cobraiding_inverse(z3, c3.gamma);
  REQUIRE(s3.has_value());
  CHECK((*s3)[0][0] == c3.gamma_inv[0][0]);

  // a vanishing value has no convolution inverse
  auto bad = quadratic_cotwist(4, 4, 1);
  bad.tau[1] = Mat::scalar(Cyc::zero());
  CHECK_FALSE(solve_cotwist_inverse(h, bad.tau).has_value());
}

TEST_CASE("a wrong declared inverse fails only the convolution check") {
  auto h = group_algebra_crossed(FiniteGroup::cyclic(4));
  auto c = bicharacter_cobraiding(4, 4, 1);
  c.gamma_inv[1][1] = Mat::scalar(Cyc(7));
  Report r = verify_cobraiding(h, c);
  CHECK_FALSE(r.check_passed("cobraiding-convolution-inverse"));
  CHECK(r.check_passed("cobraiding-mult-first-slot"));
  CHECK(r.check_passed("cobraiding-quasi-commutativity"));
}
