#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xha/builders.hpp"
#include "xha/comod.hpp"

using namespace xha;

TEST_CASE("regular and trivial comodules satisfy the coaction laws") {
  for (const CrossedHopfGAlgebra& h :
       {group_algebra_crossed(FiniteGroup::symmetric3()), group_algebra_crossed(FiniteGroup::cyclic(4)),
        group_algebra_one_component(FiniteGroup::cyclic(3)), sweedler_algebra()}) {
    CHECK(is_comodule(h, trivial_comodule(h)));
    for (long a = 0; a < h.group().order(); ++a) CHECK(is_comodule(h, regular_comodule(h, a)));
  }
}

TEST_CASE("tensoring with the unit comodule is the identity") {
  auto h = group_algebra_crossed(FiniteGroup::cyclic(4));
  for (long a = 0; a < 4; ++a) {
    Comodule m = regular_comodule(h, a);
    CHECK(same_comodule(tensor_comodules(h, m, trivial_comodule(h)), m));
    CHECK(same_comodule(tensor_comodules(h, trivial_comodule(h), m), m));
  }
  auto sw = sweedler_algebra();
  Comodule r = regular_comodule(sw, 0);
  CHECK(same_comodule(tensor_comodules(sw, r, trivial_comodule(sw)), r));
}

TEST_CASE("tensor products of regulars live in the product component and stay comodules") {
  auto h = group_algebra_crossed(FiniteGroup::cyclic(4));
  for (long a = 0; a < 4; ++a)
    for (long b = 0; b < 4; ++b) {
      Comodule t = tensor_comodules(h, regular_comodule(h, a), regular_comodule(h, b));
      CHECK(t.component == h.group().mul(a, b));
      CHECK(is_comodule(h, t));
    }
  auto sw = sweedler_algebra();
  Comodule t = tensor_comodules(sw, regular_comodule(sw, 0), regular_comodule(sw, 0));
  CHECK(is_comodule(sw, t));
  // strict associativity of the triple product
  Comodule left = tensor_comodules(sw, t, regular_comodule(sw, 0));
  Comodule right = tensor_comodules(sw, regular_comodule(sw, 0), t);
  CHECK(same_comodule(left, right));
}

TEST_CASE("conjugation functor: identity at 1, composition law, hat-phi isomorphisms") {
  auto h = group_algebra_crossed(FiniteGroup::symmetric3());
  const FiniteGroup& g = h.group();
  for (long a = 0; a < g.order(); ++a) {
    Comodule m = regular_comodule(h, a);
    CHECK(same_comodule(conjugate_comodule(h, m, g.identity()), m));
    for (long b1 = 0; b1 < g.order(); ++b1) {
      for (long b2 = 0; b2 < g.order(); ++b2)
        CHECK(same_comodule(conjugate_comodule(h, conjugate_comodule(h, m, b2), b1),
                            conjugate_comodule(h, m, g.mul(b1, b2))));
      ComoduleMorphism iso = hat_phi_iso(h, a, b1);
      CHECK(is_colinear(h, iso));
      CHECK(iso.f.is_invertible());
      CHECK(is_comodule(h, conjugate_comodule(h, m, b1)));
    }
  }
  // also on a structure with a higher-dimensional component
  auto sw = sweedler_algebra();
  ComoduleMorphism iso = hat_phi_iso(sw, 0, 0);
  CHECK(is_colinear(sw, iso));
}

TEST_CASE("duals: coactions, zig-zags, and the group-algebra picture") {
  auto h = group_algebra_crossed(FiniteGroup::cyclic(4));
  for (long a = 0; a < 4; ++a) {
    DualComodule d = dual_comodule(h, regular_comodule(h, a));
    CHECK(d.dual.component == h.group().inv(a));
    CHECK(is_comodule(h, d.dual));
    // for group-like components the dual of the regular at a is the regular at a^-1
    CHECK(same_comodule(d.dual, regular_comodule(h, h.group().inv(a))));
  }
  // zig-zag identities on a structure with nontrivial antipode
  auto sw = sweedler_algebra();
  Comodule m = regular_comodule(sw, 0);
  DualComodule d = dual_comodule(sw, m);
  CHECK(is_comodule(sw, d.dual));
  Mat zig1 = Mat::identity(m.dim).kron(d.evaluation.f) * d.coevaluation.f.kron(Mat::identity(m.dim));
  Mat zig2 = d.evaluation.f.kron(Mat::identity(m.dim)) * Mat::identity(m.dim).kron(d.coevaluation.f);
  CHECK(zig1 == Mat::identity(m.dim));
  CHECK(zig2 == Mat::identity(m.dim));
  // dual of the trivial comodule is trivial
  auto t = dual_comodule(sw, trivial_comodule(sw));
  CHECK(same_comodule(t.dual, trivial_comodule(sw)));
}

TEST_CASE("braiding maps on k[Z/4] are the i^{ab}-scaled swaps") {
  auto h = group_algebra_crossed(FiniteGroup::cyclic(4));
  auto c = bicharacter_cobraiding(4, 4, 1);
  for (long a = 0; a < 4; ++a)
    for (long b = 0; b < 4; ++b) {
      ComoduleMorphism cm = braiding_map(h, c, regular_comodule(h, a), regular_comodule(h, b));
      CHECK(cm.f == Mat::scalar(Cyc::root_of_unity(4, (a * b) % 4)));
      CHECK(is_colinear(h, cm));
    }
}

TEST_CASE("braiding and twist axioms hold on the k[Z/4] fixture family") {
  auto h = group_algebra_crossed(FiniteGroup::cyclic(4));
  auto c = bicharacter_cobraiding(4, 4, 1);
  auto t = quadratic_cotwist(4, 4, 1);
  ObjectFamily fam;
  for (long a = 0; a < 4; ++a) fam.objects.push_back(regular_comodule(h, a));
  fam.objects.push_back(trivial_comodule(h));
  for (long a = 0; a < 4; ++a) {
    Comodule r = regular_comodule(h, a);
    fam.morphisms.push_back({r, r, Mat::scalar(Cyc(a + 1))});  // scalar endomorphisms
  }
  auto braid = braiding_from_cobraiding(h, c);
  auto twist = twist_from_cotwist(h, t);
  Report rb = verify_braiding_axioms(h, fam, braid);
  INFO(rb.to_text());
  CHECK(rb.all_passed());
  Report rt = verify_twist_axioms(h, fam, braid, twist);
  INFO(rt.to_text());
  CHECK(rt.all_passed());
  Report tor = verify_tortility(h, fam, twist);
  INFO(tor.to_text());
  CHECK(tor.all_passed());
}

TEST_CASE("a sign-corrupted cotwist keeps naturality but fails the tensor formula") {
  auto h = group_algebra_crossed(FiniteGroup::cyclic(4));
  auto c = bicharacter_cobraiding(4, 4, 1);
  auto t = quadratic_cotwist(4, 4, 1);
  // Flipping the sign on the odd grades alone multiplies tau by the order-2
  // character (-1)^a, which every axiom absorbs; flipping one even grade is a
  // genuine corruption.
  t.tau[2] = t.tau[2] * Cyc(-1);
  t.tau_inv[2] = t.tau_inv[2] * Cyc(-1);
  ObjectFamily fam;
  for (long a = 0; a < 4; ++a) fam.objects.push_back(regular_comodule(h, a));
  for (long a = 0; a < 4; ++a) {
    Comodule r = regular_comodule(h, a);
    fam.morphisms.push_back({r, r, Mat::scalar(Cyc(2))});
  }
  Report r = verify_twist_axioms(h, fam, braiding_from_cobraiding(h, c), twist_from_cotwist(h, t));
  CHECK(r.check_passed("twist-naturality"));
  CHECK_FALSE(r.check_passed("twist-tensor"));
  bool at_11 = false;
  for (const auto& res : r.results())
    if (res.name == "twist-tensor" && res.status == CheckStatus::Fail && res.witness.find("(1,1)") == 0) at_11 = true;
  CHECK(at_11);
}

TEST_CASE("axioms hold on the pointed k[Z/3] and symmetric k[Z/2] fixtures") {
  auto z3 = group_algebra_one_component(FiniteGroup::cyclic(3));
  auto c3 = pointed_bicharacter_cobraiding(3, 3, 1);
  auto t3 = pointed_quadratic_cotwist(3, 3, 1);
  ObjectFamily fam;
  fam.objects.push_back(regular_comodule(z3, 0));
  fam.objects.push_back(trivial_comodule(z3));
  fam.morphisms.push_back(dual_comodule(z3, regular_comodule(z3, 0)).evaluation);
  CHECK(verify_braiding_axioms(z3, fam, braiding_from_cobraiding(z3, c3)).all_passed());
  CHECK(verify_twist_axioms(z3, fam, braiding_from_cobraiding(z3, c3), twist_from_cotwist(z3, t3)).all_passed());
  CHECK(verify_tortility(z3, fam, twist_from_cotwist(z3, t3)).all_passed());

  auto z2 = group_algebra_one_component(FiniteGroup::cyclic(2));
  auto c2 = pointed_bicharacter_cobraiding(2, 2, 1);
  auto t2 = pointed_quadratic_cotwist(2, 2, 1);
  ObjectFamily fam2;
  fam2.objects.push_back(regular_comodule(z2, 0));
  fam2.objects.push_back(trivial_comodule(z2));
  CHECK(verify_braiding_axioms(z2, fam2, braiding_from_cobraiding(z2, c2)).all_passed());
  CHECK(verify_twist_axioms(z2, fam2, braiding_from_cobraiding(z2, c2), twist_from_cotwist(z2, t2)).all_passed());
  CHECK(verify_tortility(z2, fam2, twist_from_cotwist(z2, t2)).all_passed());
}

TEST_CASE("extraction round-trips the cobraiding and cotwist") {
  auto h = group_algebra_crossed(FiniteGroup::cyclic(4));
  auto c = bicharacter_cobraiding(4, 4, 1);
  auto t = quadratic_cotwist(4, 4, 1);
  std::vector<std::vector<Mat>> braidings(4, std::vector<Mat>(4));
  std::vector<Mat> twists;
  for (long a = 0; a < 4; ++a) {
    for (long b = 0; b < 4; ++b) braidings[a][b] = braiding_map(h, c, regular_comodule(h, a), regular_comodule(h, b)).f;
    twists.push_back(twist_map(h, t, regular_comodule(h, a)).f);
  }
  Cobraiding back = extract_cobraiding(h, braidings);
  Cotwist tback = extract_cotwist(h, twists);
  for (long a = 0; a < 4; ++a) {
    CHECK(tback.tau[a] == t.tau[a]);
    CHECK(tback.tau_inv[a] == t.tau_inv[a]);
    for (long b = 0; b < 4; ++b) {
      CHECK(back.gamma[a][b] == c.gamma[a][b]);
      CHECK(back.gamma_inv[a][b] == c.gamma_inv[a][b]);
    }
  }
  // the other direction: braiding maps rebuilt from the extraction agree
  for (long a = 0; a < 4; ++a)
    for (long b = 0; b < 4; ++b)
      CHECK(braiding_map(h, back, regular_comodule(h, a), regular_comodule(h, b)).f == braidings[a][b]);

  // and on the pointed fixture with genuinely multi-dimensional components
  auto z3 = group_algebra_one_component(FiniteGroup::cyclic(3));
  auto c3 = pointed_bicharacter_cobraiding(3, 3, 1);
  Cobraiding b3 = extract_cobraiding(z3, {{braiding_map(z3, c3, regular_comodule(z3, 0), regular_comodule(z3, 0)).f}});
  CHECK(b3.gamma[0][0] == c3.gamma[0][0]);
}

TEST_CASE("extraction rejects non-colinear input") {
  auto h = group_algebra_crossed(FiniteGroup::cyclic(2));
  std::vector<std::vector<Mat>> bad(2, std::vector<Mat>(2, Mat::scalar(Cyc::one())));
  // a braiding map on 1-dim comodules is a scalar; colinearity always holds,
  // so corrupt a shape-compatible multi-dim case instead
  auto z3 = group_algebra_one_component(FiniteGroup::cyclic(3));
  Mat not_colinear = Mat::identity(9);
  not_colinear.at(0, 1) = Cyc::one();
  CHECK_THROWS_AS(extract_cobraiding(z3, {{not_colinear}}), ArithmeticError);
  Mat bad_twist = Mat::identity(3);
  bad_twist.at(0, 1) = Cyc::one();
  CHECK_THROWS_AS(extract_cotwist(z3, {bad_twist}), ArithmeticError);
  (void)bad;
}

TEST_CASE("missing braiding instances are reported as skips, not failures") {
  auto h = group_algebra_crossed(FiniteGroup::cyclic(2));
  auto c = bicharacter_cobraiding(2, 2, 1);
  ObjectFamily fam;
  for (long a = 0; a < 2; ++a) fam.objects.push_back(regular_comodule(h, a));
  auto partial = [&](const Comodule& m, const Comodule& n) -> std::optional<Mat> {
    if (m.component == 1 && n.component == 1) return std::nullopt;
    return braiding_map(h, c, m, n).f;
  };
  Report r = verify_braiding_axioms(h, fam, partial);
  CHECK(r.all_passed());  // skips do not fail
  bool has_skip = false;
  for (const auto& res : r.results()) has_skip = has_skip || res.status == CheckStatus::Skip;
  CHECK(has_skip);
}

TEST_CASE("trivial braiding on the trivial structure gives gamma = eps (x) eps") {
  auto h = group_algebra_crossed(FiniteGroup::trivial());
  // identity swap as the braiding on the regulars
  std::vector<std::vector<Mat>> braidings = {{Mat::identity(1)}};
  Cobraiding c = extract_cobraiding(h, braidings);
  CHECK(c.gamma[0][0] == h.epsilon(0).kron(h.epsilon(0)));
}
