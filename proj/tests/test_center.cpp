#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xha/builders.hpp"
#include "xha/center.hpp"

using namespace xha;

namespace {

/// 1-dim comodule over the single component spanned by group-like index a.
Comodule grade(const CrossedHopfGAlgebra& h, long a) {
  Mat rho(h.dim(0), 1);
  rho.at(a, 0) = Cyc::one();
  return Comodule{0, 1, rho};
}

HalfBraidingCandidate z3_candidate(const CrossedHopfGAlgebra& h, const std::vector<Cyc>& scalars) {
  HalfBraidingCandidate hb;
  hb.object = grade(h, 1);
  for (long b = 0; b < 3; ++b) {
    hb.family.push_back(grade(h, b));
    hb.morphisms.push_back(ComoduleMorphism{grade(h, b), grade(h, b), Mat::identity(1)});
    hb.c.push_back(Mat::scalar(scalars[b]));
  }
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b) hb.tensor_pairs.push_back({a, b, (a + b) % 3});
  return hb;
}

bool some_result(const Report& r, const std::string& name, CheckStatus status, const std::string& witness) {
  for (const auto& c : r.results())
    if (c.name == name && c.status == status && c.witness == witness) return true;
  return false;
}

}  // namespace

TEST_CASE("identity half-braiding on the trivial structure") {
  auto h = group_algebra_crossed(FiniteGroup::trivial());
  HalfBraidingCandidate hb;
  hb.object = trivial_comodule(h);
  hb.family = {trivial_comodule(h)};
  hb.morphisms = {ComoduleMorphism{trivial_comodule(h), trivial_comodule(h), Mat::identity(1)}};
  hb.tensor_pairs = {{0, 0, 0}};
  hb.c = {Mat::identity(1)};
  Report r = verify_half_braiding(h, hb);
  INFO(r.to_text());
  CHECK(r.all_passed());
}

TEST_CASE("the omega^b family is a half-braiding on the one-component k[Z/3]") {
  auto h = group_algebra_one_component(FiniteGroup::cyclic(3));
  Cyc w = Cyc::root_of_unity(3, 1);
  Report good = verify_half_braiding(h, z3_candidate(h, {Cyc::one(), w, w * w}));
  INFO(good.to_text());
  CHECK(good.all_passed());

  // breaking the last scalar breaks multiplicativity exactly at (V_1, V_1)
  Report bad = verify_half_braiding(h, z3_candidate(h, {Cyc::one(), w, Cyc::one()}));
  CHECK_FALSE(bad.all_passed());
  CHECK(bad.check_passed("half-braiding-instance"));
  CHECK(bad.check_passed("half-braiding-naturality"));
  CHECK(some_result(bad, "half-braiding-multiplicativity", CheckStatus::Fail, "(1,1)"));
}

TEST_CASE("tensor pairs without an entry are skipped with a notice") {
  auto h = group_algebra_one_component(FiniteGroup::cyclic(3));
  Cyc w = Cyc::root_of_unity(3, 1);
  auto hb = z3_candidate(h, {Cyc::one(), w, w * w});
  hb.tensor_pairs[4].result = -1;  // (1,1) entry removed
  Report r = verify_half_braiding(h, hb);
  CHECK(some_result(r, "half-braiding-multiplicativity", CheckStatus::Skip, "(1,1) no tensor entry"));
  for (const auto& c : r.results()) CHECK(c.status != CheckStatus::Fail);
}

TEST_CASE("natural solution spaces match the hand-derived dimensions") {
  // trivial structure: one free scalar per family object
  auto t = group_algebra_crossed(FiniteGroup::trivial());
  ObjectFamily tf;
  tf.objects = {trivial_comodule(t), trivial_comodule(t)};
  tf.morphisms = {ComoduleMorphism{trivial_comodule(t), trivial_comodule(t), Mat::identity(1)}};
  CHECK(natural_solution_space(t, trivial_comodule(t), tf).size() == 2);

  // k[Z/3]: three free scalars, with the omega^b family inside the space
  auto h = group_algebra_one_component(FiniteGroup::cyclic(3));
  ObjectFamily fam;
  for (long b = 0; b < 3; ++b) {
    fam.objects.push_back(grade(h, b));
    fam.morphisms.push_back(ComoduleMorphism{grade(h, b), grade(h, b), Mat::identity(1)});
  }
  auto basis = natural_solution_space(h, grade(h, 1), fam);
  REQUIRE(basis.size() == 3);
  Cyc w = Cyc::root_of_unity(3, 1);
  std::vector<Cyc> target = {Cyc::one(), w, w * w};
  Mat sys(3, 3), rhs(3, 1);
  for (long b = 0; b < 3; ++b) {
    for (long k = 0; k < 3; ++k) sys.at(b, k) = as_scalar(basis[k][b]);
    rhs.at(b, 0) = target[b];
  }
  CHECK(sys.solve(rhs).has_value());

  // empty family: no unknowns, no constraints
  CHECK(natural_solution_space(h, grade(h, 1), ObjectFamily{}).empty());
}

TEST_CASE("braiding-induced families are half-braidings on the fixtures") {
  // crossed k[Z/4] with the bicharacter cobraiding, U ranging over the regulars
  auto h = group_algebra_crossed(FiniteGroup::cyclic(4));
  auto g = bicharacter_cobraiding(4, 4, 1);
  for (long a = 0; a < 4; ++a) {
    HalfBraidingCandidate hb;
    hb.object = regular_comodule(h, a);
    for (long b = 0; b < 4; ++b) {
      hb.family.push_back(regular_comodule(h, b));
      hb.morphisms.push_back(
          ComoduleMorphism{regular_comodule(h, b), regular_comodule(h, b), Mat::identity(1)});
      hb.c.push_back(braiding_map(h, g, hb.object, hb.family[b]).f);
    }
    for (long i = 0; i < 4; ++i)
      for (long j = 0; j < 4; ++j) hb.tensor_pairs.push_back({i, j, (i + j) % 4});
    Report r = verify_half_braiding(h, hb);
    INFO(r.to_text());
    CHECK(r.all_passed());
  }

  // the four-dimensional algebra: U = V_g against the group-like family
  auto sw = sweedler_algebra();
  auto sc = sweedler_cobraiding(sw, Cyc::one());
  Mat vg_rho(4, 1);
  vg_rho.at(1, 0) = Cyc::one();
  Comodule vg{0, 1, vg_rho};
  HalfBraidingCandidate hb;
  hb.object = vg;
  hb.family = {trivial_comodule(sw), vg};
  hb.tensor_pairs = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  for (const Comodule& v : hb.family) hb.c.push_back(braiding_map(sw, sc, vg, v).f);
  Report r = verify_half_braiding(sw, hb);
  INFO(r.to_text());
  CHECK(r.all_passed());
}

TEST_CASE("the natural solution space contains the braiding-induced family") {
  auto h = group_algebra_crossed(FiniteGroup::cyclic(4));
  auto g = bicharacter_cobraiding(4, 4, 1);
  ObjectFamily fam;
  for (long b = 0; b < 4; ++b) fam.objects.push_back(regular_comodule(h, b));
  Comodule u = regular_comodule(h, 1);
  auto basis = natural_solution_space(h, u, fam);
  REQUIRE(basis.size() == 4);
  Mat sys(4, 4), rhs(4, 1);
  for (long b = 0; b < 4; ++b) {
    for (long k = 0; k < 4; ++k) sys.at(b, k) = as_scalar(basis[k][b]);
    rhs.at(b, 0) = as_scalar(braiding_map(h, g, u, fam.objects[b]).f);
  }
  CHECK(sys.solve(rhs).has_value());
}

TEST_CASE("the balanced tensor product multiplies twists through the double braiding") {
  // trivial structure: plain product of scalars
  auto t = group_algebra_crossed(FiniteGroup::trivial());
  auto tc = counit_cobraiding(t);
  DZObject x{trivial_comodule(t), Mat::scalar(Cyc(3))};
  DZObject y{trivial_comodule(t), Mat::scalar(Cyc(5))};
  CHECK(as_scalar(dz_twist_tensor(t, tc, x, y).t) == Cyc(15));

  // crossed k[Z/4]: grades a,b give the factor i^{2ab}
  auto h = group_algebra_crossed(FiniteGroup::cyclic(4));
  auto g = bicharacter_cobraiding(4, 4, 1);
  Cyc i = Cyc::root_of_unity(4, 1);
  for (long a = 0; a < 4; ++a)
    for (long b = 0; b < 4; ++b) {
      DZObject da{regular_comodule(h, a), Mat::scalar(i)};
      DZObject db{regular_comodule(h, b), Mat::scalar(i * i)};
      DZObject prod = dz_twist_tensor(h, g, da, db);
      CHECK(prod.object.component == (a + b) % 4);
      CHECK(as_scalar(prod.t) == Cyc::root_of_unity(4, (2 * a * b) % 4) * i * (i * i));
    }

  // associativity on a triple of 1-dim objects
  DZObject d1{regular_comodule(h, 1), Mat::scalar(i)};
  DZObject d2{regular_comodule(h, 2), Mat::scalar(-Cyc::one())};
  DZObject d3{regular_comodule(h, 3), Mat::scalar(i)};
  DZObject left = dz_twist_tensor(h, g, dz_twist_tensor(h, g, d1, d2), d3);
  DZObject right = dz_twist_tensor(h, g, d1, dz_twist_tensor(h, g, d2, d3));
  CHECK(left.object.component == right.object.component);
  CHECK(left.t == right.t);
}

TEST_CASE("ribbon membership on the crossed k[Z/4] fixture") {
  auto h = group_algebra_crossed(FiniteGroup::cyclic(4));
  auto g = bicharacter_cobraiding(4, 4, 1);
  Comodule u1 = regular_comodule(h, 1);
  auto witness = dual_comodule(h, u1);
  Cyc i = Cyc::root_of_unity(4, 1);

  // t = i: theta^-2 = -1 matches the duality loop omega = -1
  Report member = ribbon_membership(h, g, DZObject{u1, Mat::scalar(i)}, witness);
  INFO(member.to_text());
  CHECK(member.all_passed());

  // t = 1: only the omega identity fails (left side 1, loop -1)
  Report reject = ribbon_membership(h, g, DZObject{u1, Mat::identity(1)}, witness);
  CHECK_FALSE(reject.all_passed());
  CHECK(reject.check_passed("ribbon-object"));
  CHECK(reject.check_passed("ribbon-good"));
  CHECK(reject.check_passed("ribbon-tortility"));
  CHECK_FALSE(reject.check_passed("ribbon-omega"));

  // missing witnesses are an input error
  Report missing = ribbon_membership(h, g, DZObject{u1, Mat::scalar(i)}, std::nullopt);
  CHECK(missing.has_input_error());
}

TEST_CASE("ribbon membership of the trivial balanced object and of a product of members") {
  auto t = group_algebra_crossed(FiniteGroup::trivial());
  auto tc = counit_cobraiding(t);
  Comodule u = trivial_comodule(t);
  CHECK(ribbon_membership(t, tc, DZObject{u, Mat::identity(1)}, dual_comodule(t, u)).all_passed());

  // closure spot check: the product of two grade-1 members is again a member
  auto h = group_algebra_crossed(FiniteGroup::cyclic(4));
  auto g = bicharacter_cobraiding(4, 4, 1);
  Cyc i = Cyc::root_of_unity(4, 1);
  DZObject m1{regular_comodule(h, 1), Mat::scalar(i)};
  DZObject prod = dz_twist_tensor(h, g, m1, m1);
  CHECK(as_scalar(prod.t) == Cyc::one());
  Report r = ribbon_membership(h, g, prod, dual_comodule(h, prod.object));
  INFO(r.to_text());
  CHECK(r.all_passed());
}
