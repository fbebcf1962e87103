#include "xha/builders.hpp"

namespace xha {

namespace {

Cyc zeta_pow(long conductor, long e) {
  long k = e % conductor;
  if (k < 0) k += conductor;
  return Cyc::root_of_unity(conductor, k);
}

}  // namespace

CrossedHopfGAlgebra group_algebra_crossed(const FiniteGroup& g) {
  const long m = g.order();
  Mat one = Mat::scalar(Cyc::one());
  std::vector<Component> comps(m, Component{1, one, one});
  std::vector<std::vector<Mat>> mult(m, std::vector<Mat>(m, one));
  std::vector<std::vector<Mat>> conj(m, std::vector<Mat>(m, one));
  std::vector<Mat> antipode(m, one);
  return CrossedHopfGAlgebra(g, std::move(comps), std::move(mult), one, std::move(conj), std::move(antipode));
}

CrossedHopfGAlgebra group_algebra_one_component(const FiniteGroup& k) {
  const long n = k.order();
  Component c;
  c.dim = n;
  c.delta = Mat(n * n, n);
  c.epsilon = Mat(1, n);
  for (long g = 0; g < n; ++g) {
    c.delta.at(g * n + g, g) = Cyc::one();
    c.epsilon.at(0, g) = Cyc::one();
  }
  Mat mult(n, n * n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) mult.at(k.mul(a, b), a * n + b) = Cyc::one();
  Mat unit(n, 1);
  unit.at(k.identity(), 0) = Cyc::one();
  Mat antipode(n, n);
  for (long a = 0; a < n; ++a) antipode.at(k.inv(a), a) = Cyc::one();
  return CrossedHopfGAlgebra(FiniteGroup::trivial(), {std::move(c)}, {{std::move(mult)}}, std::move(unit),
                             {{Mat::identity(n)}}, {std::move(antipode)});
}

CrossedHopfGAlgebra sweedler_algebra() {
  // Basis order: 1, g, x, gx.
  const long n = 4;
  Cyc one = Cyc::one();
  Component c;
  c.dim = n;
  c.delta = Mat(n * n, n);
  c.epsilon = Mat(1, n);
  c.delta.at(0 * n + 0, 0) = one;                                  // 1 -> 1 (x) 1
  c.delta.at(1 * n + 1, 1) = one;                                  // g -> g (x) g
  c.delta.at(2 * n + 0, 2) = one;                                  // x -> x (x) 1 + g (x) x
  c.delta.at(1 * n + 2, 2) = one;
  c.delta.at(3 * n + 1, 3) = one;                                  // gx -> gx (x) g + 1 (x) gx
  c.delta.at(0 * n + 3, 3) = one;
  c.epsilon.at(0, 0) = one;
  c.epsilon.at(0, 1) = one;

  // Products in basis order; 0 entries omitted.
  Mat mult(n, n * n);
  auto set = [&](long a, long b, long r, Cyc v) { mult.at(r, a * n + b) = v; };
  for (long b = 0; b < n; ++b) set(0, b, b, one);                  // 1 . y = y
  set(1, 0, 1, one);                                               // g 1 = g
  set(1, 1, 0, one);                                               // g g = 1
  set(1, 2, 3, one);                                               // g x = gx
  set(1, 3, 2, one);                                               // g gx = x
  set(2, 0, 2, one);                                               // x 1 = x
  set(2, 1, 3, -one);                                              // x g = -gx
  set(3, 0, 3, one);                                               // gx 1 = gx
  set(3, 1, 2, -one);                                              // gx g = -x
  // x x = x gx = gx x = gx gx = 0

  Mat unit(n, 1);
  unit.at(0, 0) = one;
  Mat antipode(n, n);
  antipode.at(0, 0) = one;                                         // S(1) = 1
  antipode.at(1, 1) = one;                                         // S(g) = g
  antipode.at(3, 2) = -one;                                        // S(x) = -gx
  antipode.at(2, 3) = one;                                         // S(gx) = x
  return CrossedHopfGAlgebra(FiniteGroup::trivial(), {std::move(c)}, {{std::move(mult)}}, std::move(unit),
                             {{Mat::identity(n)}}, {std::move(antipode)});
}

Cobraiding bicharacter_cobraiding(long n, long conductor, long power) {
  Cobraiding c;
  c.gamma.assign(n, std::vector<Mat>(n));
  c.gamma_inv.assign(n, std::vector<Mat>(n));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      c.gamma[a][b] = Mat::scalar(zeta_pow(conductor, power * a * b));
      c.gamma_inv[a][b] = Mat::scalar(zeta_pow(conductor, -power * a * b));
    }
  return c;
}

Cotwist quadratic_cotwist(long n, long conductor, long power) {
  Cotwist t;
  for (long a = 0; a < n; ++a) {
    t.tau.push_back(Mat::scalar(zeta_pow(conductor, power * a * a)));
    t.tau_inv.push_back(Mat::scalar(zeta_pow(conductor, -power * a * a)));
  }
  return t;
}

Cobraiding counit_cobraiding(const CrossedHopfGAlgebra& h) {
  const long m = h.group().order();
  Cobraiding c;
  c.gamma.assign(m, std::vector<Mat>(m));
  c.gamma_inv = c.gamma;
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b) {
      c.gamma[a][b] = h.epsilon(a).kron(h.epsilon(b));
      c.gamma_inv[a][b] = c.gamma[a][b];
    }
  return c;
}

Cotwist counit_cotwist(const CrossedHopfGAlgebra& h) {
  Cotwist t;
  for (long a = 0; a < h.group().order(); ++a) {
    t.tau.push_back(h.epsilon(a));
    t.tau_inv.push_back(h.epsilon(a));
  }
  return t;
}

Cobraiding sweedler_cobraiding(const CrossedHopfGAlgebra& sw, const Cyc& lambda) {
  // Basis order 1, g, x, gx; values gamma(row (x) col).
  Mat gamma(1, 16);
  Cyc one = Cyc::one();
  auto set = [&](long hh, long k, Cyc v) { gamma.at(0, hh * 4 + k) = v; };
  set(0, 0, one);
  set(0, 1, one);
  set(1, 0, one);
  set(1, 1, -one);
  set(2, 2, lambda);
  set(2, 3, lambda);
  set(3, 2, -lambda);
  set(3, 3, lambda);
  Cobraiding c{{{gamma}}, {}};
  auto inv = solve_cobraiding_inverse(sw, c.gamma);
  if (!inv) throw ArithmeticError("sweedler_cobraiding: no convolution inverse");
  c.gamma_inv = std::move(*inv);
  return c;
}

Cobraiding pointed_bicharacter_cobraiding(long n, long conductor, long power) {
  Mat gamma(1, n * n), ginv(1, n * n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      gamma.at(0, a * n + b) = zeta_pow(conductor, power * a * b);
      ginv.at(0, a * n + b) = zeta_pow(conductor, -power * a * b);
    }
  return Cobraiding{{{gamma}}, {{ginv}}};
}

Cotwist pointed_quadratic_cotwist(long n, long conductor, long power) {
  Mat tau(1, n), tinv(1, n);
  for (long a = 0; a < n; ++a) {
    tau.at(0, a) = zeta_pow(conductor, power * a * a);
    tinv.at(0, a) = zeta_pow(conductor, -power * a * a);
  }
  return Cotwist{{tau}, {tinv}};
}

}  // namespace xha
