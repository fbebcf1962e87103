#include "xha/quasi.hpp"

#include <sstream>

namespace xha {

namespace {

void check_eq(Report& report, const std::string& name, const std::string& where, const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    report.input_error(name, where + " shape mismatch");
    return;
  }
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j)) {
        std::ostringstream os;
        os << where << " entry (" << i << "," << j << "): " << a.at(i, j).to_string()
           << " != " << b.at(i, j).to_string();
        report.fail(name, os.str());
        return;
      }
  report.pass(name);
}

/// (h (x) k) -> (h' (x) k') (x) (h'' (x) k''), i.e. the middle-swapped double
/// comultiplication on H_a (x) H_b.
Mat two_legs(const CrossedHopfGAlgebra& h, long a, long b) {
  const long da = h.dim(a), db = h.dim(b);
  return Mat::identity(da).kron(Mat::swap(da, db)).kron(Mat::identity(db)) * h.delta(a).kron(h.delta(b));
}

bool shapes_ok(const CrossedHopfGAlgebra& h, const Cobraiding& c, Report& report) {
  const long m = h.group().order();
  if (static_cast<long>(c.gamma.size()) != m || static_cast<long>(c.gamma_inv.size()) != m) {
    report.input_error("cobraiding-shape", "family has wrong component count");
    return false;
  }
  for (long a = 0; a < m; ++a) {
    if (static_cast<long>(c.gamma[a].size()) != m || static_cast<long>(c.gamma_inv[a].size()) != m) {
      report.input_error("cobraiding-shape", "family has wrong component count");
      return false;
    }
    for (long b = 0; b < m; ++b)
      for (const Mat* f : {&c.gamma[a][b], &c.gamma_inv[a][b]})
        if (f->rows() != 1 || f->cols() != h.dim(a) * h.dim(b)) {
          report.input_error("cobraiding-shape", "(" + h.group().label(a) + "," + h.group().label(b) +
                                                     ") expected 1x" + std::to_string(h.dim(a) * h.dim(b)));
          return false;
        }
  }
  return true;
}

}  // namespace

Report verify_cobraiding(const CrossedHopfGAlgebra& h, const Cobraiding& c) {
  Report report;
  if (!shapes_ok(h, c, report)) return report;
  const FiniteGroup& g = h.group();
  const long m = g.order();
  auto I = [](long n) { return Mat::identity(n); };
  auto at = [&](long a) { return g.label(a); };

  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b) {
      const long da = h.dim(a), db = h.dim(b);
      Mat legs = two_legs(h, a, b);
      Mat eps2 = h.epsilon(a).kron(h.epsilon(b));
      check_eq(report, "cobraiding-convolution-inverse", "(" + at(a) + "," + at(b) + ") left",
               c.gamma_inv[a][b].kron(c.gamma[a][b]) * legs, eps2);
      check_eq(report, "cobraiding-convolution-inverse", "(" + at(a) + "," + at(b) + ") right",
               c.gamma[a][b].kron(c.gamma_inv[a][b]) * legs, eps2);

      // k'h' gamma(h'' (x) k'') = gamma(h' (x) k') phi_b(h'') k''
      Mat split = h.delta(a).kron(h.delta(b));  // legs [h', h'', k', k'']
      std::vector<long> dims = {da, da, db, db};
      Mat lhs = h.mult(b, a).kron(c.gamma[a][b]) * Mat::leg_permutation(dims, {2, 0, 1, 3}) * split;
      Mat rhs = c.gamma[a][b].kron(h.mult(g.conj(b, a), b) * h.conj(b, a).kron(I(db))) *
                Mat::leg_permutation(dims, {0, 2, 1, 3}) * split;
      check_eq(report, "cobraiding-quasi-commutativity", "(" + at(a) + "," + at(b) + ")", lhs, rhs);
    }

  for (long a1 = 0; a1 < m; ++a1)
    for (long a2 = 0; a2 < m; ++a2)
      for (long b = 0; b < m; ++b) {
        const long d1 = h.dim(a1), d2 = h.dim(a2), db = h.dim(b);
        Mat lhs = c.gamma[g.mul(a1, a2)][b] * h.mult(a1, a2).kron(I(db));
        Mat rhs = c.gamma[a1][b].kron(c.gamma[a2][b]) * Mat::leg_permutation({d1, d2, db, db}, {0, 2, 1, 3}) *
                  I(d1).kron(I(d2)).kron(h.delta(b));
        check_eq(report, "cobraiding-mult-first-slot", "(" + at(a1) + "," + at(a2) + ";" + at(b) + ")", lhs, rhs);
      }

  for (long a = 0; a < m; ++a)
    for (long b1 = 0; b1 < m; ++b1)
      for (long b2 = 0; b2 < m; ++b2) {
        const long da = h.dim(a), d1 = h.dim(b1), d2 = h.dim(b2);
        Mat lhs = c.gamma[a][g.mul(b1, b2)] * I(da).kron(h.mult(b1, b2));
        Mat first = c.gamma[g.conj(b2, a)][b1] * h.conj(b2, a).kron(I(d1));
        Mat rhs = first.kron(c.gamma[a][b2]) * Mat::leg_permutation({da, da, d1, d2}, {1, 2, 0, 3}) *
                  h.delta(a).kron(I(d1)).kron(I(d2));
        check_eq(report, "cobraiding-mult-second-slot", "(" + at(a) + ";" + at(b1) + "," + at(b2) + ")", lhs, rhs);
      }

  for (long l = 0; l < m; ++l)
    for (long a = 0; a < m; ++a)
      for (long b = 0; b < m; ++b)
        check_eq(report, "cobraiding-conjugation-invariance", "(" + at(l) + ";" + at(a) + "," + at(b) + ")",
                 c.gamma[g.conj(l, a)][g.conj(l, b)] * h.conj(l, a).kron(h.conj(l, b)), c.gamma[a][b]);

  return report;
}

Report verify_cotwist(const CrossedHopfGAlgebra& h, const Cobraiding& c, const Cotwist& t) {
  Report report;
  const FiniteGroup& g = h.group();
  const long m = g.order();
  if (static_cast<long>(t.tau.size()) != m || static_cast<long>(t.tau_inv.size()) != m) {
    report.input_error("cotwist-shape", "family has wrong component count");
    return report;
  }
  for (long a = 0; a < m; ++a)
    for (const Mat* f : {&t.tau[a], &t.tau_inv[a]})
      if (f->rows() != 1 || f->cols() != h.dim(a)) {
        report.input_error("cotwist-shape", "(" + g.label(a) + ") expected 1x" + std::to_string(h.dim(a)));
        return report;
      }
  if (!shapes_ok(h, c, report)) return report;
  auto I = [](long n) { return Mat::identity(n); };
  auto at = [&](long a) { return g.label(a); };

  for (long a = 0; a < m; ++a) {
    check_eq(report, "cotwist-convolution-inverse", "(" + at(a) + ") left", t.tau[a].kron(t.tau_inv[a]) * h.delta(a),
             h.epsilon(a));
    check_eq(report, "cotwist-convolution-inverse", "(" + at(a) + ") right", t.tau_inv[a].kron(t.tau[a]) * h.delta(a),
             h.epsilon(a));
    // tau(h') phi_a(h'') = h' tau(h'')
    check_eq(report, "cotwist-conjugation-commutation", "(" + at(a) + ")", t.tau[a].kron(h.conj(a, a)) * h.delta(a),
             I(h.dim(a)).kron(t.tau[a]) * h.delta(a));
    check_eq(report, "cotwist-antipode", "(" + at(a) + ")", t.tau[g.inv(a)] * h.antipode(a), t.tau[a]);
  }

  for (long b = 0; b < m; ++b)
    for (long a = 0; a < m; ++a)
      check_eq(report, "cotwist-conjugation-invariance", "(" + at(b) + ";" + at(a) + ")",
               t.tau[g.conj(b, a)] * h.conj(b, a), t.tau[a]);

  // tau(hk) = gamma(k' (x) h') tau(h'') tau(phi_a(k'')) gamma(h''' (x) phi_b(k'''))
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b) {
      const long da = h.dim(a), db = h.dim(b);
      Mat lhs = t.tau[g.mul(a, b)] * h.mult(a, b);
      Mat three_a = h.delta(a).kron(I(da)) * h.delta(a);  // h -> h' (x) h'' (x) h'''
      Mat three_b = h.delta(b).kron(I(db)) * h.delta(b);
      // legs [h', h'', h''', k', k'', k'''] -> [k', h', h'', k'', h''', k''']
      Mat arrange = Mat::leg_permutation({da, da, da, db, db, db}, {3, 0, 1, 4, 2, 5});
      Mat rhs = c.gamma[b][a]
                    .kron(t.tau[a])
                    .kron(t.tau[g.conj(a, b)] * h.conj(a, b))
                    .kron(c.gamma[a][b] * I(da).kron(h.conj(b, b))) *
                arrange * three_a.kron(three_b);
      check_eq(report, "cotwist-product-expansion", "(" + at(a) + "," + at(b) + ")", lhs, rhs);
    }

  return report;
}

std::optional<std::vector<std::vector<Mat>>> solve_cobraiding_inverse(const CrossedHopfGAlgebra& h,
                                                                      const std::vector<std::vector<Mat>>& gamma) {
  const FiniteGroup& g = h.group();
  const long m = g.order();
  std::vector<std::vector<Mat>> inv(m, std::vector<Mat>(m));
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b) {
      const long n = h.dim(a) * h.dim(b);
      Mat legs = two_legs(h, a, b);
      // Unknown x (length n) with (x (x) gamma) . legs = eps and (gamma (x) x) . legs = eps.
      Mat sys(2 * legs.cols(), n);
      Mat rhs(2 * legs.cols(), 1);
      Mat eps2 = h.epsilon(a).kron(h.epsilon(b));
      for (long col = 0; col < legs.cols(); ++col) {
        for (long r1 = 0; r1 < n; ++r1) {
          Cyc s1 = Cyc::zero(), s2 = Cyc::zero();
          for (long r2 = 0; r2 < n; ++r2) {
            s1 += gamma[a][b].at(0, r2) * legs.at(r1 * n + r2, col);
            s2 += gamma[a][b].at(0, r2) * legs.at(r2 * n + r1, col);
          }
          sys.at(col, r1) = s1;
          sys.at(legs.cols() + col, r1) = s2;
        }
        rhs.at(col, 0) = eps2.at(0, col);
        rhs.at(legs.cols() + col, 0) = eps2.at(0, col);
      }
      auto x = sys.solve(rhs);
      if (!x) return std::nullopt;
      Mat row(1, n);
      for (long i = 0; i < n; ++i) row.at(0, i) = x->at(i, 0);
      inv[a][b] = std::move(row);
    }
  return inv;
}

std::optional<std::vector<Mat>> solve_cotwist_inverse(const CrossedHopfGAlgebra& h, const std::vector<Mat>& tau) {
  const long m = h.group().order();
  std::vector<Mat> inv;
  for (long a = 0; a < m; ++a) {
    const long n = h.dim(a);
    Mat sys(2 * n, n);
    Mat rhs(2 * n, 1);
    for (long col = 0; col < n; ++col) {
      for (long r1 = 0; r1 < n; ++r1) {
        Cyc s1 = Cyc::zero(), s2 = Cyc::zero();
        for (long r2 = 0; r2 < n; ++r2) {
          s1 += tau[a].at(0, r2) * h.delta(a).at(r1 * n + r2, col);
          s2 += tau[a].at(0, r2) * h.delta(a).at(r2 * n + r1, col);
        }
        sys.at(col, r1) = s2;          // tau(h') x(h'') = eps
        sys.at(n + col, r1) = s1;      // x(h') tau(h'') = eps
      }
      rhs.at(col, 0) = h.epsilon(a).at(0, col);
      rhs.at(n + col, 0) = h.epsilon(a).at(0, col);
    }
    auto x = sys.solve(rhs);
    if (!x) return std::nullopt;
    Mat row(1, n);
    for (long i = 0; i < n; ++i) row.at(0, i) = x->at(i, 0);
    inv.push_back(std::move(row));
  }
  return inv;
}

}  // namespace xha
