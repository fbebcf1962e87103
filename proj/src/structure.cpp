#include "xha/structure.hpp"

#include <sstream>

namespace xha {

namespace {

std::optional<std::pair<long, long>> first_diff(const Mat& a, const Mat& b) {
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

/// Checks a == b under `name`; witness carries the tuple description plus the
/// first differing entry.
void check_eq(Report& report, const std::string& name, const std::string& where, const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    report.input_error(name, where + " shape mismatch " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                 " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    return;
  }
  if (auto d = first_diff(a, b)) {
    std::ostringstream os;
    os << where << " entry (" << d->first << "," << d->second << "): " << a.at(d->first, d->second).to_string()
       << " != " << b.at(d->first, d->second).to_string();
    report.fail(name, os.str());
  } else {
    report.pass(name);
  }
}

}  // namespace

CrossedHopfGAlgebra::CrossedHopfGAlgebra(FiniteGroup group, std::vector<Component> components,
                                         std::vector<std::vector<Mat>> mult, Mat unit,
                                         std::vector<std::vector<Mat>> conj, std::vector<Mat> antipode)
    : group_(std::move(group)),
      components_(std::move(components)),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      conj_(std::move(conj)),
      antipode_(std::move(antipode)) {
  const long m = group_.order();
  auto shape = [](const Mat& mat, long r, long c, const std::string& what) {
    if (mat.rows() != r || mat.cols() != c)
      throw ArithmeticError(what + ": expected " + std::to_string(r) + "x" + std::to_string(c) + ", got " +
                            std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()));
  };
  if (static_cast<long>(components_.size()) != m) throw ArithmeticError("component count != group order");
  for (long a = 0; a < m; ++a) {
    if (components_[a].dim < 0) throw ArithmeticError("negative component dimension");
    shape(components_[a].delta, dim(a) * dim(a), dim(a), "delta[" + group_.label(a) + "]");
    shape(components_[a].epsilon, 1, dim(a), "epsilon[" + group_.label(a) + "]");
  }
  if (static_cast<long>(mult_.size()) != m) throw ArithmeticError("mult table has wrong size");
  for (long a = 0; a < m; ++a) {
    if (static_cast<long>(mult_[a].size()) != m) throw ArithmeticError("mult table has wrong size");
    for (long b = 0; b < m; ++b)
      shape(mult_[a][b], dim(group_.mul(a, b)), dim(a) * dim(b),
            "mult[" + group_.label(a) + "," + group_.label(b) + "]");
  }
  shape(unit_, dim(group_.identity()), 1, "unit");
  if (static_cast<long>(conj_.size()) != m) throw ArithmeticError("conj table has wrong size");
  for (long b = 0; b < m; ++b) {
    if (static_cast<long>(conj_[b].size()) != m) throw ArithmeticError("conj table has wrong size");
    for (long a = 0; a < m; ++a)
      shape(conj_[b][a], dim(group_.conj(b, a)), dim(a), "conj[" + group_.label(b) + "," + group_.label(a) + "]");
  }
  if (static_cast<long>(antipode_.size()) != m) throw ArithmeticError("antipode table has wrong size");
  for (long a = 0; a < m; ++a)
    shape(antipode_[a], dim(group_.inv(a)), dim(a), "antipode[" + group_.label(a) + "]");
}

bool CrossedHopfGAlgebra::operator==(const CrossedHopfGAlgebra& o) const {
  if (!(group_ == o.group_) || unit_ != o.unit_) return false;
  for (long a = 0; a < group_.order(); ++a) {
    if (dim(a) != o.dim(a) || delta(a) != o.delta(a) || epsilon(a) != o.epsilon(a) || antipode(a) != o.antipode(a))
      return false;
    for (long b = 0; b < group_.order(); ++b)
      if (mult(a, b) != o.mult(a, b) || conj(a, b) != o.conj(a, b)) return false;
  }
  return true;
}

Report verify_crossed_hopf(const CrossedHopfGAlgebra& h, const VerifyOptions& opts) {
  Report report;
  const FiniteGroup& g = h.group();
  const long m = g.order();
  const long one = g.identity();
  auto I = [](long n) { return Mat::identity(n); };
  auto at = [&](long a) { return g.label(a); };

  // Per-component coalgebra axioms.
  for (long a = 0; a < m; ++a) {
    const long d = h.dim(a);
    const Mat& delta = h.delta(a);
    const Mat& eps = h.epsilon(a);
    check_eq(report, "component-coassociativity", "(" + at(a) + ")", delta.kron(I(d)) * delta, I(d).kron(delta) * delta);
    check_eq(report, "component-counit", "(" + at(a) + ") left", eps.kron(I(d)) * delta, I(d));
    check_eq(report, "component-counit", "(" + at(a) + ") right", I(d).kron(eps) * delta, I(d));
  }

  // Associativity.
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b)
      for (long c = 0; c < m; ++c)
        check_eq(report, "associativity", "(" + at(a) + "," + at(b) + "," + at(c) + ")",
                 h.mult(g.mul(a, b), c) * h.mult(a, b).kron(I(h.dim(c))),
                 h.mult(a, g.mul(b, c)) * I(h.dim(a)).kron(h.mult(b, c)));

  // mult is a coalgebra morphism.
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b) {
      const long da = h.dim(a), db = h.dim(b), dab = h.dim(g.mul(a, b));
      Mat mid = I(da).kron(Mat::swap(da, db)).kron(I(db));
      check_eq(report, "mult-comultiplicative", "(" + at(a) + "," + at(b) + ")", h.delta(g.mul(a, b)) * h.mult(a, b),
               h.mult(a, b).kron(h.mult(a, b)) * mid * h.delta(a).kron(h.delta(b)));
      check_eq(report, "mult-counital", "(" + at(a) + "," + at(b) + ")", h.epsilon(g.mul(a, b)) * h.mult(a, b),
               h.epsilon(a).kron(h.epsilon(b)));
      (void)dab;
    }

  // Unit laws.
  for (long a = 0; a < m; ++a) {
    check_eq(report, "unit-law", "(" + at(a) + ") left", h.mult(one, a) * h.unit().kron(I(h.dim(a))), I(h.dim(a)));
    check_eq(report, "unit-law", "(" + at(a) + ") right", h.mult(a, one) * I(h.dim(a)).kron(h.unit()), I(h.dim(a)));
  }
  check_eq(report, "unit-comultiplicative", "", h.delta(one) * h.unit(), h.unit().kron(h.unit()));
  check_eq(report, "unit-counital", "", h.epsilon(one) * h.unit(), Mat::scalar(Cyc::one()));

  // Conjugation.
  for (long b = 0; b < m; ++b)
    for (long a = 0; a < m; ++a) {
      const Mat& phi = h.conj(b, a);
      const long target = g.conj(b, a);
      if (!phi.is_invertible())
        report.fail("conj-invertible", "(" + at(b) + "," + at(a) + ")");
      else
        report.pass("conj-invertible");
      check_eq(report, "conj-comultiplicative", "(" + at(b) + "," + at(a) + ")", h.delta(target) * phi,
               phi.kron(phi) * h.delta(a));
      check_eq(report, "conj-counital", "(" + at(b) + "," + at(a) + ")", h.epsilon(target) * phi, h.epsilon(a));
    }
  for (long b = 0; b < m; ++b)
    for (long a1 = 0; a1 < m; ++a1)
      for (long a2 = 0; a2 < m; ++a2)
        check_eq(report, "conj-multiplicative", "(" + at(b) + ";" + at(a1) + "," + at(a2) + ")",
                 h.conj(b, g.mul(a1, a2)) * h.mult(a1, a2),
                 h.mult(g.conj(b, a1), g.conj(b, a2)) * h.conj(b, a1).kron(h.conj(b, a2)));
  for (long b = 0; b < m; ++b)
    check_eq(report, "conj-preserves-unit", "(" + at(b) + ")", h.conj(b, one) * h.unit(), h.unit());
  for (long a = 0; a < m; ++a)
    check_eq(report, "conj-identity", "(" + at(a) + ")", h.conj(one, a), I(h.dim(a)));
  for (long b1 = 0; b1 < m; ++b1)
    for (long b2 = 0; b2 < m; ++b2)
      for (long a = 0; a < m; ++a)
        check_eq(report, "conj-homomorphism", "(" + at(b1) + "," + at(b2) + ";" + at(a) + ")",
                 h.conj(g.mul(b1, b2), a), h.conj(b1, g.conj(b2, a)) * h.conj(b2, a));

  // Antipode.
  for (long a = 0; a < m; ++a) {
    const long d = h.dim(a);
    const long ainv = g.inv(a);
    Mat eta_eps = h.unit() * h.epsilon(a);
    check_eq(report, "antipode-left", "(" + at(a) + ")", h.mult(ainv, a) * h.antipode(a).kron(I(d)) * h.delta(a),
             eta_eps);
    check_eq(report, "antipode-right", "(" + at(a) + ")", h.mult(a, ainv) * I(d).kron(h.antipode(a)) * h.delta(a),
             eta_eps);
    if (!h.antipode(a).is_invertible())
      report.fail("antipode-invertible", "(" + at(a) + ")");
    else
      report.pass("antipode-invertible");
  }

  if (opts.strict_phi_antipode) {
    for (long b = 0; b < m; ++b)
      for (long a = 0; a < m; ++a)
        check_eq(report, "conj-antipode-compatible", "(" + at(b) + "," + at(a) + ")",
                 h.conj(b, g.inv(a)) * h.antipode(a), h.antipode(g.conj(b, a)) * h.conj(b, a));
  }

  return report;
}

PackedHopfAlgebra pack(const CrossedHopfGAlgebra& h) {
  const FiniteGroup& g = h.group();
  const long m = g.order();
  PackedHopfAlgebra p{g, {}, {}, Mat(), Mat(), Mat(), Mat(), {}, Mat()};
  long n = 0;
  for (long a = 0; a < m; ++a) {
    p.offset.push_back(n);
    for (long i = 0; i < h.dim(a); ++i) p.block_of.push_back(a);
    n += h.dim(a);
  }
  auto packed_index = [&](long a, long i) { return p.offset[a] + i; };

  p.delta = Mat(n * n, n);
  p.epsilon = Mat(1, n);
  p.mult = Mat(n, n * n);
  p.unit = Mat(n, 1);
  p.antipode = Mat(n, n);
  for (long a = 0; a < m; ++a) {
    const long d = h.dim(a);
    for (long j = 0; j < d; ++j) {
      long col = packed_index(a, j);
      for (long i1 = 0; i1 < d; ++i1)
        for (long i2 = 0; i2 < d; ++i2)
          p.delta.at(packed_index(a, i1) * n + packed_index(a, i2), col) = h.delta(a).at(i1 * d + i2, j);
      p.epsilon.at(0, col) = h.epsilon(a).at(0, j);
      for (long i = 0; i < h.dim(g.inv(a)); ++i) p.antipode.at(packed_index(g.inv(a), i), col) = h.antipode(a).at(i, j);
    }
    for (long b = 0; b < m; ++b) {
      const long ab = g.mul(a, b);
      for (long i = 0; i < h.dim(ab); ++i)
        for (long j1 = 0; j1 < h.dim(a); ++j1)
          for (long j2 = 0; j2 < h.dim(b); ++j2)
            p.mult.at(packed_index(ab, i), packed_index(a, j1) * n + packed_index(b, j2)) =
                h.mult(a, b).at(i, j1 * h.dim(b) + j2);
    }
  }
  for (long i = 0; i < h.dim(g.identity()); ++i) p.unit.at(packed_index(g.identity(), i), 0) = h.unit().at(i, 0);
  for (long b = 0; b < m; ++b) {
    Mat phi(n, n);
    for (long a = 0; a < m; ++a) {
      const long target = g.conj(b, a);
      for (long i = 0; i < h.dim(target); ++i)
        for (long j = 0; j < h.dim(a); ++j) phi.at(packed_index(target, i), packed_index(a, j)) = h.conj(b, a).at(i, j);
    }
    p.conj.push_back(std::move(phi));
  }
  return p;
}

UnpackResult unpack(const PackedHopfAlgebra& p) {
  UnpackResult out;
  const FiniteGroup& g = p.group;
  const long m = g.order();
  const long n = p.total_dim();
  auto block_label = [&](long a) { return g.label(a); };

  std::vector<long> dims(m, 0);
  for (long b : p.block_of) ++dims[b];
  // block_of must be grouped contiguously in offset order
  for (long i = 0; i + 1 < n; ++i)
    if (p.block_of[i] > p.block_of[i + 1]) {
      out.report.input_error("grading-blocks-contiguous", "index " + std::to_string(i));
      return out;
    }
  auto supported_in = [&](long row, long want_block) { return p.block_of[row] == want_block; };

  // (1) each block is a subcoalgebra: delta(H_a) inside H_a (x) H_a
  for (long col = 0; col < n; ++col) {
    long a = p.block_of[col];
    for (long r1 = 0; r1 < n; ++r1)
      for (long r2 = 0; r2 < n; ++r2)
        if (!p.delta.at(r1 * n + r2, col).is_zero() && (!supported_in(r1, a) || !supported_in(r2, a)))
          out.report.fail("grading-subcoalgebra",
                          "block " + block_label(a) + " leaks to (" + block_label(p.block_of[r1]) + "," +
                              block_label(p.block_of[r2]) + ")");
  }
  // (2) H_a . H_b inside H_ab
  for (long c1 = 0; c1 < n; ++c1)
    for (long c2 = 0; c2 < n; ++c2) {
      long want = g.mul(p.block_of[c1], p.block_of[c2]);
      for (long r = 0; r < n; ++r)
        if (!p.mult.at(r, c1 * n + c2).is_zero() && !supported_in(r, want))
          out.report.fail("grading-product", "blocks (" + block_label(p.block_of[c1]) + "," +
                                                 block_label(p.block_of[c2]) + ") leak to " +
                                                 block_label(p.block_of[r]));
    }
  // (3) 1 in H_1
  for (long r = 0; r < n; ++r)
    if (!p.unit.at(r, 0).is_zero() && !supported_in(r, g.identity()))
      out.report.fail("grading-unit", "unit leaks to block " + block_label(p.block_of[r]));
  // (4) conj sends H_a to H_{b a b^-1}
  for (long b = 0; b < m; ++b)
    for (long col = 0; col < n; ++col) {
      long want = g.conj(b, p.block_of[col]);
      for (long r = 0; r < n; ++r)
        if (!p.conj[b].at(r, col).is_zero() && !supported_in(r, want))
          out.report.fail("grading-conjugation", "(" + block_label(b) + ") block " + block_label(p.block_of[col]) +
                                                     " leaks to " + block_label(p.block_of[r]));
    }
  // (5) S(H_a) inside H_{a^-1}
  for (long col = 0; col < n; ++col) {
    long want = g.inv(p.block_of[col]);
    for (long r = 0; r < n; ++r)
      if (!p.antipode.at(r, col).is_zero() && !supported_in(r, want))
        out.report.fail("grading-antipode",
                        "block " + block_label(p.block_of[col]) + " leaks to " + block_label(p.block_of[r]));
  }
  // ensure pass entries exist for clean blocks
  for (const char* name :
       {"grading-subcoalgebra", "grading-product", "grading-unit", "grading-conjugation", "grading-antipode"}) {
    bool seen = false;
    for (const auto& r : out.report.results()) seen = seen || r.name == name;
    if (!seen) out.report.pass(name);
  }
  if (!out.report.all_passed()) return out;

  // Slice.
  std::vector<Component> comps;
  std::vector<std::vector<Mat>> mult(m, std::vector<Mat>(m));
  std::vector<std::vector<Mat>> conj(m, std::vector<Mat>(m));
  std::vector<Mat> antipode(m);
  for (long a = 0; a < m; ++a) {
    const long d = dims[a], off = p.offset[a];
    Component c;
    c.dim = d;
    c.delta = Mat(d * d, d);
    c.epsilon = Mat(1, d);
    for (long j = 0; j < d; ++j) {
      c.epsilon.at(0, j) = p.epsilon.at(0, off + j);
      for (long i1 = 0; i1 < d; ++i1)
        for (long i2 = 0; i2 < d; ++i2) c.delta.at(i1 * d + i2, j) = p.delta.at((off + i1) * n + (off + i2), off + j);
    }
    comps.push_back(std::move(c));
  }
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b) {
      const long ab = g.mul(a, b);
      Mat mu(dims[ab], dims[a] * dims[b]);
      for (long i = 0; i < dims[ab]; ++i)
        for (long j1 = 0; j1 < dims[a]; ++j1)
          for (long j2 = 0; j2 < dims[b]; ++j2)
            mu.at(i, j1 * dims[b] + j2) = p.mult.at(p.offset[ab] + i, (p.offset[a] + j1) * n + (p.offset[b] + j2));
      mult[a][b] = std::move(mu);
    }
  Mat unit(dims[g.identity()], 1);
  for (long i = 0; i < dims[g.identity()]; ++i) unit.at(i, 0) = p.unit.at(p.offset[g.identity()] + i, 0);
  for (long b = 0; b < m; ++b)
    for (long a = 0; a < m; ++a) {
      const long t = g.conj(b, a);
      Mat phi(dims[t], dims[a]);
      for (long i = 0; i < dims[t]; ++i)
        for (long j = 0; j < dims[a]; ++j) phi.at(i, j) = p.conj[b].at(p.offset[t] + i, p.offset[a] + j);
      conj[b][a] = std::move(phi);
    }
  for (long a = 0; a < m; ++a) {
    const long t = g.inv(a);
    Mat s(dims[t], dims[a]);
    for (long i = 0; i < dims[t]; ++i)
      for (long j = 0; j < dims[a]; ++j) s.at(i, j) = p.antipode.at(p.offset[t] + i, p.offset[a] + j);
    antipode[a] = std::move(s);
  }
  out.structure.emplace(g, std::move(comps), std::move(mult), std::move(unit), std::move(conj), std::move(antipode));
  return out;
}

DualGCoalgebra dualize(const CrossedHopfGAlgebra& h) {
  const FiniteGroup& g = h.group();
  const long m = g.order();
  DualGCoalgebra d{g, {}, {}, std::vector<std::vector<Mat>>(m, std::vector<Mat>(m)), h.unit().transpose(),
                   std::vector<std::vector<Mat>>(m, std::vector<Mat>(m)), {}};
  for (long a = 0; a < m; ++a) {
    d.mult.push_back(h.delta(a).transpose());
    d.unit.push_back(h.epsilon(a).transpose());
    // S*_a : H*_a -> H*_{a^-1} is the transpose of S_{a^-1} : H_{a^-1} -> H_a.
    d.antipode.push_back(h.antipode(g.inv(a)).transpose());
  }
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b) d.comult[a][b] = h.mult(a, b).transpose();
  // phi*_b : H*_a -> H*_{b a b^-1} is the transpose of phi_{b^-1} : H_{b a b^-1} -> H_a.
  for (long b = 0; b < m; ++b)
    for (long a = 0; a < m; ++a) d.conj[b][a] = h.conj(g.inv(b), g.conj(b, a)).transpose();
  return d;
}

CrossedHopfGAlgebra dualize_back(const DualGCoalgebra& d) {
  const FiniteGroup& g = d.group;
  const long m = g.order();
  std::vector<Component> comps;
  for (long a = 0; a < m; ++a) {
    Component c;
    c.dim = d.mult[a].rows();
    c.delta = d.mult[a].transpose();
    c.epsilon = d.unit[a].transpose();
    comps.push_back(std::move(c));
  }
  std::vector<std::vector<Mat>> mult(m, std::vector<Mat>(m));
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b) mult[a][b] = d.comult[a][b].transpose();
  std::vector<std::vector<Mat>> conj(m, std::vector<Mat>(m));
  for (long b = 0; b < m; ++b)
    for (long a = 0; a < m; ++a) conj[b][a] = d.conj[g.inv(b)][g.conj(b, a)].transpose();
  std::vector<Mat> antipode;
  for (long a = 0; a < m; ++a) antipode.push_back(d.antipode[g.inv(a)].transpose());
  return CrossedHopfGAlgebra(g, std::move(comps), std::move(mult), d.counit.transpose(), std::move(conj),
                             std::move(antipode));
}

CosemisimplicityVerdict is_cosemisimple(const CrossedHopfGAlgebra& h) {
  CosemisimplicityVerdict v;
  const long m = h.group().order();
  for (long a = 0; a < m; ++a) {
    const long d = h.dim(a);
    if (d == 0) {
      v.component_cosemisimple.push_back(true);
      continue;
    }
    // Dual algebra: multiplication delta^T : H*_a (x) H*_a -> H*_a.
    Mat mul = h.delta(a).transpose();
    // Left regular representation L_i of basis vector e^i, then the trace form
    // Gram[i][j] = Tr(L_i L_j); nondegenerate iff semisimple in char 0.
    std::vector<Mat> left(d, Mat(d, d));
    for (long i = 0; i < d; ++i)
      for (long j = 0; j < d; ++j)
        for (long r = 0; r < d; ++r) left[i].at(r, j) = mul.at(r, i * d + j);
    Mat gram(d, d);
    for (long i = 0; i < d; ++i)
      for (long j = 0; j < d; ++j) {
        Mat prod = left[i] * left[j];
        Cyc tr = Cyc::zero();
        for (long k = 0; k < d; ++k) tr += prod.at(k, k);
        gram.at(i, j) = tr;
      }
    v.component_cosemisimple.push_back(gram.determinant() != Cyc::zero());
  }
  v.overall = true;
  for (bool b : v.component_cosemisimple) v.overall = v.overall && b;
  v.component_one = v.component_cosemisimple[h.group().identity()];
  v.criterion_agrees = (v.overall == v.component_one);
  return v;
}

}  // namespace xha
