#include "xha/trace.hpp"

#include <sstream>

namespace xha {

Cyc qtrace(const CrossedHopfGAlgebra& h, const Cobraiding& c, const Cotwist& t, const ComoduleMorphism& f) {
  const long one = h.group().identity();
  if (f.source.component != one || !same_comodule(f.source, f.target))
    throw ArithmeticError("qtrace: expected an endomorphism over the neutral component");
  const Comodule& u = f.source;
  const long n = u.dim;

  DualComodule d = dual_comodule(h, u);
  Mat theta = twist_map(h, t, u).f;
  Mat braid = braiding_map(h, c, u, d.dual).f;
  Mat categorical = d.evaluation.f * braid * (theta * f.f).kron(Mat::identity(n)) * d.coevaluation.f;

  // Coordinate cross-check: qtr(f) = tr(W T f) with T = (tau (x) I) rho and
  // W = (w (x) I) rho, where w(h) = gamma(S^-1(h'') (x) h'). This is the
  // repaired reading of the printed index formula.
  const long d1 = h.dim(one);
  Mat V = h.antipode(h.group().inv(one)).inverse();
  Mat w = c.gamma[one][one] * V.kron(Mat::identity(d1)) * Mat::swap(d1, d1) * h.delta(one);
  Mat W = w.kron(Mat::identity(n)) * u.rho;
  Mat T = t.tau[one].kron(Mat::identity(n)) * u.rho;
  Mat prod = W * T * f.f;
  Cyc coord = Cyc::zero();
  for (long i = 0; i < n; ++i) coord += prod.at(i, i);

  Cyc value = as_scalar(categorical);
  if (value != coord) throw ArithmeticError("qtrace: categorical composite and coordinate formula disagree");
  return value;
}

bool is_negligible(const CrossedHopfGAlgebra& h, const Cobraiding& c, const Cotwist& t, const Comodule& u) {
  ComoduleMorphism id{u, u, Mat::identity(u.dim)};
  return qtrace(h, c, t, id).is_zero();
}

Mat s_matrix(const CrossedHopfGAlgebra& h, const Cobraiding& c, const Cotwist& t, const SimpleFamily& fam) {
  const long n = static_cast<long>(fam.objects.size());
  Mat s(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const Comodule& vi = fam.objects[i];
      const Comodule& vjs = fam.objects[fam.dual_index[j]];
      Mat first = braiding_map(h, c, vi, vjs).f;
      Mat second = braiding_map(h, c, vjs, vi).f;
      Comodule dom = tensor_comodules(h, vi, vjs);
      ComoduleMorphism endo{dom, dom, second * first};
      s.at(i, j) = qtrace(h, c, t, endo);
    }
  return s;
}

long hom_space_dim(const CrossedHopfGAlgebra& h, const Comodule& source, const Comodule& target) {
  if (source.component != target.component) return 0;
  const long d = h.dim(source.component);
  const long sn = source.dim, tn = target.dim;
  // Unknown f (tn x sn), flattened row-major. Constraint:
  // rho_target . f - (I (x) f) . rho_source = 0.
  Mat sys(d * tn * sn, tn * sn);
  for (long a = 0; a < d; ++a)
    for (long m = 0; m < tn; ++m)
      for (long j = 0; j < sn; ++j) {
        long row = (a * tn + m) * sn + j;
        for (long nn = 0; nn < tn; ++nn) sys.at(row, nn * sn + j) += target.rho.at(a * tn + m, nn);
        for (long k = 0; k < sn; ++k) sys.at(row, m * sn + k) -= source.rho.at(a * sn + k, j);
      }
  return tn * sn - sys.rank();
}

Report is_modular(const CrossedHopfGAlgebra& h, const Cobraiding& c, const Cotwist& t, const SimpleFamily& fam) {
  Report report;
  const long n = static_cast<long>(fam.objects.size());
  if (fam.zero < 0 || fam.zero >= n || static_cast<long>(fam.dual_index.size()) != n ||
      static_cast<long>(fam.dual_witness.size()) != n) {
    report.input_error("modular-family-shape", "index data inconsistent with object count");
    return report;
  }

  if (same_comodule(fam.objects[fam.zero], trivial_comodule(h)))
    report.pass("modular-unit-object");
  else
    report.fail("modular-unit-object", "V_0 is not the trivial comodule");

  for (long i = 0; i < n; ++i) {
    DualComodule d = dual_comodule(h, fam.objects[i]);
    const ComoduleMorphism& w = fam.dual_witness[i];
    bool ok = same_comodule(w.source, fam.objects[fam.dual_index[i]]) && same_comodule(w.target, d.dual) &&
              is_colinear(h, w) && w.f.is_square() && w.f.is_invertible();
    if (ok)
      report.pass("modular-dual-witness");
    else
      report.fail("modular-dual-witness", "(" + std::to_string(i) + ")");
  }

  std::vector<Cyc> qdim;
  for (long i = 0; i < n; ++i) {
    ComoduleMorphism id{fam.objects[i], fam.objects[i], Mat::identity(fam.objects[i].dim)};
    qdim.push_back(qtrace(h, c, t, id));
  }
  for (long j = 0; j < n; ++j)
    for (long k = 0; k < n; ++k) {
      Comodule prod = tensor_comodules(h, fam.objects[j], fam.objects[k]);
      Cyc balance = Cyc::zero();
      for (long i = 0; i < n; ++i) {
        long mult = hom_space_dim(h, fam.objects[i], prod);
        balance += Cyc(mult) * qdim[i];
      }
      if (qdim[j] * qdim[k] == balance)
        report.pass("modular-dimension-balance");
      else
        report.fail("modular-dimension-balance", "(" + std::to_string(j) + "," + std::to_string(k) + ")");
    }

  Mat s = s_matrix(h, c, t, fam);
  if (s.determinant() != Cyc::zero())
    report.pass("modular-s-invertible");
  else
    report.fail("modular-s-invertible", "det = 0");

  return report;
}

}  // namespace xha
