#include "xha/center.hpp"

#include <string>

namespace xha {

namespace {

std::optional<long> find_member(const std::vector<Comodule>& family, const Comodule& m) {
  for (size_t i = 0; i < family.size(); ++i)
    if (same_comodule(family[i], m)) return static_cast<long>(i);
  return std::nullopt;
}

std::string pair_witness(long i, long j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Report verify_half_braiding(const CrossedHopfGAlgebra& h, const HalfBraidingCandidate& hb) {
  Report report;
  const long alpha = hb.object.component;
  const long nfam = static_cast<long>(hb.family.size());
  if (static_cast<long>(hb.c.size()) != nfam) {
    report.input_error("half-braiding-instance", "one matrix per family member required");
    return report;
  }

  for (long i = 0; i < nfam; ++i) {
    Comodule source = tensor_comodules(h, hb.object, hb.family[i]);
    Comodule target = tensor_comodules(h, conjugate_comodule(h, hb.family[i], alpha), hb.object);
    ComoduleMorphism m{source, target, hb.c[i]};
    if (hb.c[i].rows() != target.dim || hb.c[i].cols() != source.dim) {
      report.input_error("half-braiding-instance", "(" + std::to_string(i) + ") shape mismatch");
      continue;
    }
    if (is_colinear(h, m) && hb.c[i].is_square() && hb.c[i].is_invertible())
      report.pass("half-braiding-instance");
    else
      report.fail("half-braiding-instance", "(" + std::to_string(i) + ")");
  }

  for (size_t m = 0; m < hb.morphisms.size(); ++m) {
    const ComoduleMorphism& g = hb.morphisms[m];
    auto i = find_member(hb.family, g.source);
    auto j = find_member(hb.family, g.target);
    if (!i || !j) {
      report.skip("half-braiding-naturality", "(" + std::to_string(m) + ") endpoints outside the family");
      continue;
    }
    // (Phi_alpha(g) (x) I_U) . c_V = c_V' . (I_U (x) g)
    Mat lhs = g.f.kron(Mat::identity(hb.object.dim)) * hb.c[*i];
    Mat rhs = hb.c[*j] * Mat::identity(hb.object.dim).kron(g.f);
    if (lhs == rhs)
      report.pass("half-braiding-naturality");
    else
      report.fail("half-braiding-naturality", "(" + std::to_string(m) + ")");
  }

  for (const auto& tp : hb.tensor_pairs) {
    if (tp.left < 0 || tp.left >= nfam || tp.right < 0 || tp.right >= nfam) {
      report.input_error("half-braiding-multiplicativity", pair_witness(tp.left, tp.right) + " out of range");
      continue;
    }
    if (tp.result < 0) {
      report.skip("half-braiding-multiplicativity", pair_witness(tp.left, tp.right) + " no tensor entry");
      continue;
    }
    if (tp.result >= nfam ||
        !same_comodule(hb.family[tp.result], tensor_comodules(h, hb.family[tp.left], hb.family[tp.right]))) {
      report.input_error("half-braiding-multiplicativity",
                         pair_witness(tp.left, tp.right) + " result is not the tensor product");
      continue;
    }
    // c_{V (x) W} = (I_{Phi_alpha(V)} (x) c_W) . (c_V (x) I_W)
    Mat rhs = Mat::identity(hb.family[tp.left].dim).kron(hb.c[tp.right]) *
              hb.c[tp.left].kron(Mat::identity(hb.family[tp.right].dim));
    if (hb.c[tp.result] == rhs)
      report.pass("half-braiding-multiplicativity");
    else
      report.fail("half-braiding-multiplicativity", pair_witness(tp.left, tp.right));
  }
  return report;
}

std::vector<std::vector<Mat>> natural_solution_space(const CrossedHopfGAlgebra& h, const Comodule& u,
                                                     const ObjectFamily& fam) {
  const long alpha = u.component;
  const long nfam = static_cast<long>(fam.objects.size());

  // Unknowns: the entries of each c_i, flattened row-major and concatenated.
  std::vector<long> off;
  std::vector<long> crows, ccols;
  long nvars = 0;
  for (long i = 0; i < nfam; ++i) {
    off.push_back(nvars);
    crows.push_back(fam.objects[i].dim * u.dim);
    ccols.push_back(u.dim * fam.objects[i].dim);
    nvars += crows.back() * ccols.back();
  }

  std::vector<std::vector<Cyc>> rows;
  auto add_colinearity = [&](long i) {
    Comodule source = tensor_comodules(h, u, fam.objects[i]);
    Comodule target = tensor_comodules(h, conjugate_comodule(h, fam.objects[i], alpha), u);
    const long d = h.dim(target.component);
    // rho_target . c - (I_d (x) c) . rho_source = 0
    for (long a = 0; a < d; ++a)
      for (long r = 0; r < crows[i]; ++r)
        for (long s = 0; s < ccols[i]; ++s) {
          std::vector<Cyc> row(nvars);
          bool nonzero = false;
          for (long rr = 0; rr < crows[i]; ++rr) {
            const Cyc& v = target.rho.at(a * crows[i] + r, rr);
            if (!v.is_zero()) {
              row[off[i] + rr * ccols[i] + s] += v;
              nonzero = true;
            }
          }
          for (long ss = 0; ss < ccols[i]; ++ss) {
            const Cyc& v = source.rho.at(a * ccols[i] + ss, s);
            if (!v.is_zero()) {
              row[off[i] + r * ccols[i] + ss] -= v;
              nonzero = true;
            }
          }
          if (nonzero) rows.push_back(std::move(row));
        }
  };
  auto add_naturality = [&](const ComoduleMorphism& g, long i, long j) {
    // g.f.kron(I_u) . c_i - c_j . I_u.kron(g.f) = 0
    Mat left = g.f.kron(Mat::identity(u.dim));
    Mat right = Mat::identity(u.dim).kron(g.f);
    for (long r = 0; r < crows[j]; ++r)
      for (long s = 0; s < ccols[i]; ++s) {
        std::vector<Cyc> row(nvars);
        bool nonzero = false;
        for (long k = 0; k < crows[i]; ++k)
          if (!left.at(r, k).is_zero()) {
            row[off[i] + k * ccols[i] + s] += left.at(r, k);
            nonzero = true;
          }
        for (long k = 0; k < ccols[j]; ++k)
          if (!right.at(k, s).is_zero()) {
            row[off[j] + r * ccols[j] + k] -= right.at(k, s);
            nonzero = true;
          }
        if (nonzero) rows.push_back(std::move(row));
      }
  };

  for (long i = 0; i < nfam; ++i) add_colinearity(i);
  for (const ComoduleMorphism& g : fam.morphisms) {
    auto i = find_member(fam.objects, g.source);
    auto j = find_member(fam.objects, g.target);
    if (i && j) add_naturality(g, *i, *j);
  }

  Mat sys(static_cast<long>(rows.size()), nvars);
  for (long r = 0; r < sys.rows(); ++r)
    for (long s = 0; s < nvars; ++s) sys.at(r, s) = rows[r][s];

  std::vector<std::vector<Mat>> basis;
  for (const Mat& k : sys.kernel_basis()) {
    std::vector<Mat> fam_mats;
    for (long i = 0; i < nfam; ++i) {
      Mat m(crows[i], ccols[i]);
      for (long r = 0; r < crows[i]; ++r)
        for (long s = 0; s < ccols[i]; ++s) m.at(r, s) = k.at(off[i] + r * ccols[i] + s, 0);
      fam_mats.push_back(std::move(m));
    }
    basis.push_back(std::move(fam_mats));
  }
  return basis;
}

DZObject dz_twist_tensor(const CrossedHopfGAlgebra& h, const Cobraiding& g, const DZObject& a, const DZObject& b) {
  const long alpha = a.object.component, beta = b.object.component;
  Comodule ua = conjugate_comodule(h, a.object, alpha);
  Comodule ub = conjugate_comodule(h, b.object, beta);
  Mat c1 = braiding_map(h, g, ua, ub).f;
  Mat c2 = braiding_map(h, g, conjugate_comodule(h, b.object, h.group().mul(alpha, beta)), ua).f;
  DZObject out{tensor_comodules(h, a.object, b.object), c2 * c1 * a.t.kron(b.t)};
  Comodule target = conjugate_comodule(h, out.object, out.object.component);
  ComoduleMorphism m{out.object, target, out.t};
  if (!out.t.is_square() || !out.t.is_invertible() || !is_colinear(h, m))
    throw ArithmeticError("dz_twist_tensor: result is not a balanced object");
  return out;
}

Report ribbon_membership(const CrossedHopfGAlgebra& h, const Cobraiding& g, const DZObject& u,
                         const std::optional<DualComodule>& witness) {
  Report report;
  if (!witness) {
    report.input_error("ribbon-witness", "dual witnesses not supplied");
    return report;
  }
  const long alpha = u.object.component;
  const long n = u.object.dim, ds = witness->dual.dim;
  const Mat& ev = witness->evaluation.f;
  const Mat& coev = witness->coevaluation.f;
  if (ev.rows() != 1 || ev.cols() != ds * n || coev.rows() != n * ds || coev.cols() != 1) {
    report.input_error("ribbon-witness", "witness shapes do not match the object");
    return report;
  }

  // the balanced-object invariant itself
  {
    ComoduleMorphism m{u.object, conjugate_comodule(h, u.object, alpha), u.t};
    if (u.t.is_square() && u.t.is_invertible() && is_colinear(h, m))
      report.pass("ribbon-object");
    else
      report.fail("ribbon-object", "t is not a colinear isomorphism");
  }

  // duality survives conjugation by every beta commuting with alpha
  for (long beta = 0; beta < h.group().order(); ++beta) {
    if (h.group().mul(beta, alpha) != h.group().mul(alpha, beta)) continue;
    Comodule dual_b = conjugate_comodule(h, witness->dual, beta);
    Comodule u_b = conjugate_comodule(h, u.object, beta);
    ComoduleMorphism ev_b{tensor_comodules(h, dual_b, u_b), trivial_comodule(h), ev};
    ComoduleMorphism coev_b{trivial_comodule(h), tensor_comodules(h, u_b, dual_b), coev};
    if (is_colinear(h, ev_b) && is_colinear(h, coev_b))
      report.pass("ribbon-good");
    else
      report.fail("ribbon-good", "(" + h.group().label(beta) + ")");
  }

  // tortility: (I (x) mate(t)) . b = (t (x) I) . b
  Mat in = Mat::identity(n), is = Mat::identity(ds);
  Mat mate = ev.kron(is) * is.kron(u.t).kron(is) * is.kron(coev);
  if (in.kron(mate) * coev == u.t.kron(is) * coev)
    report.pass("ribbon-tortility");
  else
    report.fail("ribbon-tortility", "mate of t breaks the duality compatibility");

  // t^-2 = omega, with omega built from the displayed duality loop
  const long alpha2 = h.group().mul(alpha, alpha);
  Comodule ua = conjugate_comodule(h, u.object, alpha);
  DualComodule dua = dual_comodule(h, ua);
  Mat c1 = braiding_map(h, g, ua, dua.dual).f;
  Mat ctilde = braiding_map(h, g, conjugate_comodule(h, u.object, alpha2), u.object).f.inverse();
  Mat omega = ev.kron(in) * in.kron(ctilde) * (c1 * dua.coevaluation.f).kron(in);
  ComoduleMorphism omega_m{conjugate_comodule(h, u.object, alpha2), u.object, omega};
  Mat theta2 = u.t * u.t;
  if (!theta2.is_invertible() || !is_colinear(h, omega_m))
    report.fail("ribbon-omega", "loop is not a colinear isomorphism");
  else if (theta2.inverse() == omega)
    report.pass("ribbon-omega");
  else
    report.fail("ribbon-omega", "t^-2 differs from the duality loop");
  return report;
}

}  // namespace xha
