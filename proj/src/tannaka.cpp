#include "xha/tannaka.hpp"

#include <string>

namespace xha {

namespace {

long diagram_ambient(const FiniteDiagram& x, std::vector<long>& offset) {
  offset.clear();
  long total = 0;
  for (long d : x.dims) {
    offset.push_back(total);
    total += d * d;
  }
  return total;
}

/// Columns are the vectors i_f(h) - j_f(h), one per (arrow, matrix unit of
/// Hom(X(dst), X(src))).
Mat relation_span(const FiniteDiagram& x) {
  std::vector<long> offset;
  long ambient = diagram_ambient(x, offset);
  long nrels = 0;
  for (const auto& f : x.arrows) nrels += x.dims[f.src] * x.dims[f.dst];
  Mat r(ambient, nrels);
  long col = 0;
  for (const auto& f : x.arrows) {
    const long da = x.dims[f.src], db = x.dims[f.dst];
    const Mat& val = f.value;
    if (val.rows() != db || val.cols() != da) throw ArithmeticError("relation_span: arrow value shape mismatch");
    for (long p = 0; p < da; ++p)
      for (long q = 0; q < db; ++q) {
        // h = E_pq: X(dst) -> X(src).  (h F)[i][j] = delta_{ip} F[q][j] at src;
        // (F h)[i][j] = F[i][p] delta_{jq} at dst.
        for (long j = 0; j < da; ++j) r.at(offset[f.src] + p * da + j, col) += val.at(q, j);
        for (long i = 0; i < db; ++i) r.at(offset[f.dst] + i * db + q, col) -= val.at(i, p);
        ++col;
      }
  }
  return r;
}

}  // namespace

std::vector<std::vector<Mat>> end_hom(const FiniteDiagram& x, const FiniteDiagram& y) {
  const long nobj = static_cast<long>(x.dims.size());
  if (static_cast<long>(y.dims.size()) != nobj || x.arrows.size() != y.arrows.size())
    throw ArithmeticError("end_hom: diagrams have different shapes");
  for (size_t t = 0; t < x.arrows.size(); ++t)
    if (x.arrows[t].src != y.arrows[t].src || x.arrows[t].dst != y.arrows[t].dst)
      throw ArithmeticError("end_hom: arrow " + std::to_string(t) + " connects different objects");

  // Unknowns: u_C (y.dims[C] x x.dims[C]), flattened row-major per object.
  std::vector<long> uoff;
  long nvars = 0;
  for (long c = 0; c < nobj; ++c) {
    uoff.push_back(nvars);
    nvars += y.dims[c] * x.dims[c];
  }
  long nrows = 0;
  for (const auto& f : x.arrows) nrows += y.dims[f.dst] * x.dims[f.src];
  Mat sys(nrows, nvars);
  long row = 0;
  for (size_t t = 0; t < x.arrows.size(); ++t) {
    const auto& fx = x.arrows[t];
    const auto& fy = y.arrows[t];
    const long a = fx.src, b = fx.dst;
    for (long p = 0; p < y.dims[b]; ++p)
      for (long q = 0; q < x.dims[a]; ++q) {
        // (Y(f) u_a - u_b X(f))[p][q] = 0
        for (long rr = 0; rr < y.dims[a]; ++rr) sys.at(row, uoff[a] + rr * x.dims[a] + q) += fy.value.at(p, rr);
        for (long s = 0; s < x.dims[b]; ++s) sys.at(row, uoff[b] + p * x.dims[b] + s) -= fx.value.at(s, q);
        ++row;
      }
  }
  std::vector<std::vector<Mat>> basis;
  for (const Mat& k : sys.kernel_basis()) {
    std::vector<Mat> u;
    for (long c = 0; c < nobj; ++c) {
      Mat m(y.dims[c], x.dims[c]);
      for (long i = 0; i < y.dims[c]; ++i)
        for (long j = 0; j < x.dims[c]; ++j) m.at(i, j) = k.at(uoff[c] + i * x.dims[c] + j, 0);
      u.push_back(std::move(m));
    }
    basis.push_back(std::move(u));
  }
  return basis;
}

long CoendPresentation::basis_object(long b) const {
  long idx = basis[b];
  for (long c = static_cast<long>(offset.size()) - 1; c >= 0; --c)
    if (idx >= offset[c]) return c;
  throw ArithmeticError("CoendPresentation: bad basis index");
}

long CoendPresentation::basis_row(long b) const {
  long c = basis_object(b);
  return (basis[b] - offset[c]) / diagram.dims[c];
}

long CoendPresentation::basis_col(long b) const {
  long c = basis_object(b);
  return (basis[b] - offset[c]) % diagram.dims[c];
}

CoendPresentation coend_coalgebra(const FiniteDiagram& x) {
  CoendPresentation p;
  p.diagram = x;
  p.ambient_dim = diagram_ambient(x, p.offset);

  Mat rel = relation_span(x);
  if (rel.cols() == 0) {
    p.basis.resize(p.ambient_dim);
    for (long i = 0; i < p.ambient_dim; ++i) p.basis[i] = i;
    p.projection = Mat::identity(p.ambient_dim);
  } else {
    p.basis = Mat::quotient_representatives(rel);
    std::vector<long> piv;
    rel.rref(&piv);
    // Square change of basis: independent relations, then the representatives.
    Mat m(p.ambient_dim, p.ambient_dim);
    long col = 0;
    for (long pc : piv) {
      for (long i = 0; i < p.ambient_dim; ++i) m.at(i, col) = rel.at(i, pc);
      ++col;
    }
    for (long b : p.basis) m.at(b, col++) = Cyc::one();
    Mat inv = m.inverse();
    const long q = static_cast<long>(p.basis.size());
    p.projection = Mat(q, p.ambient_dim);
    for (long i = 0; i < q; ++i)
      for (long j = 0; j < p.ambient_dim; ++j) p.projection.at(i, j) = inv.at(p.ambient_dim - q + i, j);
  }

  const long q = p.dim();
  auto pi_col = [&](long ambient_index) {
    Mat v(q, 1);
    for (long i = 0; i < q; ++i) v.at(i, 0) = p.projection.at(i, ambient_index);
    return v;
  };

  // Delta[E_ij at C] = sum_k [E_ik] (x) [E_kj]; epsilon = trace.
  p.delta = Mat(q * q, q);
  p.epsilon = Mat(1, q);
  for (long b = 0; b < q; ++b) {
    long c = p.basis_object(b), i = p.basis_row(b), j = p.basis_col(b);
    const long d = x.dims[c];
    for (long k = 0; k < d; ++k) {
      Mat lhs = pi_col(p.offset[c] + i * d + k);
      Mat rhs = pi_col(p.offset[c] + k * d + j);
      Mat term = lhs.kron(rhs);
      for (long rr = 0; rr < q * q; ++rr) p.delta.at(rr, b) += term.at(rr, 0);
    }
    if (i == j) p.epsilon.at(0, b) = Cyc::one();
  }

  // The relation span must be a coideal: the (projected) comultiplication and
  // the counit of each relation vector vanish. A failure is an internal bug.
  for (long rc = 0; rc < rel.cols(); ++rc) {
    Mat dsum(q * q, 1);
    Cyc tr = Cyc::zero();
    for (long c = 0; c < static_cast<long>(x.dims.size()); ++c) {
      const long d = x.dims[c];
      for (long i = 0; i < d; ++i) {
        tr += rel.at(p.offset[c] + i * d + i, rc);
        for (long j = 0; j < d; ++j) {
          const Cyc& coef = rel.at(p.offset[c] + i * d + j, rc);
          if (coef.is_zero()) continue;
          for (long k = 0; k < d; ++k)
            dsum = dsum + pi_col(p.offset[c] + i * d + k).kron(pi_col(p.offset[c] + k * d + j)) * coef;
        }
      }
    }
    if (!dsum.is_zero() || !tr.is_zero()) throw ArithmeticError("coend_coalgebra: relation span is not a coideal");
  }

  // Coassociativity and the counit law, computed column-wise to avoid the
  // q^3 x q^2 Kronecker blow-up.
  for (long b = 0; b < q; ++b) {
    std::vector<Cyc> lhs(q * q * q), rhs(q * q * q);
    std::vector<Cyc> left_counit(q), right_counit(q);
    for (long xy = 0; xy < q * q; ++xy) {
      const Cyc& v = p.delta.at(xy, b);
      if (v.is_zero()) continue;
      const long x = xy / q, y = xy % q;
      for (long zw = 0; zw < q * q; ++zw) {
        if (!p.delta.at(zw, x).is_zero()) lhs[zw * q + y] += p.delta.at(zw, x) * v;
        if (!p.delta.at(zw, y).is_zero()) rhs[x * q * q + zw] += p.delta.at(zw, y) * v;
      }
      left_counit[y] += p.epsilon.at(0, x) * v;
      right_counit[x] += p.epsilon.at(0, y) * v;
    }
    if (lhs != rhs) throw ArithmeticError("coend_coalgebra: quotient comultiplication is not coassociative");
    for (long y = 0; y < q; ++y) {
      Cyc want = (y == b) ? Cyc::one() : Cyc::zero();
      if (left_counit[y] != want || right_counit[y] != want)
        throw ArithmeticError("coend_coalgebra: quotient counit law fails");
    }
  }
  return p;
}

bool pairing_check(const FiniteDiagram& x) {
  auto ends = end_hom(x, x);
  CoendPresentation p = coend_coalgebra(x);
  const long q = p.dim();
  if (static_cast<long>(ends.size()) != q) return false;
  Mat pairing(q, q);
  for (long u = 0; u < q; ++u)
    for (long b = 0; b < q; ++b) {
      // <u, [E_ij at C]> = Tr(u_C E_ij) = u_C[j][i]
      long c = p.basis_object(b);
      pairing.at(u, b) = ends[u][c].at(p.basis_col(b), p.basis_row(b));
    }
  return pairing.is_invertible();
}

FiniteDiagram product_diagram(const FiniteDiagram& x, const FiniteDiagram& y) {
  const long ny = static_cast<long>(y.dims.size());
  FiniteDiagram p;
  for (long a = 0; a < static_cast<long>(x.dims.size()); ++a)
    for (long b = 0; b < ny; ++b) p.dims.push_back(x.dims[a] * y.dims[b]);
  for (const auto& f : x.arrows)
    for (long b = 0; b < ny; ++b)
      p.arrows.push_back({f.src * ny + b, f.dst * ny + b, f.value.kron(Mat::identity(y.dims[b]))});
  for (long a = 0; a < static_cast<long>(x.dims.size()); ++a)
    for (const auto& g : y.arrows)
      p.arrows.push_back({a * ny + g.src, a * ny + g.dst, Mat::identity(x.dims[a]).kron(g.value)});
  return p;
}

Mat noja_mul(const CoendPresentation& px, const CoendPresentation& py, const CoendPresentation& pxy) {
  const long ny = static_cast<long>(py.diagram.dims.size());
  const long qx = px.dim(), qy = py.dim(), qxy = pxy.dim();
  Mat m(qxy, qx * qy);
  for (long bx = 0; bx < qx; ++bx) {
    long a = px.basis_object(bx), i = px.basis_row(bx), j = px.basis_col(bx);
    for (long by = 0; by < qy; ++by) {
      long b = py.basis_object(by), k = py.basis_row(by), l = py.basis_col(by);
      const long db = py.diagram.dims[b];
      const long obj = a * ny + b;
      const long dob = pxy.diagram.dims[obj];
      long ambient = pxy.offset[obj] + (i * db + k) * dob + (j * db + l);
      for (long r = 0; r < qxy; ++r) m.at(r, bx * qy + by) = pxy.projection.at(r, ambient);
    }
  }
  if (!m.is_square() || !m.is_invertible()) throw ArithmeticError("noja_mul: product map is not bijective");
  // Comultiplicativity, column by column: Delta_xy m[bx,by] must equal
  // sum over delta entries of m[a,c] (x) m[b,d], avoiding (m kron m).
  Mat lhs = pxy.delta * m;
  for (long bx = 0; bx < qx; ++bx)
    for (long by = 0; by < qy; ++by) {
      std::vector<Cyc> rhs(qxy * qxy);
      for (long ab = 0; ab < qx * qx; ++ab) {
        const Cyc& cx = px.delta.at(ab, bx);
        if (cx.is_zero()) continue;
        const long a = ab / qx, b = ab % qx;
        for (long cd = 0; cd < qy * qy; ++cd) {
          const Cyc& cy = py.delta.at(cd, by);
          if (cy.is_zero()) continue;
          const long c = cd / qy, d = cd % qy;
          Cyc coef = cx * cy;
          for (long r1 = 0; r1 < qxy; ++r1) {
            const Cyc& m1 = m.at(r1, a * qy + c);
            if (m1.is_zero()) continue;
            for (long r2 = 0; r2 < qxy; ++r2) {
              const Cyc& m2 = m.at(r2, b * qy + d);
              if (!m2.is_zero()) rhs[r1 * qxy + r2] += coef * m1 * m2;
            }
          }
        }
      }
      for (long r = 0; r < qxy * qxy; ++r)
        if (lhs.at(r, bx * qy + by) != rhs[r])
          throw ArithmeticError("noja_mul: product map is not comultiplicative");
    }
  return m;
}

namespace {

[[noreturn]] void presentation_error(const std::string& what) {
  throw ArithmeticError("reconstruct: " + what);
}

void validate_presentation(const TannakianPresentation& tp) {
  const long m = tp.group.order();
  const long nobj = static_cast<long>(tp.grade.size());
  if (static_cast<long>(tp.dims.size()) != nobj || static_cast<long>(tp.tensor.size()) != nobj ||
      static_cast<long>(tp.dual.size()) != nobj || static_cast<long>(tp.evaluation.size()) != nobj ||
      static_cast<long>(tp.coevaluation.size()) != nobj || static_cast<long>(tp.conj_obj.size()) != m ||
      static_cast<long>(tp.conj_mat.size()) != m)
    presentation_error("field sizes inconsistent with object count");
  for (long u = 0; u < nobj; ++u) {
    if (tp.grade[u] < 0 || tp.grade[u] >= m) presentation_error("grade out of range at object " + std::to_string(u));
    if (tp.dims[u] < 0) presentation_error("negative dimension at object " + std::to_string(u));
  }
  for (const auto& f : tp.arrows) {
    if (tp.grade[f.src] != tp.grade[f.dst]) presentation_error("arrow crosses components");
    if (f.value.rows() != tp.dims[f.dst] || f.value.cols() != tp.dims[f.src])
      presentation_error("arrow value shape mismatch");
  }
  for (long u = 0; u < nobj; ++u)
    for (long v = 0; v < nobj; ++v) {
      long w = tp.tensor[u][v];
      if (w < 0 || w >= nobj) presentation_error("tensor table out of range");
      if (tp.grade[w] != tp.group.mul(tp.grade[u], tp.grade[v]))
        presentation_error("gradings do not multiply at (" + std::to_string(u) + "," + std::to_string(v) + ")");
      if (tp.dims[w] != tp.dims[u] * tp.dims[v])
        presentation_error("tensor value space mismatch at (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
  if (tp.grade[tp.unit_object] != tp.group.identity() || tp.dims[tp.unit_object] != 1)
    presentation_error("unit object is not 1-dimensional over the neutral component");
  for (long u = 0; u < nobj; ++u) {
    long us = tp.dual[u];
    if (tp.grade[us] != tp.group.inv(tp.grade[u])) presentation_error("dual grade mismatch at " + std::to_string(u));
    const long du = tp.dims[u], ds = tp.dims[us];
    const Mat& ev = tp.evaluation[u];
    const Mat& coev = tp.coevaluation[u];
    if (ev.rows() != 1 || ev.cols() != ds * du || coev.rows() != du * ds || coev.cols() != 1)
      presentation_error("dual witness shapes at " + std::to_string(u));
    Mat iu = Mat::identity(du), is = Mat::identity(ds);
    bool zig = iu.kron(ev) * coev.kron(iu) == iu;
    bool zag = ev.kron(is) * is.kron(coev) == is;
    if (!zig || !zag) presentation_error("dual witnesses fail the zig-zag identities at " + std::to_string(u));
  }
  for (long b = 0; b < m; ++b) {
    if (static_cast<long>(tp.conj_obj[b].size()) != nobj || static_cast<long>(tp.conj_mat[b].size()) != nobj)
      presentation_error("conjugation tables inconsistent");
    for (long u = 0; u < nobj; ++u) {
      long v = tp.conj_obj[b][u];
      if (v < 0 || v >= nobj || tp.grade[v] != tp.group.conj(b, tp.grade[u]))
        presentation_error("conjugation grading at (" + std::to_string(b) + "," + std::to_string(u) + ")");
      if (tp.conj_mat[b][u].rows() != tp.dims[v] || tp.conj_mat[b][u].cols() != tp.dims[u] ||
          !tp.conj_mat[b][u].is_invertible())
        presentation_error("conjugation matrix at (" + std::to_string(b) + "," + std::to_string(u) + ")");
    }
  }
  const long e = tp.group.identity();
  for (long u = 0; u < nobj; ++u)
    if (tp.conj_obj[e][u] != u || tp.conj_mat[e][u] != Mat::identity(tp.dims[u]))
      presentation_error("neutral conjugation is not the identity");
  for (long b1 = 0; b1 < m; ++b1)
    for (long b2 = 0; b2 < m; ++b2)
      for (long u = 0; u < nobj; ++u) {
        long mid = tp.conj_obj[b2][u];
        if (tp.conj_obj[b1][mid] != tp.conj_obj[tp.group.mul(b1, b2)][u] ||
            tp.conj_mat[b1][mid] * tp.conj_mat[b2][u] != tp.conj_mat[tp.group.mul(b1, b2)][u])
          presentation_error("conjugation is not multiplicative at (" + std::to_string(b1) + "," +
                             std::to_string(b2) + "," + std::to_string(u) + ")");
      }
}

}  // namespace

ReconstructionResult reconstruct(const TannakianPresentation& tp) {
  validate_presentation(tp);
  const long m = tp.group.order();
  const long nobj = static_cast<long>(tp.grade.size());

  // Per-component subdiagrams, with the local index of each global object.
  std::vector<std::vector<long>> globals(m);
  std::vector<long> local(nobj);
  for (long u = 0; u < nobj; ++u) {
    local[u] = static_cast<long>(globals[tp.grade[u]].size());
    globals[tp.grade[u]].push_back(u);
  }
  std::vector<FiniteDiagram> sub(m);
  for (long a = 0; a < m; ++a)
    for (long u : globals[a]) sub[a].dims.push_back(tp.dims[u]);
  for (const auto& f : tp.arrows)
    sub[tp.grade[f.src]].arrows.push_back({local[f.src], local[f.dst], f.value});

  std::vector<CoendPresentation> coends;
  for (long a = 0; a < m; ++a) coends.push_back(coend_coalgebra(sub[a]));

  // The class of an arbitrary endomorphism placed at a given global object.
  auto project_at = [&](long obj, const Mat& endo) {
    const CoendPresentation& p = coends[tp.grade[obj]];
    const long d = tp.dims[obj], q = p.dim();
    Mat v(q, 1);
    for (long i = 0; i < d; ++i)
      for (long j = 0; j < d; ++j) {
        const Cyc& coef = endo.at(i, j);
        if (coef.is_zero()) continue;
        long ambient = p.offset[local[obj]] + i * d + j;
        for (long r = 0; r < q; ++r) v.at(r, 0) += p.projection.at(r, ambient) * coef;
      }
    return v;
  };
  auto matrix_unit = [](long d, long i, long j) {
    Mat e(d, d);
    e.at(i, j) = Cyc::one();
    return e;
  };

  std::vector<Component> comps;
  for (long a = 0; a < m; ++a) comps.push_back(Component{coends[a].dim(), coends[a].delta, coends[a].epsilon});

  // Multiplication: [E_ij at U] . [E_kl at V] = [E_ij (x) E_kl at U (x) V].
  std::vector<std::vector<Mat>> mult(m, std::vector<Mat>(m));
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b) {
      const long qa = coends[a].dim(), qb = coends[b].dim();
      const long ab = tp.group.mul(a, b);
      Mat mu(coends[ab].dim(), qa * qb);
      for (long ba = 0; ba < qa; ++ba) {
        long u = globals[a][coends[a].basis_object(ba)];
        Mat eu = matrix_unit(tp.dims[u], coends[a].basis_row(ba), coends[a].basis_col(ba));
        for (long bb = 0; bb < qb; ++bb) {
          long v = globals[b][coends[b].basis_object(bb)];
          Mat ev = matrix_unit(tp.dims[v], coends[b].basis_row(bb), coends[b].basis_col(bb));
          Mat cls = project_at(tp.tensor[u][v], eu.kron(ev));
          for (long r = 0; r < mu.rows(); ++r) mu.at(r, ba * qb + bb) = cls.at(r, 0);
        }
      }
      mult[a][b] = std::move(mu);
    }

  Mat unit = project_at(tp.unit_object, Mat::identity(1));

  // Antipode: transpose through the dual witnesses, placed at U*.
  std::vector<Mat> antipode(m);
  for (long a = 0; a < m; ++a) {
    const long qa = coends[a].dim();
    Mat s(coends[tp.group.inv(a)].dim(), qa);
    for (long ba = 0; ba < qa; ++ba) {
      long u = globals[a][coends[a].basis_object(ba)];
      long us = tp.dual[u];
      const long du = tp.dims[u], ds = tp.dims[us];
      Mat e = matrix_unit(du, coends[a].basis_row(ba), coends[a].basis_col(ba));
      Mat is = Mat::identity(ds);
      Mat te = tp.evaluation[u].kron(is) * is.kron(e).kron(is) * is.kron(tp.coevaluation[u]);
      Mat cls = project_at(us, te);
      for (long r = 0; r < s.rows(); ++r) s.at(r, ba) = cls.at(r, 0);
    }
    antipode[a] = std::move(s);
  }

  // Conjugation by transport through the natural isomorphisms.
  std::vector<std::vector<Mat>> conj(m, std::vector<Mat>(m));
  for (long b = 0; b < m; ++b)
    for (long a = 0; a < m; ++a) {
      const long qa = coends[a].dim();
      Mat phi(coends[tp.group.conj(b, a)].dim(), qa);
      for (long ba = 0; ba < qa; ++ba) {
        long u = globals[a][coends[a].basis_object(ba)];
        Mat e = matrix_unit(tp.dims[u], coends[a].basis_row(ba), coends[a].basis_col(ba));
        Mat cls = project_at(tp.conj_obj[b][u], tp.conj_mat[b][u] * e * tp.conj_mat[b][u].inverse());
        for (long r = 0; r < phi.rows(); ++r) phi.at(r, ba) = cls.at(r, 0);
      }
      conj[b][a] = std::move(phi);
    }

  CrossedHopfGAlgebra structure(tp.group, std::move(comps), std::move(mult), std::move(unit), std::move(conj),
                                std::move(antipode));

  Report rep = verify_crossed_hopf(structure);
  if (!rep.all_passed())
    throw ArithmeticError("reconstruct: output fails the structure axioms\n" + rep.to_text());

  // Canonical coactions u_j -> sum_i [E_ij] (x) u_i, one per object.
  std::vector<Comodule> coactions;
  for (long u = 0; u < nobj; ++u) {
    const long a = tp.grade[u];
    const CoendPresentation& p = coends[a];
    const long d = tp.dims[u], q = p.dim();
    Mat rho(q * d, d);
    for (long i = 0; i < d; ++i)
      for (long j = 0; j < d; ++j) {
        Mat cls = project_at(u, matrix_unit(d, i, j));
        for (long r = 0; r < q; ++r) rho.at(r * d + i, j) += cls.at(r, 0);
      }
    Comodule c{a, d, std::move(rho)};
    if (!is_comodule(structure, c))
      throw ArithmeticError("reconstruct: canonical coaction of object " + std::to_string(u) +
                            " is not a comodule");
    coactions.push_back(std::move(c));
  }
  for (size_t t = 0; t < tp.arrows.size(); ++t) {
    const auto& f = tp.arrows[t];
    ComoduleMorphism mor{coactions[f.src], coactions[f.dst], f.value};
    if (!is_colinear(structure, mor))
      throw ArithmeticError("reconstruct: generating arrow " + std::to_string(t) + " is not colinear");
  }
  return ReconstructionResult{std::move(structure), std::move(coends), std::move(coactions)};
}

TannakianPresentation presentation_of_regulars(const CrossedHopfGAlgebra& h) {
  const long m = h.group().order();
  for (long a = 0; a < m; ++a)
    if (h.dim(a) != 1) throw ArithmeticError("presentation_of_regulars: components must be 1-dimensional");
  TannakianPresentation tp;
  tp.group = h.group();
  for (long a = 0; a < m; ++a) {
    tp.grade.push_back(a);
    tp.dims.push_back(1);
    tp.arrows.push_back({a, a, Mat::identity(1)});
  }
  tp.tensor.assign(m, std::vector<long>(m));
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b) tp.tensor[a][b] = h.group().mul(a, b);
  tp.unit_object = h.group().identity();
  for (long a = 0; a < m; ++a) {
    tp.dual.push_back(h.group().inv(a));
    tp.evaluation.push_back(Mat::identity(1));
    tp.coevaluation.push_back(Mat::identity(1));
  }
  tp.conj_obj.assign(m, std::vector<long>(m));
  tp.conj_mat.assign(m, std::vector<Mat>(m));
  for (long b = 0; b < m; ++b)
    for (long a = 0; a < m; ++a) {
      tp.conj_obj[b][a] = h.group().conj(b, a);
      tp.conj_mat[b][a] = h.conj(b, a);
    }
  return tp;
}

std::optional<std::vector<Mat>> group_like_isomorphism(const CrossedHopfGAlgebra& a, const CrossedHopfGAlgebra& b) {
  if (!(a.group() == b.group())) return std::nullopt;
  const long m = a.group().order();
  for (long i = 0; i < m; ++i)
    if (a.dim(i) != 1 || b.dim(i) != 1) return std::nullopt;

  // In a 1-dim component with delta = [d] the group-like element is d * basis
  // (the counit law forces d = 1/eps). Match group-likes: F_alpha = d_b / d_a.
  std::vector<Mat> f(m);
  for (long i = 0; i < m; ++i) {
    Cyc da = as_scalar(a.delta(i)), db = as_scalar(b.delta(i));
    if (da.is_zero() || db.is_zero()) return std::nullopt;
    f[i] = Mat::scalar(db * da.inverse());
  }

  for (long i = 0; i < m; ++i) {
    if (b.delta(i) * f[i] != f[i].kron(f[i]) * a.delta(i)) return std::nullopt;
    if (b.epsilon(i) * f[i] != a.epsilon(i)) return std::nullopt;
    if (f[a.group().inv(i)] * a.antipode(i) != b.antipode(i) * f[i]) return std::nullopt;
    for (long j = 0; j < m; ++j) {
      if (f[a.group().mul(i, j)] * a.mult(i, j) != b.mult(i, j) * f[i].kron(f[j])) return std::nullopt;
      if (f[a.group().conj(j, i)] * a.conj(j, i) != b.conj(j, i) * f[i]) return std::nullopt;
    }
  }
  if (f[a.group().identity()] * a.unit() != b.unit()) return std::nullopt;
  return f;
}

}  // namespace xha
