#pragma once

#include "xha/comod.hpp"
#include "xha/structure.hpp"

namespace xha {

/// A finite diagram of finite-dimensional value spaces and generating arrows.
/// Composite arrows are implied: their relations lie in the span of the
/// generator relations.
struct FiniteDiagram {
  struct Arrow {
    long src = 0;
    long dst = 0;
    Mat value;  // dims[dst] x dims[src]
  };
  std::vector<long> dims;
  std::vector<Arrow> arrows;
};

/// Basis of natural transformations X -> Y over the same object set: the
/// kernel of the stacked constraints Y(f) u_src - u_dst X(f). Each element is
/// one matrix per object.
std::vector<std::vector<Mat>> end_hom(const FiniteDiagram& x, const FiniteDiagram& y);

/// The coend coalgebra presented as a quotient of (+)_C End(X(C)) by the span
/// of i_f(h) - j_f(h). Ambient coordinates flatten each End(X(C)) row-major
/// (offset[C] + i*dims[C] + j  <->  the matrix unit E_ij at C).
struct CoendPresentation {
  FiniteDiagram diagram;
  long ambient_dim = 0;
  std::vector<long> offset;  // per object
  std::vector<long> basis;   // ambient indices of the deterministic quotient basis
  Mat projection;            // dim() x ambient_dim, kills the relation span
  Mat delta;                 // dim()^2 x dim()
  Mat epsilon;               // 1 x dim()

  long dim() const { return static_cast<long>(basis.size()); }
  // decode a basis index into (object, row, column)
  long basis_object(long b) const;
  long basis_row(long b) const;
  long basis_col(long b) const;
};

/// Builds the quotient with its matrix-coalgebra structure; verifies that the
/// relation span is a coideal and that the quotient is coassociative/counital
/// (a failure throws: it indicates a bug, not bad input).
CoendPresentation coend_coalgebra(const FiniteDiagram& x);

/// dim End(X) = dim coend, and the trace pairing <u,[h]> = Tr(u_C h) between
/// the two bases is nondegenerate.
bool pairing_check(const FiniteDiagram& x);

/// The product diagram: objects (A,B) lexicographically, value spaces
/// X(A) (x) Y(B), arrows (f, id) and (id, g).
FiniteDiagram product_diagram(const FiniteDiagram& x, const FiniteDiagram& y);

/// The coalgebra isomorphism [S] (x) [T] -> [S (x) T] from the tensor product
/// of two coends onto the coend of the product diagram, as a
/// pxy.dim() x (px.dim() * py.dim()) matrix. Asserted bijective and
/// comultiplicative.
Mat noja_mul(const CoendPresentation& px, const CoendPresentation& py, const CoendPresentation& pxy);

/// A strict tensor presentation: graded objects with value spaces, arrows
/// inside components, a product table realizing X(U (x) V) = X(U) (x) X(V),
/// dual witnesses, and conjugation data.
struct TannakianPresentation {
  FiniteGroup group = FiniteGroup::trivial();
  std::vector<long> grade;   // object -> component
  std::vector<long> dims;    // object -> dim X(U)
  std::vector<FiniteDiagram::Arrow> arrows;  // src/dst are global object indices, same grade
  std::vector<std::vector<long>> tensor;     // [u][v] -> object index of U (x) V
  long unit_object = 0;
  std::vector<long> dual;          // object -> U*
  std::vector<Mat> evaluation;     // per object: 1 x (dim U* * dim U)
  std::vector<Mat> coevaluation;   // per object: (dim U * dim U*) x 1
  std::vector<std::vector<long>> conj_obj;  // [beta][u] -> Phi_beta(U)
  std::vector<std::vector<Mat>> conj_mat;   // [beta][u]: X(U) -> X(Phi_beta(U))
};

/// Desk-scale Tannaka reconstruction: per-component coends assembled into a
/// crossed Hopf G-algebra (multiplication via the product classes, antipode
/// through the dual witnesses, conjugation by transport). Postconditions —
/// the axioms verifier and the canonical coactions — are asserted; a
/// violation throws with the witness.
struct ReconstructionResult {
  CrossedHopfGAlgebra structure;
  std::vector<CoendPresentation> coends;      // per component
  std::vector<Comodule> canonical_coactions;  // per presentation object
};
ReconstructionResult reconstruct(const TannakianPresentation& tp);

/// The presentation whose objects are the regular comodules of a structure
/// with 1-dimensional components (one object per component, all value spaces
/// the ground field).
TannakianPresentation presentation_of_regulars(const CrossedHopfGAlgebra& h);

/// For structures with 1-dimensional components: the isomorphism matching
/// group-like elements, verified as an invertible structure morphism.
std::optional<std::vector<Mat>> group_like_isomorphism(const CrossedHopfGAlgebra& a, const CrossedHopfGAlgebra& b);

}  // namespace xha
