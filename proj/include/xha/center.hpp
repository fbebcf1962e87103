#pragma once

#include "xha/comod.hpp"

namespace xha {

/// A candidate half-braiding: an object U over component alpha together with
/// matrices c_V: U (x) V -> Phi_alpha(V) (x) U for every member of a finite
/// generating family. Tensor pairs record which family member realizes
/// V_left (x) V_right; a negative result index marks the pair as absent.
struct HalfBraidingCandidate {
  Comodule object;
  std::vector<Comodule> family;
  std::vector<ComoduleMorphism> morphisms;  // between family members
  struct TensorPair {
    long left = 0;
    long right = 0;
    long result = -1;
  };
  std::vector<TensorPair> tensor_pairs;
  std::vector<Mat> c;  // one matrix per family member
};

/// Checks that each c_V is an invertible colinear map, naturality against the
/// listed morphisms, and multiplicativity on the listed tensor pairs. Pairs
/// without a result entry are reported as skips.
Report verify_half_braiding(const CrossedHopfGAlgebra& h, const HalfBraidingCandidate& hb);

/// Basis of the linear space of families {c_V} satisfying colinearity and
/// naturality (the linear part of the half-braiding conditions); each basis
/// element is one matrix per family object. Multiplicativity and
/// invertibility are nonlinear and are left to pointwise checks.
std::vector<std::vector<Mat>> natural_solution_space(const CrossedHopfGAlgebra& h, const Comodule& u,
                                                     const ObjectFamily& fam);

/// A balanced object: U over alpha with an isomorphism t: U -> Phi_alpha(U).
struct DZObject {
  Comodule object;
  Mat t;
};

/// The balanced tensor product (U,t) (x) (U',t'): the underlying object is
/// U (x) U' and the twist is the double braiding composed with t (x) t'.
/// The output is asserted to be a colinear isomorphism.
DZObject dz_twist_tensor(const CrossedHopfGAlgebra& h, const Cobraiding& g, const DZObject& a, const DZObject& b);

/// Membership in the ribbon subcategory: duality compatible with conjugation
/// by every group element commuting with the component (ribbon-good),
/// twist/duality compatibility through the mate of t (ribbon-tortility), and
/// t^-2 equal to the duality loop omega (ribbon-omega). Both sides of the
/// omega identity are computed by independent composites.
Report ribbon_membership(const CrossedHopfGAlgebra& h, const Cobraiding& g, const DZObject& u,
                         const std::optional<DualComodule>& witness);

}  // namespace xha
