#pragma once

#include "xha/quasi.hpp"
#include "xha/structure.hpp"

#include <functional>

namespace xha {

/// A left comodule over one component: coaction rho: M -> H_alpha (x) M as a
/// (d_alpha * dim) x dim matrix.
struct Comodule {
  long component = 0;
  long dim = 0;
  Mat rho;
};

/// f: source -> target between comodules over the same component.
struct ComoduleMorphism {
  Comodule source;
  Comodule target;
  Mat f;
};

bool same_comodule(const Comodule& a, const Comodule& b);

/// Coaction coassociativity and counit law.
bool is_comodule(const CrossedHopfGAlgebra& h, const Comodule& m);
/// rho_target . f = (I (x) f) . rho_source.
bool is_colinear(const CrossedHopfGAlgebra& h, const ComoduleMorphism& f);

/// The tensor unit: 1-dim over the neutral component with coaction eta.
Comodule trivial_comodule(const CrossedHopfGAlgebra& h);
/// H_alpha coacting on itself by Delta_alpha.
Comodule regular_comodule(const CrossedHopfGAlgebra& h, long alpha);
/// rho(m (x) n) = m_a n_b (x) m_M (x) n_N over component alpha*beta.
Comodule tensor_comodules(const CrossedHopfGAlgebra& h, const Comodule& m, const Comodule& n);
/// Phi_beta(M): same space, coaction (phi_beta (x) I) . rho.
Comodule conjugate_comodule(const CrossedHopfGAlgebra& h, const Comodule& m, long beta);
/// The isomorphism Phi_beta(H_alpha) -> H_{beta alpha beta^-1} with matrix phi_beta.
ComoduleMorphism hat_phi_iso(const CrossedHopfGAlgebra& h, long alpha, long beta);

/// Left dual at component alpha^-1 with evaluation d: M* (x) M -> 1 (the
/// standard pairing) and coevaluation b: 1 -> M (x) M*. The dual coaction is
/// the unique one making the pairing colinear; both morphisms are checked and
/// an ArithmeticError is thrown if either fails.
struct DualComodule {
  Comodule dual;
  ComoduleMorphism evaluation;
  ComoduleMorphism coevaluation;
};
DualComodule dual_comodule(const CrossedHopfGAlgebra& h, const Comodule& m);

/// c_{M,N}: M (x) N -> Phi_alpha(N) (x) M induced by the cobraiding.
ComoduleMorphism braiding_map(const CrossedHopfGAlgebra& h, const Cobraiding& c, const Comodule& m, const Comodule& n);
/// theta_M: M -> Phi_alpha(M) induced by the cotwist.
ComoduleMorphism twist_map(const CrossedHopfGAlgebra& h, const Cotwist& t, const Comodule& m);

/// Reads the cobraiding back off a family of braiding maps on the regular
/// comodules (c[a][b]: H_a (x) H_b -> Phi_a(H_b) (x) H_a). Throws on
/// non-colinear input; the convolution inverse is recovered by the solver.
Cobraiding extract_cobraiding(const CrossedHopfGAlgebra& h, const std::vector<std::vector<Mat>>& braidings);
/// Same for twists on the regulars (theta[a]: H_a -> Phi_a(H_a)).
Cotwist extract_cotwist(const CrossedHopfGAlgebra& h, const std::vector<Mat>& twists);

/// A finite family on which the categorical axioms are instantiated.
struct ObjectFamily {
  std::vector<Comodule> objects;
  std::vector<ComoduleMorphism> morphisms;
};

/// Suppliers of braiding/twist instances. Returning nullopt marks the
/// requested instance as outside the family (reported as a skip).
using BraidingProvider = std::function<std::optional<Mat>(const Comodule&, const Comodule&)>;
using TwistProvider = std::function<std::optional<Mat>(const Comodule&)>;

BraidingProvider braiding_from_cobraiding(const CrossedHopfGAlgebra& h, const Cobraiding& c);
TwistProvider twist_from_cotwist(const CrossedHopfGAlgebra& h, const Cotwist& t);

/// Instantiates naturality, both tensor compatibilities, and conjugation
/// invariance of a braiding on every applicable tuple from the family.
/// Results are labeled per instance; verification is on the family only.
Report verify_braiding_axioms(const CrossedHopfGAlgebra& h, const ObjectFamily& fam, const BraidingProvider& braid);
/// Twist naturality, the tensor formula through the double braiding, and
/// conjugation invariance.
Report verify_twist_axioms(const CrossedHopfGAlgebra& h, const ObjectFamily& fam, const BraidingProvider& braid,
                           const TwistProvider& twist);
/// The ribbon compatibility between twist and duality on each family object.
Report verify_tortility(const CrossedHopfGAlgebra& h, const ObjectFamily& fam, const TwistProvider& twist);

}  // namespace xha
