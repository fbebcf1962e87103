#pragma once

#include "xha/comod.hpp"

namespace xha {

/// A finite family of simple comodules over the neutral component, with a
/// designated unit index and an involution realized by dual witnesses
/// (isomorphisms V_{i*} -> V_i^*).
struct SimpleFamily {
  std::vector<Comodule> objects;
  long zero = 0;
  std::vector<long> dual_index;
  std::vector<ComoduleMorphism> dual_witness;
};

/// Quantum trace of an endomorphism of a comodule over the neutral component:
/// the categorical composite d . c_{U,U*} . ((theta . f) (x) I) . b. The
/// coordinate formula tr(W T f) with W built from gamma and the inverse
/// antipode is evaluated alongside; a mismatch throws (internal
/// inconsistency).
Cyc qtrace(const CrossedHopfGAlgebra& h, const Cobraiding& c, const Cotwist& t, const ComoduleMorphism& f);

/// qtrace(Id_U) = 0.
bool is_negligible(const CrossedHopfGAlgebra& h, const Cobraiding& c, const Cotwist& t, const Comodule& u);

/// s[i][j] = qtrace of the double braiding c_{V_{j*},V_i} . c_{V_i,V_{j*}}.
Mat s_matrix(const CrossedHopfGAlgebra& h, const Cobraiding& c, const Cotwist& t, const SimpleFamily& fam);

/// dim Hom(source, target) in the comodule category (kernel of the
/// colinearity constraints).
long hom_space_dim(const CrossedHopfGAlgebra& h, const Comodule& source, const Comodule& target);

/// The four modularity conditions: unit object, dual witnesses, the
/// quantum-dimension balance over tensor decompositions, and invertibility
/// of the s-matrix.
Report is_modular(const CrossedHopfGAlgebra& h, const Cobraiding& c, const Cotwist& t, const SimpleFamily& fam);

}  // namespace xha
