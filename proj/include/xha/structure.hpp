#pragma once

#include "xha/group.hpp"
#include "xha/matrix.hpp"
#include "xha/report.hpp"

#include <vector>

namespace xha {

/// One component H_alpha: a coalgebra given by structure matrices.
/// delta: d^2 x d, epsilon: 1 x d.
struct Component {
  long dim = 0;
  Mat delta;
  Mat epsilon;
};

/// A finite-type crossed Hopf G-algebra as structure-constant tensors.
/// All maps are matrices in the fixed component bases:
///   mult[a][b]   : d_{ab} x d_a d_b
///   unit         : d_1 x 1
///   conj[b][a]   : d_{b a b^-1} x d_a     (phi_b restricted to H_a)
///   antipode[a]  : d_{a^-1} x d_a
class CrossedHopfGAlgebra {
 public:
  CrossedHopfGAlgebra(FiniteGroup group, std::vector<Component> components, std::vector<std::vector<Mat>> mult,
                      Mat unit, std::vector<std::vector<Mat>> conj, std::vector<Mat> antipode);

  const FiniteGroup& group() const { return group_; }
  long dim(long alpha) const { return components_[alpha].dim; }
  const Component& component(long alpha) const { return components_[alpha]; }
  const Mat& delta(long alpha) const { return components_[alpha].delta; }
  const Mat& epsilon(long alpha) const { return components_[alpha].epsilon; }
  const Mat& mult(long alpha, long beta) const { return mult_[alpha][beta]; }
  const Mat& unit() const { return unit_; }
  const Mat& conj(long beta, long alpha) const { return conj_[beta][alpha]; }
  const Mat& antipode(long alpha) const { return antipode_[alpha]; }

  bool operator==(const CrossedHopfGAlgebra& o) const;

 private:
  FiniteGroup group_;
  std::vector<Component> components_;
  std::vector<std::vector<Mat>> mult_;
  Mat unit_;
  std::vector<std::vector<Mat>> conj_;
  std::vector<Mat> antipode_;
};

struct VerifyOptions {
  /// Also require phi_beta . S_alpha = S_{beta alpha beta^-1} . phi_beta.
  /// Not part of the bare axiom list but needed for the packed form to carry
  /// Hopf automorphisms; on by default.
  bool strict_phi_antipode = true;
};

/// Runs every axiom of a crossed Hopf G-algebra as an exact matrix identity.
/// Shape problems are reported as input errors, not axiom failures.
Report verify_crossed_hopf(const CrossedHopfGAlgebra& h, const VerifyOptions& opts = {});

/// The packed form: one Hopf algebra of dimension sum(d_alpha) with grading
/// bookkeeping (component index per basis vector) and the automorphism family.
struct PackedHopfAlgebra {
  FiniteGroup group;
  std::vector<long> block_of;    // packed basis index -> component index
  std::vector<long> offset;      // component index -> first packed index
  Mat delta;                     // n^2 x n
  Mat epsilon;                   // 1 x n
  Mat mult;                      // n x n^2
  Mat unit;                      // n x 1
  std::vector<Mat> conj;         // per beta: n x n
  Mat antipode;                  // n x n

  long total_dim() const { return static_cast<long>(block_of.size()); }
};

PackedHopfAlgebra pack(const CrossedHopfGAlgebra& h);

/// Checks the five grading conditions on a packed algebra and, if they hold,
/// slices it back into a crossed Hopf G-algebra. Violations are reported with
/// the offending block pair.
struct UnpackResult {
  Report report;
  std::optional<CrossedHopfGAlgebra> structure;
};
UnpackResult unpack(const PackedHopfAlgebra& p);

/// The dual crossed Hopf G-coalgebra: per-component algebras (transposed
/// coalgebra data) with a pair-indexed comultiplication (transposed mult).
struct DualGCoalgebra {
  FiniteGroup group;
  std::vector<Mat> mult;                   // per alpha: d_a x d_a^2  (delta^T)
  std::vector<Mat> unit;                   // per alpha: d_a x 1      (epsilon^T)
  std::vector<std::vector<Mat>> comult;    // [a][b]: d_a d_b x d_{ab}  (mult^T)
  Mat counit;                              // 1 x d_1  (unit^T)
  std::vector<std::vector<Mat>> conj;      // [b][a]: dual conjugation H*_a -> H*_{b a b^-1}
  std::vector<Mat> antipode;               // [a]: H*_a -> H*_{a^-1}
};

DualGCoalgebra dualize(const CrossedHopfGAlgebra& h);
/// Transposes a dual back; composed with dualize this is the identity.
CrossedHopfGAlgebra dualize_back(const DualGCoalgebra& d);

struct CosemisimplicityVerdict {
  std::vector<bool> component_cosemisimple;  // indexed by component
  bool overall = false;
  bool component_one = false;  // verdict for H_1 alone
  bool criterion_agrees = false;  // overall == component_one
};

/// Decides cosemisimplicity per component by testing the dual algebra's
/// regular trace form for nondegeneracy (valid in characteristic zero).
CosemisimplicityVerdict is_cosemisimple(const CrossedHopfGAlgebra& h);

}  // namespace xha
