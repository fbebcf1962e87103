#pragma once

#include "xha/structure.hpp"

namespace xha {

/// A cobraiding: linear functionals gamma[a][b] on H_a (x) H_b (1 x d_a d_b)
/// together with their declared two-sided convolution inverses.
struct Cobraiding {
  std::vector<std::vector<Mat>> gamma;
  std::vector<std::vector<Mat>> gamma_inv;
};

/// A cotwist: linear functionals tau[a] on H_a (1 x d_a) with declared
/// convolution inverses.
struct Cotwist {
  std::vector<Mat> tau;
  std::vector<Mat> tau_inv;
};

/// Checks the five cobraiding identities exactly:
///   convolution-inverse      both orders of the gamma/gamma_inv pairing
///   quasi-commutativity      k'h' gamma(h'' (x) k'') = gamma(h' (x) k') phi_b(h'') k''
///   mult-first-slot          gamma((h1 h2) (x) k) = gamma(h1 (x) k') gamma(h2 (x) k'')
///   mult-second-slot         gamma(h (x) k1 k2) = gamma(phi_{b2}(h'') (x) k1) gamma(h' (x) k2)
///   conjugation-invariance   gamma(phi_l (x) phi_l) = gamma
Report verify_cobraiding(const CrossedHopfGAlgebra& h, const Cobraiding& c);

/// Checks the five cotwist identities exactly (tau convolution-invertible;
/// tau(h') phi_a(h'') = h' tau(h''); the three-leg product expansion of
/// tau(hk); tau . S = tau; tau . phi = tau).
Report verify_cotwist(const CrossedHopfGAlgebra& h, const Cobraiding& c, const Cotwist& t);

/// Attempts to compute the two-sided convolution inverse family by linear
/// algebra. Absence of a solution is not an axiom verdict by itself.
std::optional<std::vector<std::vector<Mat>>> solve_cobraiding_inverse(const CrossedHopfGAlgebra& h,
                                                                      const std::vector<std::vector<Mat>>& gamma);
std::optional<std::vector<Mat>> solve_cotwist_inverse(const CrossedHopfGAlgebra& h, const std::vector<Mat>& tau);

}  // namespace xha
