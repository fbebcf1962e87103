#pragma once

#include "xha/quasi.hpp"
#include "xha/structure.hpp"

namespace xha {

/// k[G] as a crossed structure over G itself: every component is the span of
/// its own group element, all structure maps are the 1x1 identity.
CrossedHopfGAlgebra group_algebra_crossed(const FiniteGroup& g);

/// k[K] concentrated in the single component of the trivial group, with the
/// group-like basis: delta(e_g) = e_g (x) e_g, S(e_g) = e_{g^-1}.
CrossedHopfGAlgebra group_algebra_one_component(const FiniteGroup& k);

/// The four-dimensional algebra with basis 1, g, x, gx where g^2 = 1, x^2 = 0,
/// xg = -gx, delta(x) = x (x) 1 + g (x) x; over the trivial group.
CrossedHopfGAlgebra sweedler_algebra();

/// On the crossed k[Z/n] structure: gamma[a][b] = zeta_c^{power*a*b}.
Cobraiding bicharacter_cobraiding(long n, long conductor, long power);
/// tau[a] = zeta_c^{power*a^2} on the same structure.
Cotwist quadratic_cotwist(long n, long conductor, long power);

/// gamma = eps (x) eps and tau = eps; valid on any structure whose components
/// pair trivially (always well-shaped, verified only where it holds).
Cobraiding counit_cobraiding(const CrossedHopfGAlgebra& h);
Cotwist counit_cotwist(const CrossedHopfGAlgebra& h);

/// The standard one-parameter cobraiding family on sweedler_algebra():
/// gamma(g,g) = -1, gamma(x,x) = lambda, extended multiplicatively. The
/// convolution inverse is computed by the linear solver. The matching cotwist
/// is the counit.
Cobraiding sweedler_cobraiding(const CrossedHopfGAlgebra& sw, const Cyc& lambda);

/// On group_algebra_one_component(cyclic(n)): the single functional
/// gamma(e_a (x) e_b) = zeta_c^{power*a*b} and tau(e_a) = zeta_c^{power*a^2}.
Cobraiding pointed_bicharacter_cobraiding(long n, long conductor, long power);
Cotwist pointed_quadratic_cotwist(long n, long conductor, long power);

}  // namespace xha
