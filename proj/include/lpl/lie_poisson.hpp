#pragma once

#include "lpl/lie.hpp"
#include "lpl/polynomial.hpp"

namespace lpl {

/// Pi_ij(x) = <x, [e_i, e_j]>, the Lie-Poisson bivector at x in g*.
Matrix bivector_at(const LieAlgebra& g, std::span<const Rational> x);

/// Contraction of the covector xi (an element of g) with Pi at x:
/// component j is sum_i xi_i Pi_ij(x) = <x, [xi, e_j]> = coad_xi(x).
Vector sharp_at(const LieAlgebra& g, std::span<const Rational> x, std::span<const Rational> xi);

/// {f, g} = sum_{i,j} Pi_ij(nu) d_i f d_j g with Pi_ij(nu) the linear
/// function of [e_i, e_j], so {nu_i, nu_j} is the bracket of basis elements.
Polynomial poisson_bracket_poly(const LieAlgebra& g, const Polynomial& f, const Polynomial& h);

/// True iff {f, nu_i} = 0 for every coordinate i.
bool casimir_check(const LieAlgebra& g, const Polynomial& f);

}  // namespace lpl
