#pragma once

#include "ditri/algebra.hpp"
#include "ditri/identity_system.hpp"

namespace ditri {

/* Two-dimensional coefficient algebra on e1, e2: both ops idempotent-ish with
   e1 a left unit for arrow and perp diagonal; the minimal model of the cluster
   laws used by the doubling constructions. */
FiniteAlgebra c2_algebra();

/* Exterior algebra on b1, b2, x1, x2 (basis: sorted square-free words, "one"
   for the empty word), with the multiplicative projection sending x_i to b_i. */
FiniteAlgebra grassmann_a2();
LinearOperator grassmann_a2_tau();

/* Plain associative/Lie/commutative-magma style generator systems. */
IdentitySystem as_system();       // associativity of m
IdentitySystem lie_system();      // antisymmetry + jacobi of br
IdentitySystem perm_system();     // associativity + left-symmetry of m
IdentitySystem n3_system();       // all degree-3 products of m vanish
IdentitySystem trilie_system();   // the mode-tri Lie-style presentation
IdentitySystem leftsym_system();  // mode-di: h-exchange + left-symmetry

/* Sample instances for the randomized suites. */

/* k^d with componentwise product (sig: binary m). */
FiniteAlgebra componentwise_algebra(int d);
/* Projection onto the coordinates where keep[i] != 0. */
LinearOperator coordinate_projection(const std::string& name, const std::vector<int>& keep);
/* Scalar multiple of the identity. */
LinearOperator scalar_operator(const std::string& name, int dim, const Rational& c);

/* k[x]/x^n with basis 1, x, .., x^(n-1) (sig: binary m). */
FiniteAlgebra truncated_polynomials(int n);
/* x^k -> x^(k+1)/(k+1), top power to 0: a weight-0 Rota-Baxter operator. */
LinearOperator truncated_integration(int n);

/* sl2 with basis e, h, f: [h,e]=2e, [h,f]=-2f, [e,f]=h (sig: binary br). */
FiniteAlgebra sl2_algebra();
/* Negated projection onto span(e,h) along span(f): weight-1 Rota-Baxter. */
LinearOperator sl2_neg_projection();

/* 2-dim Lie algebra [x,y]=y (sig: binary br). */
FiniteAlgebra lie2d_algebra();
/* x -> y, y -> 0: weight-0 Rota-Baxter on it. */
LinearOperator lie2d_rb();

/* k[t]/(t^3) (sig: binary m, unary d flagged derivation): d = t^2 d/dt squares
   to zero; tsq sends 1 to t^2, a weight-0 Rota-Baxter map commuting with d. */
FiniteAlgebra jet2_algebra();
LinearOperator jet2_tsq();

/* 2-dim {x, y} with zero multiplication and d(x) = y, d(y) = 0. */
FiniteAlgebra nilpotent_derivation_example();

} // namespace ditri
