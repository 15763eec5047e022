#pragma once

#include "ditri/algebra.hpp"
#include "ditri/rowspace.hpp"

namespace ditri {

/* C tensor A with every op decorated: f^H acts as e_H on the C factor and as f
   on the A factor.  C must be a plain algebra with binary ops named arrow (and,
   for mode tri, perp) satisfying the one-sided-product laws (di) or the full
   cluster-product laws (tri); A is any plain algebra.  Basis order: (c_i, a_j)
   at index i*dim(A)+j. */
FiniteAlgebra tensor_replicated(const FiniteAlgebra& c, const FiniteAlgebra& a, Mode mode);

/* C box T for decorated T: plain ops f(c x u, ..) = sum over H of
   e_H(c's) tensor f^H(u's).  C validated as in tensor_replicated against
   T's mode. */
FiniteAlgebra box_product(const FiniteAlgebra& c, const FiniteAlgebra& t);

/* Doubling: basis = T unprimed then T primed.  All-unprimed products collect
   every decoration; tuples whose primed slot set P is an admissible decoration
   multiply into the primed copy via f^P, all other mixed tuples vanish. */
FiniteAlgebra hat_algebra(const FiniteAlgebra& t);

/* Quotient-extension: T0 = ideal closure of all inner-decoration differences,
   Tbar = T/T0 with basis the non-pivot coordinates, and tilde = Tbar + T with
   all-Tbar products computed in the quotient and any tuple meeting T landing
   in T via the decoration given by its T-slots. */
struct TildeResult {
  FiniteAlgebra alg;            // plain ops; basis: Tbar block then T block
  int t0_dim = 0;
  std::vector<int> bar_cols;    // original T coordinates surviving into Tbar
  RowSpace t0{0};               // row space of T0, for projecting

  int bar_dim() const { return int(bar_cols.size()); }
  /* Class of a T element in the Tbar block of alg. */
  Elem project_bar(const Elem& t_elem) const;
  /* A T element placed in the T block of alg. */
  Elem include_t(const Elem& t_elem) const;
};

TildeResult tilde_algebra(const FiniteAlgebra& t);

/* a |-> e1 x abar + e2 x a into C2 tensor tilde(T), for mode-tri T.  The report
   carries the verified injectivity and homomorphism checks. */
struct EmbeddingReport {
  bool injective = false;
  bool homomorphic = false;
  std::string detail;
  TildeResult tilde;
  FiniteAlgebra target;      // C2 tensor tilde(T)
  std::vector<Elem> images;  // mu of each T basis element, in target coordinates
};

EmbeddingReport canonical_embedding(const FiniteAlgebra& t);

/* Decorated structure induced by an operator: f^H keeps slots in H and applies
   t elsewhere.  kind fixes the decoration mode (averaging -> di,
   hom_averaging -> tri, rota_baxter weight 0 -> di, weight 1 -> tri; other
   weights are rejected).  check_operator must pass. */
FiniteAlgebra derived_from_operator(const FiniteAlgebra& a, const LinearOperator& t,
                                    OperatorKind kind, const Rational& weight = 0);

/* Pull a structure back along a morphism: the (f, H) tensor is the evaluation
   of the image of f^H in A.  Target ops must live in A's signature. */
FiniteAlgebra derived_from_morphism(const FiniteAlgebra& a, const Morphism& m);

} // namespace ditri
