#pragma once

#include <string>
#include <vector>

#include "ditri/identity_system.hpp"
#include "ditri/term.hpp"

namespace ditri {

/* Basis element e^(n)_H of the set-indexed corolla operad: arity n together
   with a nonempty subset H of {1..n}. */
struct Corolla {
  int arity = 1;
  Mask subset = 1;

  bool operator==(const Corolla&) const = default;
};

std::string corolla_str(const Corolla& c);

/* e_K(e_{H_1},..,e_{H_m}): arity is the sum, subset is compose_subsets. */
Corolla corolla_compose(const Corolla& outer, const std::vector<Corolla>& inners);

/* Leaf relabeling: element k of the subset becomes perm[k-1]. */
Corolla corolla_act(const Corolla& c, const std::vector<int>& perm);

/* Carrier signature of corolla monomials: two binary ops.
   arrow = the one-sided product (left slot de-emphasized), perp = the cluster product. */
inline const char* kArrowOp = "arrow";
inline const char* kPerpOp = "perp";
Signature comtrias_carrier();

/* Normal-form monomial x_{j1}->(x_{j2}->(..->(x_{i1} v x_{i2} v ..))) for e^(n)_H:
   j's = complement of H ascending, i's = H ascending, arrow-chain right-nested,
   perp-cluster right-nested. */
Term representative_monomial(const Corolla& c);

/* The image of a multilinear {arrow,perp}-monomial in the corolla operad:
   arrow -> e^(2)_{2}, perp -> e^(2)_{1,2}, composed along the tree and pushed
   through the leaf labeling. */
Corolla corolla_from_monomial(const Term& t);

/* The five defining identities (lhs - rhs as LinCombs). */
IdentitySystem comtrias_axioms();
/* Five axioms plus perp-commutativity: the identities the corolla model itself
   satisfies at degree <= 3; concrete models are validated against this. */
IdentitySystem comtrias_axioms_full();
/* arrow-associativity and arrow-left-commutativity: the degree-3 identities of
   the singleton suboperad; mode-di models are validated against this. */
IdentitySystem perm_arrow_axioms();

struct PresentationReport {
  bool ok = true;
  long axiom_checks = 0;   // axiom instances compared as corollas
  long lemma_tuples = 0;   // composition tuples covered by the sum-exchange check
  std::vector<std::string> failures;
};

/* (a) each displayed axiom holds in the corolla model under all leaf relabelings
   and under substitution of corolla representatives with total arity <= max_arity;
   (b) the sum-exchange lemma: for m <= 3, n_i <= 3 the fibers of
   (K,H_1..H_m) -> K(H_1..H_m) partition the full tuple set and every H in P(n)
   is hit. */
PresentationReport verify_comtrias_presentation(int max_arity);

} // namespace ditri
