#pragma once

#include "ditri/identity_system.hpp"

namespace ditri {

/* Decorate a multilinear monomial for the variable subset H (as a mask over its
   leaf labels {1..n}).  Each internal node receives the set of argument
   positions whose subtree meets the active variable set; untouched subtrees
   recurse on their own leftmost variable.  mode di restricts H to singletons. */
Term decorate_term(const Term& u, Mask h, Mode mode);
LinComb decorate_term(const LinComb& u, Mask h, Mode mode);

/* Strip all decorations, mapping back to the plain signature. */
Term erase_decorations(const Term& t);
LinComb erase_decorations(const LinComb& l);

/* The replicated system over the decorated signature: every identity of s is
   decorated for every admissible H, and every pair of operations contributes
   the vanishing differences of inner decorations at positions outside the
   outer decoration.  Unary operations must carry a derivation or endomorphism
   flag; they replicate to a single copy and join no vanishing difference. */
IdentitySystem replicate_identities(const IdentitySystem& s, Mode mode);

/* Decorate a morphism of plain signatures: the image of f^H is the
   H-decoration of the image of f. */
Morphism replicate_morphism(const Morphism& m, Mode mode);

} // namespace ditri
