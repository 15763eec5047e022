#pragma once

#include <map>

#include "ditri/identity_system.hpp"

namespace ditri {

enum class SplitMode { pre, post };

std::string split_mode_str(SplitMode m);

/* Decoration mode of the split image: pre lands in di, post in tri. */
Mode split_target_mode(SplitMode m);

/* All components of the splitting of a multilinear element, keyed by the
   variable subset (pre: singletons, post: all nonempty subsets).  Components
   of a single monomial are never zero; components of a combination may cancel
   and are kept as computed. */
std::map<Mask, LinComb> split_coefficients(const LinComb& u, SplitMode mode);

/* The split system over the decorated signature: identity phi of degree n
   contributes phi_(H) = 0 for each admissible H.  Components that cancel to
   zero are dropped.  Unary ops must be flagged; they pass through splitting
   untouched. */
IdentitySystem split_identities(const IdentitySystem& s, SplitMode mode);

/* Componentwise splitting of a morphism of plain signatures: the image of f^H
   is the H-component of the image of f. */
Morphism split_morphism(const Morphism& m, SplitMode mode);

/* Sum of all components. */
LinComb sum_components(const std::map<Mask, LinComb>& parts);

/* The mode-restricted decoration expansion f -> sum over K of f^K applied to a
   plain multilinear element (pre: singleton K only).  Splitting reconstructs:
   expand_decorations(u, mode) == sum_components(split_coefficients(u, mode)). */
LinComb expand_decorations(const LinComb& u, SplitMode mode);

} // namespace ditri
