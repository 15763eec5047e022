#pragma once

#include <string>
#include <vector>

#include "ditri/lincomb.hpp"
#include "ditri/signature.hpp"

namespace ditri {

/* A multilinear identity lhs = 0 over some signature. */
struct Identity {
  std::string name;
  LinComb lhs;
};

struct IdentitySystem {
  std::string name;
  Signature sig;
  std::vector<Identity> ids;

  const Identity* find(const std::string& id_name) const;
};

/* Each identity nonzero, degree-homogeneous, multilinear, and valid over sig. */
void validate_system(const IdentitySystem& s);

/* A presentation morphism: each op of source maps to a multilinear LinComb of
   the op's degree over target. */
struct Morphism {
  std::string name;
  Signature source;
  Signature target;
  /* keyed by (op name, decoration); plain sources use decoration 0 */
  std::vector<std::pair<std::pair<std::string, Mask>, LinComb>> images;

  const LinComb* image(const std::string& op, Mask dec) const;
};

void validate_morphism(const Morphism& m);

/* Structural substitution: every node f^H of t is replaced by the image of
   (f, H) with the node's children substituted into its slots. */
LinComb apply_morphism(const Morphism& m, const Term& t);
LinComb apply_morphism(const Morphism& m, const LinComb& l);

/* Image system: each identity of s pushed through m (names preserved). */
IdentitySystem apply_morphism(const Morphism& m, const IdentitySystem& s);

} // namespace ditri
