#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ditri/identity_system.hpp"

namespace ditri {

/* Sparse vector over the basis of a finite-dimensional algebra: index -> nonzero
   coordinate. */
using Elem = std::map<int, Rational>;

Elem elem_unit(int i);
Elem elem_scale(const Elem& e, const Rational& c);
Elem elem_add(const Elem& a, const Elem& b);
bool elem_zero(const Elem& e);

struct OpKey {
  std::string name;
  Mask dec = 0;
  bool operator<(const OpKey& o) const {
    return name != o.name ? name < o.name : mask_lex_less(dec, o.dec);
  }
  bool operator==(const OpKey& o) const { return name == o.name && dec == o.dec; }
};

/* Finite-dimensional algebra over a signature: one structure tensor per
   (op, decoration), stored sparsely on basis tuples. */
struct FiniteAlgebra {
  std::string name;
  Signature sig;
  std::vector<std::string> basis;
  std::map<OpKey, std::map<std::vector<int>, Elem>> tensors;

  int dim() const { return int(basis.size()); }
  /* Structure constants on a basis tuple (0-based indices); zero if absent. */
  const Elem* tuple_value(const OpKey& k, const std::vector<int>& tuple) const;
  /* Multilinear application of one operation to arbitrary elements. */
  Elem apply(const OpKey& k, const std::vector<Elem>& args) const;

  std::string elem_str(const Elem& e) const;
};

/* Ops exist with matching arity, decorations valid, tuples in range. */
void validate_algebra(const FiniteAlgebra& a);

/* Linear operator on an algebra; mat[j] = coordinates of the image of basis j. */
struct LinearOperator {
  std::string name;
  std::string algebra;
  std::vector<std::vector<Rational>> mat;

  int dim() const { return int(mat.size()); }
  Elem apply(const Elem& e) const;
};

void validate_operator(const FiniteAlgebra& a, const LinearOperator& t);

/* Evaluate a term: leaf j draws args[j-1].  Repeated leaf labels are allowed
   (non-multilinear terms evaluate fine; identities stay multilinear). */
Elem evaluate(const FiniteAlgebra& a, const Term& t, const std::vector<Elem>& args);
Elem evaluate(const FiniteAlgebra& a, const LinComb& l, const std::vector<Elem>& args);

struct CheckWitness {
  bool pass = true;
  std::string identity;
  std::vector<int> tuple; // 0-based basis indices
  Elem value;
};

/* First failing (identity, basis tuple) if any; identities must be valid over
   a.sig. */
CheckWitness check_identities(const FiniteAlgebra& a, const IdentitySystem& s);

enum class OperatorKind { averaging, hom_averaging, rota_baxter };

std::string operator_kind_str(OperatorKind k);

struct OperatorWitness {
  bool pass = true;
  std::string detail;
};

/* averaging:      f(ta_1..ta_n) = t f(ta_1,..,a_i,..,ta_n) for every slot i;
   hom_averaging:  f(ta_1..ta_n) = t f(a^H) for every nonempty H, where a^H
                   keeps a_i at slots in H and applies t elsewhere;
   rota_baxter(w): f(ta_1..ta_n) = sum over H of w^(|H|-1) t f(a^H).
   Checked on all basis tuples of every op; unary ops must commute with t. */
OperatorWitness check_operator(const FiniteAlgebra& a, const LinearOperator& t, OperatorKind kind,
                               const Rational& weight = 0);

} // namespace ditri
