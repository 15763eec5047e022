#pragma once

#include <string>

#include "ditri/algebra.hpp"
#include "ditri/identity_system.hpp"

namespace ditri {

/* Canonical decoration-explicit spelling: every decorated op prints f^{..},
   leaves print x<j>.  Used in JSON output and anywhere no signature is at
   hand. */
std::string term_str(const Term& t);
std::string lincomb_str(const LinComb& l);

/* Source spelling: mode-di binary ops print as f< and f>, arity-1 ops print
   undecorated, other decorated ops print f^{..}.  Parses back to the same
   term. */
std::string term_src(const Term& t, const Signature& sig);
std::string lincomb_src(const LinComb& l, const Signature& sig);

/* Statement printers; each emits one complete statement ending in a newline,
   re-parseable against a workspace holding the referenced names. */
std::string signature_stmt(const Signature& sig);
std::string identity_stmt(const Identity& id, const Signature& sig);
std::string system_stmt(const IdentitySystem& s);
std::string morphism_stmt(const Morphism& m);
std::string algebra_stmt(const FiniteAlgebra& a);
std::string operator_stmt(const LinearOperator& t, const std::string& algebra_name);

/* Self-contained documents (signatures included). */
std::string system_document(const IdentitySystem& s);
std::string morphism_document(const Morphism& m);
std::string algebra_document(const FiniteAlgebra& a);

} // namespace ditri
