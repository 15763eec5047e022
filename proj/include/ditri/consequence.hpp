#pragma once

#include "ditri/identity_system.hpp"
#include "ditri/rowspace.hpp"

namespace ditri {

/* How a generated instance was produced: the named identity composed with
   inner monomials, grafted into a context at a marked leaf, then relabeled. */
struct InstanceProv {
  std::string id_name;
  Term context = Term::leaf(1);
  int marked_leaf = 1;
  std::vector<Term> inners;
  std::vector<int> perm;
};

struct ConsequenceOptions {
  bool self_check = true;
};

/* The degree-n multilinear slice of the two-sided substitution closure of a
   system, presented as an echelon row space over the canonical monomial basis. */
struct ConsequenceSpace {
  Signature sig;
  int degree = 0;
  std::vector<Term> monomials;
  std::vector<LinComb> instances;
  std::vector<InstanceProv> provenance;
  RowSpace space{0};

  int dim() const { return space.dim(); }
  std::vector<Rational> row_of(const LinComb& l) const;
  LinComb lincomb_of(const std::vector<Rational>& row) const;
};

ConsequenceSpace consequence_space(const IdentitySystem& s, int degree,
                                   const ConsequenceOptions& opts = {});

/* Membership certificate.  Positive: target equals the recorded combination of
   generated instances.  Negative: the recorded functional vanishes on every
   instance and takes the recorded nonzero value on the target.  Either way the
   certificate re-verifies by plain linear-combination expansion. */
struct ConsequenceCertificate {
  bool member = false;
  std::vector<std::pair<int, Rational>> combination; // indices into instances
  std::map<Term, Rational> functional;
  Rational value = 0;
};

bool verify_certificate(const ConsequenceSpace& sp, const LinComb& target,
                        const ConsequenceCertificate& cert);

struct ConsequenceResult {
  ConsequenceSpace space;
  ConsequenceCertificate cert;
};

/* Decides whether target lies in the degree-deg(target) consequence slice of s.
   The returned certificate has already been re-verified by expansion. */
ConsequenceResult is_consequence(const LinComb& target, const IdentitySystem& s,
                                 const ConsequenceOptions& opts = {});

/* #monomials - dim of the consequence slice. */
long codimension(const IdentitySystem& s, int degree, const ConsequenceOptions& opts = {});

struct EquivDetail {
  std::string system;   // which side the generator came from
  std::string id_name;
  int degree = 0;
  bool member = false;
};

struct EquivReport {
  bool equivalent = false;
  std::vector<EquivDetail> details;
};

/* Each generator of a is a consequence of b at its own degree and conversely.
   Signatures must agree including op names; generator degrees must be <= n_max. */
EquivReport systems_equivalent(const IdentitySystem& a, const IdentitySystem& b, int n_max,
                               const ConsequenceOptions& opts = {});

} // namespace ditri
