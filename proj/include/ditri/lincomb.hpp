#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ditri/rational.hpp"
#include "ditri/term.hpp"

namespace ditri {

/* Finitely supported map Term -> nonzero Rational, kept in canonical term order
   with zero coefficients dropped: a LinComb is always in normal form, and two
   LinCombs are equal iff the maps are identical. */
class LinComb {
 public:
  LinComb() = default;
  explicit LinComb(const Term& t, const Rational& c = 1) { add(t, c); }

  static LinComb zero() { return LinComb(); }

  LinComb& add(const Term& t, const Rational& c);
  LinComb& add(const LinComb& o, const Rational& c = 1);

  LinComb operator+(const LinComb& o) const;
  LinComb operator-(const LinComb& o) const;
  LinComb operator-() const;
  LinComb operator*(const Rational& c) const;

  bool operator==(const LinComb& o) const { return c_ == o.c_; }
  bool operator<(const LinComb& o) const { return c_ < o.c_; }

  bool is_zero() const { return c_.empty(); }
  size_t size() const { return c_.size(); }
  const std::map<Term, Rational>& terms() const { return c_; }
  Rational coeff(const Term& t) const;

  /* All terms have this leaf count; throws if mixed. */
  int degree() const;

  /* Every term multilinear with leaf count n. */
  bool multilinear_of_degree(int n) const;

  /* Scale so the coefficient of the least term is 1; zero stays zero. */
  LinComb monic() const;

 private:
  std::map<Term, Rational> c_;
};

/* Builds the normal form of an arbitrary (term, coefficient) list: merges equal
   terms, drops zeros, orders canonically.  Idempotent on LinComb contents. */
LinComb normalize(const std::vector<std::pair<Term, Rational>>& entries);

/* pattern must be multilinear of degree k = args.size(); every leaf j of pattern
   is replaced by args[j-1] verbatim (no label shifting), expanded multilinearly. */
LinComb substitute_slots(const Term& pattern, const std::vector<LinComb>& args);
LinComb substitute_slots(const LinComb& pattern, const std::vector<LinComb>& args);

/* Linear extensions. */
LinComb graft(const LinComb& outer, const std::vector<Term>& inners);
LinComb act(const LinComb& l, const std::vector<int>& perm);
LinComb shift_leaves(const LinComb& l, int offset);

} // namespace ditri
