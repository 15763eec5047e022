#pragma once

#include <string>
#include <vector>

#include "ditri/lincomb.hpp"
#include "ditri/term.hpp"

/* Shorthand tree builders shared by the test binaries. */
namespace tt {

using ditri::LinComb;
using ditri::Mask;
using ditri::Term;

inline Term x(int i) { return Term::leaf(i); }

inline Term n2(const std::string& op, const Term& a, const Term& b) {
  return Term::node(op, {a, b});
}

inline Term n1(const std::string& op, const Term& a) { return Term::node(op, {a}); }

inline Term d2(const std::string& op, Mask dec, const Term& a, const Term& b) {
  return Term::node(op, dec, {a, b});
}

inline Term d1(const std::string& op, const Term& a) { return Term::node(op, 1, {a}); }

inline LinComb lc(const Term& t) { return LinComb(t); }

} // namespace tt
