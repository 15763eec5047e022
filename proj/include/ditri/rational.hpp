#pragma once

#include <gmpxx.h>
#include <string>

namespace ditri {

using Rational = mpq_class;
using Integer = mpz_class;

/* Accepts "p", "-p", "p/q"; result is canonicalized. Throws std::invalid_argument. */
Rational parse_rational(const std::string& s);

/* Canonical text form: "p" or "p/q" with q > 1, sign on the numerator. */
std::string rat_str(const Rational& q);

} // namespace ditri
