#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qmod {

// Exact rational scalars.  All symbolic arithmetic in the library is exact;
// doubles appear only in the numeric (representation) layer.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" (base 10).  Rejects zero denominators and any
// other malformed input.
Rational rational_from_string(const std::string& s);

// Canonical "p" / "p/q" rendering (lowest terms, q > 0).
std::string rational_to_string(const Rational& q);

double to_double(const Rational& q);

// The rational r >= 0 with r*r == x, when one exists.
std::optional<Rational> exact_sqrt(const Rational& x);

// Smallest rational of the form m / 2^k with (m/2^k)^2 >= x.  Requires x >= 0.
Rational ceil_sqrt(const Rational& x, unsigned k = 16);

}  // namespace qmod
