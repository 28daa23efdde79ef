#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace latsieve {

using Int = mpz_class;
using Rat = mpq_class;

/// Largest integer <= q.
Int floor_rat(const Rat& q);

/// Smallest integer >= q.
Int ceil_rat(const Rat& q);

/// Nearest integer to q; halves round towards +infinity.
Int round_rat(const Rat& q);

double to_double(const Rat& q);
double to_double(const Int& z);

/// Natural logarithm of a positive rational. Works for values far
/// outside the range of double (multi-thousand-bit determinants).
double log_rat(const Rat& q);
double log_int(const Int& z);

/// Parses "3/4", "0.99" or "1" into an exact rational.
Rat rat_from_string(const std::string& s);

}  // namespace latsieve
