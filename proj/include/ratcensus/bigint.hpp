#pragma once

#include <gmpxx.h>

#include <string>

namespace ratcensus {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

// Fixed-point rendering with exactly `digits` fractional digits, rounded
// half away from zero. Exact: no floating point is involved.
std::string to_decimal(const Rational& v, int digits = 12);

}  // namespace ratcensus
