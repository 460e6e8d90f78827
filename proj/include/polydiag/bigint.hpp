#pragma once

#include <gmpxx.h>

#include <string>

namespace polydiag {

// Exact arithmetic everywhere. Strata counts pass 10^9 already at n = 9 and
// grow superexponentially, so 64-bit integers are not an option.
using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

} // namespace polydiag
