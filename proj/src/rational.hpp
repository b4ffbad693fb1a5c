#pragma once

#include <gmpxx.h>
#include <string>

namespace bse {

// Arbitrary-precision integers and canonical-form rationals. GMP keeps
// mpq_class results canonical (positive denominator, reduced), so structural
// equality is exact value equality.
using Int = mpz_class;
using Rat = mpq_class;

// Decimal string; rationals print as "p/q" with the sign on the numerator,
// or plain "p" when the denominator is 1.
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

// Accepts "p" or "p/q" with an optional leading minus on either part.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rat parse_rat(const std::string& s);

Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

// 1 / 2^k as an exact rational.
Rat inv_pow2(unsigned long k);

}  // namespace bse
