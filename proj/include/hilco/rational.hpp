#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace hilco {

/// Exact rational scalar used for all series coefficients and linear algebra.
using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Binomial coefficient with the convention C(n, k) = 0 whenever n < k or k < 0
/// (covers expressions like C(mu - d, 2) with mu < d).
long long binom(long long n, long long k);

/// Exact rational rendering: "p" when integral, otherwise "p/q".
std::string rat_to_string(const Rat& q);

bool rat_is_integer(const Rat& q);

/// True when the (integral) rational fits into a signed 64-bit value.
bool rat_fits_int64(const Rat& q);

long long rat_to_int64(const Rat& q);

}  // namespace hilco
