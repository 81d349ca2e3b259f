#include "hilco/rational.hpp"

#include <limits>

namespace hilco {

long long binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  long long out = 1;
  for (long long i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

std::string rat_to_string(const Rat& q) {
  if (rat_is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

bool rat_is_integer(const Rat& q) { return denominator(q) == 1; }

bool rat_fits_int64(const Rat& q) {
  if (!rat_is_integer(q)) return false;
  const BigInt n = numerator(q);
  return n >= std::numeric_limits<long long>::min() &&
         n <= std::numeric_limits<long long>::max();
}

long long rat_to_int64(const Rat& q) {
  return numerator(q).convert_to<long long>();
}

}  // namespace hilco
