#include "wfrob/numeric.hpp"

namespace wfrob {

bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

// C(n, k) with the convention C(n, k) = 0 for n < k or k < 0. Negative n is
// also mapped to 0, which is the reading the alternating-sum formulas need.
BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || n < k)
    return 0;
  if (k > n - k)
    k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigInt ipow(const BigInt &base, unsigned exponent) {
  BigInt r = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1u)
      r *= b;
    b *= b;
    exponent >>= 1u;
  }
  return r;
}

std::string to_string(const Rational &q) {
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  if (d == 1)
    return n.str();
  return n.str() + "/" + d.str();
}

} // namespace wfrob
