#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wfrob {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an operation is called outside its mathematical domain
/// (bad prime, unsupported root system, non-dominant weight, ...).
/// `code` is a short machine-readable tag used by the CLI.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, const std::string &detail)
      : std::runtime_error(detail), code_(std::move(code)) {}

  const std::string &code() const noexcept { return code_; }

private:
  std::string code_;
};

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

/// Least nonnegative residue.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline BigInt floor_rational(const Rational &q) {
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  BigInt r = n / d;
  if (n % d != 0 && n < 0)
    --r;
  return r;
}

inline BigInt ceil_rational(const Rational &q) { return -floor_rational(-q); }

bool is_prime(std::int64_t n);

BigInt binomial(std::int64_t n, std::int64_t k);

BigInt ipow(const BigInt &base, unsigned exponent);

std::string to_string(const Rational &q);

} // namespace wfrob
