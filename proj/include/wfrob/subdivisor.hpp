#pragma once

#include "wfrob/root_system.hpp"

#include <cstdint>
#include <vector>

namespace wfrob {

/// Exponents on the boundary divisors: c on D_i, c_tilde on D~_i, b on X_i.
struct BoundaryDivisor {
  std::vector<std::int64_t> c;
  std::vector<std::int64_t> c_tilde;
  std::vector<std::int64_t> b;
};

/// sum (c_i + c~_i) omega_i + sum b_i alpha_i
Weight picard_class(const RootSystem &rs, const BoundaryDivisor &d);

struct SubdivisorCount {
  BigInt count;
  /// Some exponent would exceed p-1 in an uncapped divisor of this class,
  /// so the count can change with p.
  bool cap_binds = false;
};

inline constexpr std::uint64_t kDefaultStateLimit = 40'000'000;

/// Number of effective subdivisors of (p-1)K~_X with class lambda.
/// Throws DomainError("state_limit") when the dense DP box would hold more
/// than `state_limit` states.
SubdivisorCount count_subdivisors(const RootSystem &rs, const Weight &lambda,
                                  std::int64_t p,
                                  std::uint64_t state_limit = kDefaultStateLimit);

/// count_subdivisors(lambda - p mu). Type A only; other types throw
/// DomainError("conjectural").
BigInt multiplicity_lower_bound(const RootSystem &rs, const Weight &lambda,
                                const Weight &mu, std::int64_t p);

/// Multiplicity of O(e) in Fr_* O(d) on P^m:
///   sum_i (-1)^i C(m+1, i) C(d - pe + m - ip, m).
BigInt thomsen_multiplicity(std::int64_t m, std::int64_t d, std::int64_t e,
                            std::int64_t p);

} // namespace wfrob
