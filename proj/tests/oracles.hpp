#pragma once

// Brute-force reference implementations shared by the unit and acceptance
// tests. They deliberately avoid the library's search code.

#include "wfrob/root_system.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using wfrob::BigInt;
using wfrob::RootSystem;
using wfrob::Weight;

// Calls f on every vector in [lo, hi]^n; stops early when f returns true.
inline bool any_in_box(std::size_t n, std::int64_t lo, std::int64_t hi,
                       const std::function<bool(const std::vector<std::int64_t> &)> &f) {
  if (hi < lo)
    return false;
  std::vector<std::int64_t> x(n, lo);
  while (true) {
    if (f(x))
      return true;
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (x[i] < hi) {
        ++x[i];
        break;
      }
      x[i] = lo;
    }
    if (i == n)
      return false;
  }
}

// v = d + sum b_i alpha_i with d dominant, b >= 0 and sum b_i <= phi(v).
inline bool succeq_zero(const RootSystem &rs, const Weight &v) {
  const auto phi = rs.phi(v);
  if (phi < 0)
    return false;
  const auto cap = static_cast<std::int64_t>(wfrob::floor_rational(phi));
  return any_in_box(rs.rank(), 0, cap, [&](const std::vector<std::int64_t> &b) {
    std::int64_t total = 0;
    for (auto x : b)
      total += x;
    return total <= cap && (v - rs.from_root_coords(b)).is_dominant();
  });
}

// v = a + A b with a in [0, 2(p-1)]^l and b in [0, p-1]^l.
inline bool summand_witness(const RootSystem &rs, const Weight &v, std::int64_t p) {
  return any_in_box(rs.rank(), 0, p - 1, [&](const std::vector<std::int64_t> &b) {
    const Weight a = v - rs.from_root_coords(b);
    for (std::size_t i = 0; i < a.rank(); ++i)
      if (a[i] < 0 || a[i] > 2 * (p - 1))
        return false;
    return true;
  });
}

// Pairs (c_i, c~_i) in [0, p-1]^2 with c_i + c~_i = k.
inline std::int64_t pair_count(std::int64_t k, std::int64_t p) {
  return std::max<std::int64_t>(0, std::min(k, 2 * (p - 1) - k) + 1);
}

// Subdivisor count as a sum over the X-exponents b of products of pair
// counts for the remaining omega-coordinates.
inline BigInt subdivisor_count(const RootSystem &rs, const Weight &lambda, std::int64_t p) {
  BigInt total = 0;
  any_in_box(rs.rank(), 0, p - 1, [&](const std::vector<std::int64_t> &b) {
    const Weight v = lambda - rs.from_root_coords(b);
    BigInt term = 1;
    for (std::size_t i = 0; i < v.rank(); ++i)
      term *= pair_count(v[i], p);
    total += term;
    return false;
  });
  return total;
}

} // namespace oracle
