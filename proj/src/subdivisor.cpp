#include "wfrob/subdivisor.hpp"

#include "wfrob/summand.hpp"
#include "wfrob/weight_order.hpp"

#include <algorithm>

namespace wfrob {

Weight picard_class(const RootSystem &rs, const BoundaryDivisor &d) {
  const std::size_t l = rs.rank();
  if (d.c.size() != l || d.c_tilde.size() != l || d.b.size() != l)
    throw std::invalid_argument("boundary divisor has the wrong length");
  Weight w(l);
  for (std::size_t i = 0; i < l; ++i)
    w[i] = d.c[i] + d.c_tilde[i];
  return w + rs.from_root_coords(d.b);
}

namespace {

using u128 = unsigned __int128;

BigInt to_big(u128 x) {
  BigInt r = static_cast<std::uint64_t>(x >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(x);
  return r;
}
BigInt to_big(const BigInt &x) { return x; }

struct Box {
  std::vector<std::int64_t> lo, hi;
  std::vector<std::uint64_t> stride;
  std::uint64_t volume = 0;

  bool empty() const {
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (lo[i] > hi[i])
        return true;
    return false;
  }
};

// Generators in the fixed order D_1..D_l, D~_1..D~_l, X_1..X_l.
std::vector<Weight> generators(const RootSystem &rs) {
  std::vector<Weight> g;
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t i = 0; i < rs.rank(); ++i)
      g.push_back(Weight::unit(rs.rank(), i));
  for (std::size_t i = 0; i < rs.rank(); ++i)
    g.push_back(rs.simple_root(i));
  return g;
}

template <class Count>
BigInt run_dp(const std::vector<Weight> &gens, const std::vector<Box> &boxes,
              const Weight &lambda, std::int64_t p) {
  const std::size_t l = lambda.rank();
  // boxes[0] is the single point 0.
  std::vector<Count> cur(1, Count(1));
  std::vector<std::int64_t> v(l);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Box &from = boxes[k];
    const Box &to = boxes[k + 1];
    std::vector<Count> next(to.volume, Count(0));
    const Weight &g = gens[k];
    for (std::size_t c = 0; c < l; ++c)
      v[c] = from.lo[c];
    for (std::uint64_t idx = 0; idx < from.volume; ++idx) {
      if (cur[idx] != 0) {
        for (std::int64_t j = 0; j < p; ++j) {
          std::uint64_t target = 0;
          bool inside = true;
          for (std::size_t c = 0; c < l; ++c) {
            const std::int64_t x = v[c] + j * g[c];
            if (x < to.lo[c] || x > to.hi[c]) {
              inside = false;
              break;
            }
            target += static_cast<std::uint64_t>(x - to.lo[c]) * to.stride[c];
          }
          if (inside)
            next[target] += cur[idx];
        }
      }
      // Odometer over the box, first coordinate fastest.
      for (std::size_t c = 0; c < l; ++c) {
        if (v[c] < from.hi[c]) {
          ++v[c];
          break;
        }
        v[c] = from.lo[c];
      }
    }
    cur.swap(next);
  }
  // The last box is exactly {lambda}.
  return to_big(cur.empty() ? Count(0) : cur[0]);
}

} // namespace

SubdivisorCount count_subdivisors(const RootSystem &rs, const Weight &lambda,
                                  std::int64_t p, std::uint64_t state_limit) {
  if (p < 2)
    throw DomainError("bad_prime", "p must be at least 2");
  const std::size_t l = rs.rank();
  if (lambda.rank() != l)
    throw std::invalid_argument("class has the wrong rank");

  SubdivisorCount result;
  for (std::size_t i = 0; i < l && !result.cap_binds; ++i)
    result.cap_binds = is_succeq_zero(rs, lambda - p * Weight::unit(l, i)) ||
                       is_succeq_zero(rs, lambda - p * rs.simple_root(i));

  const auto gens = generators(rs);
  const std::size_t n = gens.size();
  // Coordinate-wise hull of the first k generators' contributions.
  std::vector<std::vector<std::int64_t>> pre_lo(n + 1, std::vector<std::int64_t>(l, 0));
  auto pre_hi = pre_lo;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t c = 0; c < l; ++c) {
      const std::int64_t span = gens[k][c] * (p - 1);
      pre_lo[k + 1][c] = pre_lo[k][c] + std::min<std::int64_t>(0, span);
      pre_hi[k + 1][c] = pre_hi[k][c] + std::max<std::int64_t>(0, span);
    }

  // State after k generators: inside the prefix hull and able to reach
  // lambda with the remaining ones.
  std::vector<Box> boxes(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Box &b = boxes[k];
    b.lo.resize(l);
    b.hi.resize(l);
    b.stride.resize(l);
    for (std::size_t c = 0; c < l; ++c) {
      const std::int64_t rem_lo = pre_lo[n][c] - pre_lo[k][c];
      const std::int64_t rem_hi = pre_hi[n][c] - pre_hi[k][c];
      b.lo[c] = std::max(pre_lo[k][c], lambda[c] - rem_hi);
      b.hi[c] = std::min(pre_hi[k][c], lambda[c] - rem_lo);
    }
    if (b.empty()) {
      result.count = 0;
      return result;
    }
    std::uint64_t vol = 1;
    for (std::size_t c = 0; c < l; ++c) {
      b.stride[c] = vol;
      const auto width = static_cast<std::uint64_t>(b.hi[c] - b.lo[c] + 1);
      if (vol > state_limit / width)
        throw DomainError("state_limit",
                          "subdivisor DP would exceed " +
                              std::to_string(state_limit) + " states");
      vol *= width;
    }
    b.volume = vol;
  }

  // Every count is at most p^{3l}; use a machine integer when that fits.
  const BigInt total = ipow(BigInt(p), static_cast<unsigned>(n));
  if (total < (BigInt(1) << 127))
    result.count = run_dp<u128>(gens, boxes, lambda, p);
  else
    result.count = run_dp<BigInt>(gens, boxes, lambda, p);
  return result;
}

BigInt multiplicity_lower_bound(const RootSystem &rs, const Weight &lambda,
                                const Weight &mu, std::int64_t p) {
  if (rs.type() != RootType::A)
    throw DomainError("conjectural",
                      "the subdivisor lower bound is only proven in type A; "
                      "for " + rs.name() + " it is conjectural");
  require_very_good_prime(rs, p);
  return count_subdivisors(rs, lambda - p * mu, p).count;
}

BigInt thomsen_multiplicity(std::int64_t m, std::int64_t d, std::int64_t e,
                            std::int64_t p) {
  if (m < 1 || p < 2)
    throw DomainError("bad_argument", "need m >= 1 and p >= 2");
  BigInt sum = 0;
  for (std::int64_t i = 0; i <= m + 1; ++i) {
    BigInt term = binomial(m + 1, i) * binomial(d - p * e + m - i * p, m);
    if (i % 2)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

} // namespace wfrob
