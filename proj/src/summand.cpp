#include "wfrob/summand.hpp"

#include "wfrob/rep_dims.hpp"
#include "wfrob/weight_order.hpp"

#include <algorithm>

namespace wfrob {

void require_very_good_prime(const RootSystem &rs, std::int64_t p) {
  if (!is_prime(p))
    throw DomainError("not_prime", std::to_string(p) + " is not a prime");
  if (rs.coxeter_number() % p == 0)
    throw DomainError("bad_prime", "p = " + std::to_string(p) +
                                       " divides the Coxeter number " +
                                       std::to_string(rs.coxeter_number()) +
                                       " of " + rs.name());
}

bool hom_into_nonzero(const RootSystem &rs, const Weight &lambda,
                      const Weight &mu, std::int64_t p) {
  require_very_good_prime(rs, p);
  return is_succeq_zero(rs, lambda - p * mu);
}

bool hom_from_nonzero(const RootSystem &rs, const Weight &lambda,
                      const Weight &mu, std::int64_t p) {
  require_very_good_prime(rs, p);
  return is_succeq_zero(rs, (1 - p) * canonical_class(rs) - (lambda - p * mu));
}

namespace {

bool witness_search(const RootSystem &rs, const Weight &v, std::int64_t p,
                    std::size_t depth, std::vector<std::int64_t> &b) {
  const std::size_t l = rs.rank();
  const std::int64_t amax = 2 * (p - 1);
  for (std::size_t j = 0; j < l; ++j) {
    // Range of (A b)_j with the free b_i anywhere in [0, p-1].
    std::int64_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < l; ++i) {
      const std::int64_t c = rs.cartan(j, i);
      if (i < depth) {
        lo += c * b[i];
        hi += c * b[i];
      } else if (c > 0) {
        hi += c * (p - 1);
      } else {
        lo += c * (p - 1);
      }
    }
    // need v_j - amax <= (A b)_j <= v_j
    if (hi < v[j] - amax || lo > v[j])
      return false;
  }
  if (depth == l)
    return true;
  for (std::int64_t k = 0; k < p; ++k) {
    b[depth] = k;
    if (witness_search(rs, v, p, depth + 1, b))
      return true;
  }
  return false;
}

} // namespace

std::optional<SummandWitness> find_summand_witness(const RootSystem &rs,
                                                   const Weight &v,
                                                   std::int64_t p) {
  for (auto x : rs.scaled_root_coords(v))
    if (x < 0)
      return std::nullopt;
  std::vector<std::int64_t> b(rs.rank(), 0);
  if (!witness_search(rs, v, p, 0, b))
    return std::nullopt;
  const Weight a = v - rs.from_root_coords(b);
  return SummandWitness{{a.coords().begin(), a.coords().end()}, b};
}

SummandVerdict check_summand(const RootSystem &rs, const Weight &lambda,
                             const Weight &mu, std::int64_t p) {
  SummandVerdict verdict;
  verdict.necessary = hom_into_nonzero(rs, lambda, mu, p) &&
                      hom_from_nonzero(rs, lambda, mu, p);
  if (!verdict.necessary)
    return verdict;
  verdict.witness = find_summand_witness(rs, lambda - p * mu, p);
  verdict.sufficient = verdict.witness.has_value();
  return verdict;
}

std::vector<Weight> enumerate_candidate_mu(const RootSystem &rs,
                                           const Weight &lambda,
                                           std::int64_t p) {
  require_very_good_prime(rs, p);
  const std::size_t l = rs.rank();
  const Weight top = (1 - p) * canonical_class(rs);
  const auto s_top = rs.scaled_root_coords(top);
  const auto s_lambda = rs.scaled_root_coords(lambda);
  const std::int64_t det = rs.cartan_det();

  // Root coordinates of v = lambda - p mu lie in [0, rootcoords(top)], which
  // boxes the root coordinates of mu; map that box to omega-coordinates.
  std::vector<Rational> mu_lo(l), mu_hi(l);
  for (std::size_t j = 0; j < l; ++j) {
    mu_lo[j] = Rational(s_lambda[j] - s_top[j], det * p);
    mu_hi[j] = Rational(s_lambda[j], det * p);
  }
  std::vector<std::int64_t> lo(l), hi(l);
  for (std::size_t i = 0; i < l; ++i) {
    Rational a = 0, b = 0;
    for (std::size_t j = 0; j < l; ++j) {
      const std::int64_t c = rs.cartan(i, j);
      if (c >= 0) {
        a += c * mu_lo[j];
        b += c * mu_hi[j];
      } else {
        a += c * mu_hi[j];
        b += c * mu_lo[j];
      }
    }
    lo[i] = static_cast<std::int64_t>(ceil_rational(a));
    hi[i] = static_cast<std::int64_t>(floor_rational(b));
  }

  std::vector<Weight> out;
  for (std::size_t i = 0; i < l; ++i)
    if (lo[i] > hi[i])
      return out;
  Weight mu(std::vector<std::int64_t>(lo.begin(), lo.end()));
  while (true) {
    const Weight v = lambda - p * mu;
    if (is_succeq_zero(rs, v) && is_succeq_zero(rs, top - v))
      out.push_back(mu);
    std::size_t i = 0;
    for (; i < l; ++i) {
      if (mu[i] < hi[i]) {
        ++mu[i];
        break;
      }
      mu[i] = lo[i];
    }
    if (i == l)
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> enumerate_guaranteed_mu(const RootSystem &rs,
                                            const Weight &lambda,
                                            std::int64_t p) {
  std::vector<Weight> out;
  for (const auto &mu : enumerate_candidate_mu(rs, lambda, p))
    if (find_summand_witness(rs, lambda - p * mu, p))
      out.push_back(mu);
  return out;
}

std::int64_t psl3_lattice_point_count(std::int64_t p) {
  const std::int64_t q = p - 1;
  std::int64_t count = 0;
  for (std::int64_t x1 = -3 * q; x1 <= 6 * q; ++x1)
    for (std::int64_t x2 = -3 * q; x2 <= 6 * q; ++x2) {
      if (2 * x2 < -x1 || x2 < -2 * x1)
        continue;
      if (2 * x2 > -x1 + 9 * q || x2 > -2 * x1 + 9 * q)
        continue;
      ++count;
    }
  return count;
}

std::int64_t psl3_lattice_point_formula(std::int64_t p) {
  return 27 * (p - 1) * (p - 1) + 1 + 6 * (p - 1);
}

BigInt MultiplicityUpperBound::value() const {
  BigInt v = std::min(hom_into, hom_from);
  if (ratio)
    v = std::min(v, *ratio);
  return v;
}

MultiplicityUpperBound multiplicity_upper_bound(const RootSystem &rs,
                                                const Weight &lambda,
                                                const Weight &mu,
                                                std::int64_t p) {
  require_very_good_prime(rs, p);
  const Weight v = lambda - p * mu;
  MultiplicityUpperBound bound;
  bound.hom_into = filtration_dimension(rs, v);
  bound.hom_from = filtration_dimension(rs, (1 - p) * canonical_class(rs) - v);
  if (bound.hom_into == 0 || bound.hom_from == 0) {
    // Some Hom vanishes, so the bound is already 0; skip the ratio work.
    return bound;
  }
  const BigInt below_mu = filtration_dimension(rs, mu);
  if (below_mu != 0)
    bound.ratio = filtration_dimension(rs, lambda) / below_mu;
  return bound;
}

} // namespace wfrob
