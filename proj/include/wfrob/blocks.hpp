#pragma once

#include "wfrob/root_system.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace wfrob {

/// All weights with omega-coordinates in [0, p-1], lexicographic order.
std::vector<Weight> restricted_weights(const RootSystem &rs, std::int64_t p);

/// Representative of lambda mod p*Lambda with coordinates in [0, p-1].
Weight reduce_restricted(const Weight &lambda, std::int64_t p);

struct LinkageClass {
  Weight representative;     // smallest member of the orbit
  std::vector<Weight> orbit; // sorted
  std::int64_t a_lambda = 0; // orbit size
};

/// Dot-action orbit of lambda on Lambda / p Lambda, as restricted weights.
LinkageClass linkage_class(const RootSystem &rs, const Weight &lambda,
                           std::int64_t p);
std::int64_t a_lambda(const RootSystem &rs, const Weight &lambda,
                      std::int64_t p);

/// Every linkage class meeting Lambda_p, ordered by representative.
std::vector<LinkageClass> linkage_classes(const RootSystem &rs, std::int64_t p);

/// Multiplicity profile (descending) of the epsilon-coordinates of
/// lambda + rho mod p for SL_n. lambda has n-1 coordinates.
std::vector<std::int64_t> psln_type(std::size_t n, const Weight &lambda,
                                    std::int64_t p);
/// n! / (n_1! ... n_k!)
BigInt multinomial(const std::vector<std::int64_t> &type);

/// a_lambda * p^{2 |Phi^+|}
BigInt block_dimension(const RootSystem &rs, const Weight &lambda,
                       std::int64_t p);

/// m_alpha per positive root with (m-1)p < <lambda+rho, alpha^vee> <= m p.
std::vector<std::int64_t> alcove_signature(const RootSystem &rs,
                                           const Weight &lambda,
                                           std::int64_t p);
std::int64_t separation_count(const std::vector<std::int64_t> &signature);

/// d_lambda values by separation count, bottom alcove first.
const std::vector<std::int64_t> &d_table(const RootSystem &rs);

/// Table lookup by separation count. Needs lambda restricted and
/// p >= h - 1; A_n for n > 3 has no table.
std::int64_t d_lambda(const RootSystem &rs, const Weight &lambda,
                      std::int64_t p);

/// a_lambda d_lambda d_mu when mu is linked to lambda, else 0.
BigInt rank_of_summand(const RootSystem &rs, const Weight &lambda,
                       const Weight &mu, std::int64_t p);

struct RankClassInfo {
  LinkageClass linkage;
  std::vector<std::int64_t> d; // d of each orbit member, same order
};

struct RankReport {
  std::set<BigInt> rank_set;
  std::vector<RankClassInfo> classes;
};

/// All nonzero a_lambda d_lambda d_mu over linked pairs in Lambda_p.
RankReport rank_report(const RootSystem &rs, std::int64_t p);
std::set<BigInt> rank_set(const RootSystem &rs, std::int64_t p);

/// {a d d'} over the given a-values and every pair of d-table values,
/// ignoring which alcoves a class actually visits.
std::set<BigInt> rank_envelope(const RootSystem &rs,
                               const std::set<std::int64_t> &a_values);
/// Same, over the a_lambda attained at p.
std::set<BigInt> rank_envelope(const RootSystem &rs, std::int64_t p);

} // namespace wfrob
