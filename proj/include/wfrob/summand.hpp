#pragma once

#include "wfrob/root_system.hpp"

#include <optional>
#include <vector>

namespace wfrob {

/// lambda - p mu = sum a_i omega_i + sum b_i alpha_i with
/// 0 <= a_i <= 2(p-1) and 0 <= b_i <= p-1.
struct SummandWitness {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
};

struct SummandVerdict {
  bool necessary = false;
  bool sufficient = false;
  std::optional<SummandWitness> witness; // present iff sufficient
};

/// Throws DomainError unless p is a prime not dividing the Coxeter number.
void require_very_good_prime(const RootSystem &rs, std::int64_t p);

/// Hom(O(mu), Fr_* O(lambda)) != 0, i.e. lambda - p mu succeq 0.
bool hom_into_nonzero(const RootSystem &rs, const Weight &lambda,
                      const Weight &mu, std::int64_t p);
/// Hom(Fr_* O(lambda), O(mu)) != 0, i.e. (1-p)K_X - (lambda - p mu) succeq 0.
bool hom_from_nonzero(const RootSystem &rs, const Weight &lambda,
                      const Weight &mu, std::int64_t p);

/// Finds a witness for the sufficient lattice-point condition on v, or
/// nothing. Exposed for reuse by the divisor counter tests.
std::optional<SummandWitness> find_summand_witness(const RootSystem &rs,
                                                   const Weight &v,
                                                   std::int64_t p);

SummandVerdict check_summand(const RootSystem &rs, const Weight &lambda,
                             const Weight &mu, std::int64_t p);

/// Every mu with (1-p)K_X succeq lambda - p mu succeq 0, sorted.
std::vector<Weight> enumerate_candidate_mu(const RootSystem &rs,
                                           const Weight &lambda,
                                           std::int64_t p);

/// Candidates whose verdict is sufficient, sorted.
std::vector<Weight> enumerate_guaranteed_mu(const RootSystem &rs,
                                            const Weight &lambda,
                                            std::int64_t p);

/// Integer points of the closed PSL3 region
///   -x1/2 <= x2,  -2 x1 <= x2,
///   x2 <= -x1/2 + 9(p-1)/2,  x2 <= -2 x1 + 9(p-1),
/// counted by a direct scan.
std::int64_t psl3_lattice_point_count(std::int64_t p);
/// 27(p-1)^2 + 1 + 6(p-1)
std::int64_t psl3_lattice_point_formula(std::int64_t p);

/// The three dimension bounds on the multiplicity of O(mu) in
/// Fr_* O(lambda). `ratio` is absent when dim F_{<=mu} = 0.
struct MultiplicityUpperBound {
  std::optional<BigInt> ratio;  // floor(dim F_{<=lambda} / dim F_{<=mu})
  BigInt hom_into;              // dim F_{<= lambda - p mu}
  BigInt hom_from;              // dim F_{<= (1-p)K_X - (lambda - p mu)}

  BigInt value() const;
};

MultiplicityUpperBound multiplicity_upper_bound(const RootSystem &rs,
                                                const Weight &lambda,
                                                const Weight &mu,
                                                std::int64_t p);

} // namespace wfrob
