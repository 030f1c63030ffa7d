#pragma once

#include "wfrob/root_system.hpp"

#include <vector>

namespace wfrob {

/// Weyl dimension formula, prod <lambda+rho, a^vee> / <rho, a^vee>.
/// Throws DomainError("not_dominant") for non-dominant lambda.
BigInt weyl_dimension(const RootSystem &rs, const Weight &lambda);

/// p^{|Phi^+|}
BigInt steinberg_dimension(const RootSystem &rs, std::int64_t p);

/// All dominant mu with lambda - mu in R^+, sorted.
std::vector<Weight> dominant_weights_below(const RootSystem &rs,
                                           const Weight &lambda);

/// dim F_{<=lambda} = sum over dominant mu <= lambda of (dim W_mu)^2.
/// Zero when no dominant weight lies below lambda.
BigInt filtration_dimension(const RootSystem &rs, const Weight &lambda);

} // namespace wfrob
