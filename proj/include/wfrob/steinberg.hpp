#pragma once

#include "wfrob/root_system.hpp"

#include <cstdint>

namespace wfrob {

/// The weight mu with pi_{(p-1)rho} Fr_* O(lambda) = St (x) St (x) O(mu):
/// the unique succeq-maximal mu with lambda - p mu - (p-1)rho in R^+.
///
/// Only candidates with phi(mu) within a fixed slack of the largest
/// possible value are scanned; that set is upward closed for succeq, so it
/// contains the maximum. `extra_slack` widens it (used by the tests).
/// Throws DomainError("not_unique") if the maximal element is not unique.
Weight steinberg_block_weight(const RootSystem &rs, const Weight &lambda,
                              std::int64_t p, std::int64_t extra_slack = 0);

} // namespace wfrob
