#pragma once

#include "wfrob/root_system.hpp"

#include <optional>
#include <vector>

namespace wfrob {

/// Root order: lambda >= mu iff lambda - mu is a nonnegative integer
/// combination of simple roots.
bool root_order_geq(const RootSystem &rs, const Weight &lambda,
                    const Weight &mu);

/// Greatest b in Z_{>=0}^l with v - sum b_i alpha_i dominant, if any.
///
/// The feasible set is closed under componentwise max (the Cartan matrix
/// has nonpositive off-diagonal entries), so tightening the upper bounds
/// b_j <= floor((v_j + sum_{i != j} |A_ji| b_i) / 2) from the start value
/// floor(phi(v)) reaches a fixpoint that is feasible exactly when it is
/// nonnegative.
std::optional<std::vector<std::int64_t>> succeq_witness(const RootSystem &rs,
                                                        const Weight &v);

/// v in Lambda^+ + R^+.
bool is_succeq_zero(const RootSystem &rs, const Weight &v);

/// lambda - mu in Lambda^+ + R^+.
bool succeq(const RootSystem &rs, const Weight &lambda, const Weight &mu);

/// -2 rho - sum of simple roots.
Weight canonical_class(const RootSystem &rs);

} // namespace wfrob
