#include "wfrob/weight_order.hpp"

#include <algorithm>

namespace wfrob {

bool root_order_geq(const RootSystem &rs, const Weight &lambda,
                    const Weight &mu) {
  return rs.in_positive_root_cone(lambda - mu);
}

std::optional<std::vector<std::int64_t>> succeq_witness(const RootSystem &rs,
                                                        const Weight &v) {
  const std::size_t l = rs.rank();
  // Dominant weights and positive roots both have nonnegative root
  // coordinates, so anything else is out immediately.
  std::int64_t scaled_phi = 0;
  for (auto x : rs.scaled_root_coords(v)) {
    if (x < 0)
      return std::nullopt;
    scaled_phi += x;
  }
  const std::int64_t start = scaled_phi / rs.cartan_det();
  std::vector<std::int64_t> upper(l, start);
  std::vector<std::int64_t> next(l);
  while (true) {
    for (std::size_t j = 0; j < l; ++j) {
      std::int64_t room = v[j];
      for (std::size_t i = 0; i < l; ++i)
        if (i != j)
          room -= rs.cartan(j, i) * upper[i];
      next[j] = std::min(upper[j], floor_div(room, rs.cartan(j, j)));
      if (next[j] < 0)
        return std::nullopt;
    }
    if (next == upper)
      return upper;
    upper.swap(next);
  }
}

bool is_succeq_zero(const RootSystem &rs, const Weight &v) {
  return succeq_witness(rs, v).has_value();
}

bool succeq(const RootSystem &rs, const Weight &lambda, const Weight &mu) {
  return is_succeq_zero(rs, lambda - mu);
}

Weight canonical_class(const RootSystem &rs) {
  Weight k = -2 * rs.rho();
  for (std::size_t i = 0; i < rs.rank(); ++i)
    k -= rs.simple_root(i);
  return k;
}

} // namespace wfrob
