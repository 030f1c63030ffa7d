#include "wfrob/steinberg.hpp"

#include "wfrob/summand.hpp"
#include "wfrob/weight_order.hpp"

#include <numeric>

namespace wfrob {

namespace {

std::vector<Weight> scan_window(const RootSystem &rs, const Weight &u,
                                std::int64_t p, std::int64_t slack) {
  const std::size_t l = rs.rank();
  const std::int64_t det = rs.cartan_det();
  const auto su = rs.scaled_root_coords(u);
  const std::int64_t su_total = std::accumulate(su.begin(), su.end(), std::int64_t{0});

  // Root coordinates of mu are at most U_j = su_j / (p det) and, inside the
  // window, at least U_j - slack.
  std::vector<Rational> hi_alpha(l), lo_alpha(l);
  for (std::size_t j = 0; j < l; ++j) {
    hi_alpha[j] = Rational(su[j], p * det);
    lo_alpha[j] = hi_alpha[j] - slack;
  }
  std::vector<std::int64_t> lo(l), hi(l);
  for (std::size_t i = 0; i < l; ++i) {
    Rational a = 0, b = 0;
    for (std::size_t j = 0; j < l; ++j) {
      const std::int64_t c = rs.cartan(i, j);
      a += c * (c >= 0 ? lo_alpha[j] : hi_alpha[j]);
      b += c * (c >= 0 ? hi_alpha[j] : lo_alpha[j]);
    }
    lo[i] = static_cast<std::int64_t>(ceil_rational(a));
    hi[i] = static_cast<std::int64_t>(floor_rational(b));
  }

  std::vector<Weight> out;
  Weight mu(std::vector<std::int64_t>(lo.begin(), lo.end()));
  while (true) {
    if (rs.in_positive_root_cone(u - p * mu)) {
      const auto smu = rs.scaled_root_coords(mu);
      const std::int64_t s = std::accumulate(smu.begin(), smu.end(), std::int64_t{0});
      // phi(mu) >= sum U_j - slack, scaled by p det
      if (p * s >= su_total - p * slack * det)
        out.push_back(mu);
    }
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
  return out;
}

} // namespace

Weight steinberg_block_weight(const RootSystem &rs, const Weight &lambda,
                              std::int64_t p, std::int64_t extra_slack) {
  require_very_good_prime(rs, p);
  const Weight u = lambda - (p - 1) * rs.rho();
  std::int64_t slack =
      static_cast<std::int64_t>(ceil_rational(2 * rs.phi(rs.rho()))) +
      static_cast<std::int64_t>(rs.rank()) + 1 + extra_slack;

  std::vector<Weight> window;
  for (int attempt = 0; attempt < 8 && window.empty(); ++attempt, slack *= 2)
    window = scan_window(rs, u, p, slack);
  if (window.empty())
    throw DomainError("no_candidate",
                      "no mu with lambda - p mu - (p-1)rho in R^+ was found");

  std::vector<Weight> maximal;
  for (const auto &mu : window) {
    bool dominated = false;
    for (const auto &other : window)
      if (other != mu && succeq(rs, other, mu)) {
        dominated = true;
        break;
      }
    if (!dominated)
      maximal.push_back(mu);
  }
  if (maximal.size() != 1) {
    std::string list;
    for (const auto &m : maximal)
      list += (list.empty() ? "" : "; ") + m.to_string();
    throw DomainError("not_unique",
                      "maximal candidates are not unique: " + list);
  }
  return maximal.front();
}

} // namespace wfrob
