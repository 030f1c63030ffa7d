#include "wfrob/rep_dims.hpp"

#include "wfrob/weight_order.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <utility>

namespace wfrob {

namespace {

// Keyed by (root system name, lambda). Results are pure functions of the
// key, so the cache is invisible from outside.
class DimensionCache {
public:
  std::optional<BigInt> find(const std::string &name, const Weight &w) {
    std::lock_guard lock(mu_);
    auto it = table_.find({name, w});
    if (it == table_.end())
      return std::nullopt;
    return it->second;
  }
  void store(const std::string &name, const Weight &w, const BigInt &v) {
    std::lock_guard lock(mu_);
    if (table_.size() > 200000)
      table_.clear();
    table_.emplace(std::make_pair(name, w), v);
  }

private:
  std::mutex mu_;
  std::map<std::pair<std::string, Weight>, BigInt> table_;
};

DimensionCache &cache() {
  static DimensionCache c;
  return c;
}

void descend(const RootSystem &rs, const Weight &lambda,
             const std::vector<std::int64_t> &upper, std::size_t depth,
             std::vector<std::int64_t> &n, std::vector<Weight> &out) {
  const std::size_t l = rs.rank();
  // Best case for each coordinate given the fixed prefix of n.
  for (std::size_t j = 0; j < l; ++j) {
    std::int64_t best = lambda[j];
    for (std::size_t i = 0; i < l; ++i) {
      if (i < depth)
        best -= rs.cartan(j, i) * n[i];
      else if (i != j)
        best -= rs.cartan(j, i) * upper[i];
    }
    if (best < 0)
      return;
  }
  if (depth == l) {
    out.push_back(lambda - rs.from_root_coords(n));
    return;
  }
  for (std::int64_t k = 0; k <= upper[depth]; ++k) {
    n[depth] = k;
    descend(rs, lambda, upper, depth + 1, n, out);
  }
}

} // namespace

BigInt weyl_dimension(const RootSystem &rs, const Weight &lambda) {
  if (!lambda.is_dominant())
    throw DomainError("not_dominant",
                      "Weyl dimension needs a dominant weight, got " +
                          lambda.to_string());
  if (auto hit = cache().find(rs.name(), lambda))
    return *hit;
  const Weight shifted = lambda + rs.rho();
  Rational prod = 1;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
    prod *= Rational(rs.pairing(shifted, k), rs.positive_roots()[k].coroot_height);
  if (boost::multiprecision::denominator(prod) != 1)
    throw std::logic_error("Weyl dimension product is not integral");
  BigInt dim = boost::multiprecision::numerator(prod);
  cache().store(rs.name(), lambda, dim);
  return dim;
}

BigInt steinberg_dimension(const RootSystem &rs, std::int64_t p) {
  return ipow(BigInt(p), static_cast<unsigned>(rs.num_positive_roots()));
}

std::vector<Weight> dominant_weights_below(const RootSystem &rs,
                                           const Weight &lambda) {
  std::vector<Weight> out;
  auto top = succeq_witness(rs, lambda);
  if (!top)
    return out;
  std::vector<std::int64_t> n(rs.rank(), 0);
  descend(rs, lambda, *top, 0, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt filtration_dimension(const RootSystem &rs, const Weight &lambda) {
  BigInt total = 0;
  for (const auto &mu : dominant_weights_below(rs, lambda)) {
    BigInt d = weyl_dimension(rs, mu);
    total += d * d;
  }
  return total;
}

} // namespace wfrob
