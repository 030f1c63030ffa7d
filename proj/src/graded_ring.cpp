#include "wfrob/graded_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace wfrob {

GradedRing::GradedRing(
    std::vector<std::string> labels, std::vector<int> degrees,
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>> products)
    : labels_(std::move(labels)), degrees_(std::move(degrees)) {
  const std::size_t n = labels_.size();
  if (n == 0 || degrees_.size() != n)
    throw std::invalid_argument("graded ring needs one degree per basis label");
  if (degrees_[0] != 0)
    throw std::invalid_argument("basis element 0 must be the unit in degree 0");
  for (int d : degrees_) {
    if (d < 0)
      throw std::invalid_argument("negative degree in graded ring");
    top_ = std::max(top_, d);
  }
  table_.assign(n, std::vector<std::vector<Term>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    table_[0][i] = {{i, 1}};
    table_[i][0] = {{i, 1}};
  }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      auto it = products.find({i, j});
      if (it == products.end())
        it = products.find({j, i});
      if (it == products.end())
        continue;
      for (const auto &[k, c] : it->second) {
        if (k >= n || degrees_[k] != degrees_[i] + degrees_[j])
          throw std::invalid_argument("structure constant breaks the grading");
      }
      table_[i][j] = it->second;
    }
}

GradedRing GradedRing::projective_space(std::size_t m) {
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (std::size_t k = 0; k <= m; ++k) {
    labels.push_back(k == 0 ? "1" : k == 1 ? "h" : "h^" + std::to_string(k));
    degrees.push_back(static_cast<int>(k));
  }
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>> products;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; i + j <= m; ++j)
      products[{i, j}] = {{i + j, 1}};
  return GradedRing(std::move(labels), std::move(degrees), std::move(products));
}

void GradedRing::check(const GradedElement &x) const {
  if (x.coeffs.size() != size())
    throw std::invalid_argument("element does not belong to this ring");
}

GradedElement GradedRing::zero() const {
  return {std::vector<Rational>(size(), Rational(0))};
}

GradedElement GradedRing::one() const { return basis(0); }

GradedElement GradedRing::basis(std::size_t i) const {
  GradedElement e = zero();
  e.coeffs.at(i) = 1;
  return e;
}

GradedElement GradedRing::add(const GradedElement &x,
                              const GradedElement &y) const {
  check(x);
  check(y);
  GradedElement r = x;
  for (std::size_t i = 0; i < size(); ++i)
    r.coeffs[i] += y.coeffs[i];
  return r;
}

GradedElement GradedRing::scale(const Rational &k,
                                const GradedElement &x) const {
  check(x);
  GradedElement r = x;
  for (auto &c : r.coeffs)
    c *= k;
  return r;
}

GradedElement GradedRing::multiply(const GradedElement &x,
                                   const GradedElement &y) const {
  check(x);
  check(y);
  GradedElement r = zero();
  for (std::size_t i = 0; i < size(); ++i) {
    if (x.coeffs[i] == 0)
      continue;
    for (std::size_t j = 0; j < size(); ++j) {
      if (y.coeffs[j] == 0)
        continue;
      const Rational c = x.coeffs[i] * y.coeffs[j];
      for (const auto &[k, s] : table_[i][j])
        r.coeffs[k] += c * s;
    }
  }
  return r;
}

Rational GradedRing::degree_zero_part(const GradedElement &x) const {
  check(x);
  Rational s = 0;
  for (std::size_t i = 0; i < size(); ++i)
    if (degrees_[i] == 0)
      s += x.coeffs[i];
  return s;
}

GradedElement GradedRing::component(const GradedElement &x, int d) const {
  check(x);
  GradedElement r = zero();
  for (std::size_t i = 0; i < size(); ++i)
    if (degrees_[i] == d)
      r.coeffs[i] = x.coeffs[i];
  return r;
}

namespace {

Rational rpow(const Rational &k, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i)
    r *= k;
  return r;
}

} // namespace

GradedElement adams(const GradedRing &ring, const Rational &k,
                    const GradedElement &x) {
  GradedElement r = ring.scale(1, x);
  for (std::size_t i = 0; i < ring.size(); ++i)
    r.coeffs[i] *= rpow(k, ring.degree(i));
  return r;
}

GradedElement adams_inverse(const GradedRing &ring, const Rational &k,
                            const GradedElement &x) {
  if (k == 0)
    throw DomainError("bad_argument", "Adams inverse needs k != 0");
  return adams(ring, 1 / k, x);
}

GradedElement inverse(const GradedRing &ring, const GradedElement &x) {
  const GradedElement c0 = ring.component(x, 0);
  const Rational lead = c0.coeffs[0];
  if (lead == 0 || c0 != ring.scale(lead, ring.one()))
    throw DomainError("not_invertible",
                      "degree-0 part must be a nonzero multiple of 1");
  // x = lead (1 + n) with n nilpotent: x^{-1} = lead^{-1} sum (-n)^k.
  const GradedElement minus_n =
      ring.scale(-1 / lead, ring.add(x, ring.scale(-1, c0)));
  GradedElement sum = ring.one(), power = ring.one();
  for (int k = 1; k <= ring.top_degree(); ++k) {
    power = ring.multiply(power, minus_n);
    sum = ring.add(sum, power);
  }
  return ring.scale(1 / lead, sum);
}

GradedElement exp_nilpotent(const GradedRing &ring, const GradedElement &x) {
  if (ring.component(x, 0) != ring.zero())
    throw DomainError("bad_argument", "exp needs an element of positive degree");
  GradedElement sum = ring.one(), power = ring.one();
  for (int k = 1; k <= ring.top_degree(); ++k) {
    power = ring.scale(Rational(1, k), ring.multiply(power, x));
    sum = ring.add(sum, power);
  }
  return sum;
}

GradedElement line_bundle_chern(const GradedRing &pm, std::int64_t d) {
  if (pm.size() < 2)
    return pm.one();
  return exp_nilpotent(pm, pm.scale(d, pm.basis(1)));
}

GradedElement todd_projective_space(const GradedRing &pm) {
  // (1 - e^{-h}) / h = sum_k (-1)^k h^k / (k+1)!
  GradedElement series = pm.zero();
  Rational fact = 1;
  for (std::size_t k = 0; k < pm.size(); ++k) {
    fact *= static_cast<std::int64_t>(k + 1);
    series.coeffs[k] = (k % 2 ? -1 : 1) / fact;
  }
  const GradedElement one_factor = inverse(pm, series);
  GradedElement td = pm.one();
  for (std::size_t i = 0; i < pm.size(); ++i) // m + 1 factors
    td = pm.multiply(td, one_factor);
  return td;
}

GradedElement chern_pushforward(const GradedRing &ring,
                                const GradedElement &ch_l,
                                const GradedElement &td, std::int64_t p,
                                int dim_x) {
  if (p < 2)
    throw DomainError("bad_prime", "p must be at least 2");
  const GradedElement td_inv = inverse(ring, td);
  const GradedElement twisted =
      adams_inverse(ring, Rational(p), ring.multiply(ch_l, td));
  const Rational scale = ipow(BigInt(p), static_cast<unsigned>(dim_x));
  return ring.scale(scale, ring.multiply(twisted, td_inv));
}

} // namespace wfrob
