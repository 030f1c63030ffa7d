#include "wfrob/blocks.hpp"

#include <algorithm>
#include <map>

namespace wfrob {

std::vector<Weight> restricted_weights(const RootSystem &rs, std::int64_t p) {
  if (p < 2)
    throw DomainError("bad_prime", "p must be at least 2");
  const std::size_t l = rs.rank();
  std::vector<Weight> out;
  Weight w(l);
  while (true) {
    out.push_back(w);
    std::size_t i = l;
    while (i > 0) {
      --i;
      if (w[i] < p - 1) {
        ++w[i];
        break;
      }
      w[i] = 0;
      if (i == 0) {
        return out;
      }
    }
  }
}

Weight reduce_restricted(const Weight &lambda, std::int64_t p) {
  Weight r = lambda;
  for (std::size_t i = 0; i < r.rank(); ++i)
    r[i] = mod_floor(r[i], p);
  return r;
}

LinkageClass linkage_class(const RootSystem &rs, const Weight &lambda,
                           std::int64_t p) {
  const Weight start = reduce_restricted(lambda, p);
  std::set<Weight> orbit;
  for (const auto &w : rs.weyl_elements())
    orbit.insert(reduce_restricted(rs.dot_action(w, start), p));
  LinkageClass cls;
  cls.orbit.assign(orbit.begin(), orbit.end());
  cls.representative = cls.orbit.front();
  cls.a_lambda = static_cast<std::int64_t>(cls.orbit.size());
  return cls;
}

std::int64_t a_lambda(const RootSystem &rs, const Weight &lambda,
                      std::int64_t p) {
  return linkage_class(rs, lambda, p).a_lambda;
}

std::vector<LinkageClass> linkage_classes(const RootSystem &rs,
                                          std::int64_t p) {
  std::vector<LinkageClass> out;
  std::set<Weight> seen;
  for (const auto &lambda : restricted_weights(rs, p)) {
    if (seen.count(lambda))
      continue;
    auto cls = linkage_class(rs, lambda, p);
    seen.insert(cls.orbit.begin(), cls.orbit.end());
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(),
            [](const LinkageClass &x, const LinkageClass &y) {
              return x.representative < y.representative;
            });
  return out;
}

std::vector<std::int64_t> psln_type(std::size_t n, const Weight &lambda,
                                    std::int64_t p) {
  if (n < 2 || lambda.rank() != n - 1)
    throw std::invalid_argument("psln_type needs a weight with n-1 coordinates");
  if (static_cast<std::int64_t>(n) % p == 0)
    throw DomainError("bad_prime", "p = " + std::to_string(p) + " divides n = " +
                                       std::to_string(n) +
                                       "; the type formula needs p not dividing n");
  // lambda + rho = sum (c_j + 1) omega_j and omega_j = e_1 + ... + e_j.
  std::map<std::int64_t, std::int64_t> counts;
  std::int64_t tail = 0;
  counts[0] += 1; // e_n
  for (std::size_t k = n - 1; k-- > 0;) {
    tail += lambda[k] + 1;
    counts[mod_floor(tail, p)] += 1;
  }
  std::vector<std::int64_t> type;
  for (const auto &[value, mult] : counts)
    type.push_back(mult);
  std::sort(type.rbegin(), type.rend());
  return type;
}

BigInt multinomial(const std::vector<std::int64_t> &type) {
  BigInt result = 1;
  std::int64_t total = 0;
  for (auto k : type) {
    total += k;
    result *= binomial(total, k);
  }
  return result;
}

BigInt block_dimension(const RootSystem &rs, const Weight &lambda,
                       std::int64_t p) {
  return a_lambda(rs, lambda, p) *
         ipow(BigInt(p), static_cast<unsigned>(2 * rs.num_positive_roots()));
}

std::vector<std::int64_t> alcove_signature(const RootSystem &rs,
                                           const Weight &lambda,
                                           std::int64_t p) {
  const Weight shifted = lambda + rs.rho();
  std::vector<std::int64_t> m(rs.num_positive_roots());
  for (std::size_t k = 0; k < m.size(); ++k)
    m[k] = ceil_div(rs.pairing(shifted, k), p);
  return m;
}

std::int64_t separation_count(const std::vector<std::int64_t> &signature) {
  std::int64_t s = 0;
  for (auto m : signature)
    s += m - 1;
  return s;
}

const std::vector<std::int64_t> &d_table(const RootSystem &rs) {
  static const std::vector<std::int64_t> a1{1}, a2{2, 1}, a3{11, 6, 3, 2, 1},
      b2{4, 3, 2, 1}, g2{29, 16, 17, 18, 12, 6, 5, 4, 3, 2, 1};
  switch (rs.type()) {
  case RootType::B2:
    return b2;
  case RootType::G2:
    return g2;
  case RootType::A:
    if (rs.rank() == 1)
      return a1;
    if (rs.rank() == 2)
      return a2;
    if (rs.rank() == 3)
      return a3;
    break;
  }
  throw DomainError("no_table", "no d_lambda table for " + rs.name());
}

std::int64_t d_lambda(const RootSystem &rs, const Weight &lambda,
                      std::int64_t p) {
  const auto &table = d_table(rs);
  if (p < rs.coxeter_number() - 1)
    throw DomainError("small_prime", "d_lambda tables need p >= h - 1 = " +
                                         std::to_string(rs.coxeter_number() - 1));
  for (std::size_t i = 0; i < lambda.rank(); ++i)
    if (lambda[i] < 0 || lambda[i] >= p)
      throw DomainError("not_restricted",
                        lambda.to_string() + " is not p-restricted");
  const auto sep = separation_count(alcove_signature(rs, lambda, p));
  if (sep < 0 || sep >= static_cast<std::int64_t>(table.size()))
    throw std::logic_error("separation count outside the d_lambda table");
  return table[static_cast<std::size_t>(sep)];
}

BigInt rank_of_summand(const RootSystem &rs, const Weight &lambda,
                       const Weight &mu, std::int64_t p) {
  const auto cls = linkage_class(rs, lambda, p);
  if (!std::binary_search(cls.orbit.begin(), cls.orbit.end(), mu))
    return 0;
  return BigInt(cls.a_lambda) * d_lambda(rs, lambda, p) * d_lambda(rs, mu, p);
}

RankReport rank_report(const RootSystem &rs, std::int64_t p) {
  RankReport report;
  for (auto &cls : linkage_classes(rs, p)) {
    RankClassInfo info;
    std::set<std::int64_t> ds;
    for (const auto &w : cls.orbit) {
      info.d.push_back(d_lambda(rs, w, p));
      ds.insert(info.d.back());
    }
    for (auto x : ds)
      for (auto y : ds)
        report.rank_set.insert(BigInt(cls.a_lambda) * x * y);
    info.linkage = std::move(cls);
    report.classes.push_back(std::move(info));
  }
  return report;
}

std::set<BigInt> rank_set(const RootSystem &rs, std::int64_t p) {
  return rank_report(rs, p).rank_set;
}

std::set<BigInt> rank_envelope(const RootSystem &rs, std::int64_t p) {
  std::set<std::int64_t> as;
  for (const auto &cls : linkage_classes(rs, p))
    as.insert(cls.a_lambda);
  return rank_envelope(rs, as);
}

std::set<BigInt> rank_envelope(const RootSystem &rs,
                               const std::set<std::int64_t> &a_values) {
  const auto &table = d_table(rs);
  std::set<BigInt> out;
  for (auto a : a_values)
    for (auto x : table)
      for (auto y : table)
        out.insert(BigInt(a) * x * y);
  return out;
}

} // namespace wfrob
