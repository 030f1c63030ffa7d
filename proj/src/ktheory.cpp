#include "wfrob/ktheory.hpp"

#include <algorithm>

namespace wfrob {

BigInt FixedPointClass::augmentation() const {
  return ipow(BigInt(p), static_cast<unsigned>(tangent.size()));
}

std::vector<std::pair<std::size_t, std::size_t>>
fixed_points(const RootSystem &rs) {
  const std::size_t n = rs.weyl_elements().size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(n * n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t w = 0; w < n; ++w)
      out.emplace_back(y, w);
  return out;
}

FixedPointClass localized_class(const RootSystem &rs, const Weight &lambda,
                                std::int64_t p, std::size_t y, std::size_t w) {
  if (p < 2)
    throw DomainError("bad_prime", "p must be at least 2");
  const auto &W = rs.weyl_elements();
  if (y >= W.size() || w >= W.size())
    throw std::out_of_range("fixed point index out of range");
  const IntMatrix &Y = W[y];
  const IntMatrix &Wm = W[w];
  const std::size_t l = rs.rank();

  FixedPointClass c;
  c.p = p;
  c.base = {-Y.apply(lambda), Wm.apply(rs.w0().apply(lambda))};
  const Weight zero(l);
  for (const auto &root : rs.positive_roots())
    c.tangent.push_back({Y.apply(root.omega), zero});
  for (const auto &root : rs.positive_roots())
    c.tangent.push_back({zero, -Wm.apply(root.omega)});
  for (std::size_t i = 0; i < l; ++i)
    c.tangent.push_back({Y.apply(rs.simple_root(i)), -Wm.apply(rs.simple_root(i))});
  return c;
}

std::vector<CharacterPair> expand_class(const FixedPointClass &c,
                                        std::uint64_t limit) {
  if (c.augmentation() > limit)
    throw DomainError("expansion_limit",
                      "class has " + c.augmentation().str() +
                          " characters, over the limit " + std::to_string(limit));
  std::vector<CharacterPair> terms{c.base};
  for (const auto &chi : c.tangent) {
    std::vector<CharacterPair> next;
    next.reserve(terms.size() * static_cast<std::size_t>(c.p));
    for (const auto &t : terms) {
      CharacterPair cur = t;
      for (std::int64_t a = 0; a < c.p; ++a) {
        next.push_back(cur);
        cur += chi;
      }
    }
    terms.swap(next);
  }
  std::sort(terms.begin(), terms.end());
  return terms;
}

namespace {

Rational rpow(Rational x, std::int64_t e) {
  if (e < 0) {
    x = 1 / x;
    e = -e;
  }
  Rational r = 1;
  while (e) {
    if (e & 1)
      r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

} // namespace

Rational evaluate_character(const CharacterPair &chi, const TorusPoint &at) {
  if (at.t.size() != chi.left.rank() || at.s.size() != chi.right.rank())
    throw std::invalid_argument("torus point has the wrong rank");
  Rational v = 1;
  for (std::size_t i = 0; i < at.t.size(); ++i) {
    if (at.t[i] == 0 || at.s[i] == 0)
      throw DomainError("zero_coordinate", "torus coordinates must be nonzero");
    v *= rpow(at.t[i], chi.left[i]) * rpow(at.s[i], chi.right[i]);
  }
  return v;
}

Rational evaluate_class(const FixedPointClass &c, const TorusPoint &at) {
  Rational v = evaluate_character(c.base, at);
  for (const auto &chi : c.tangent) {
    const Rational x = evaluate_character(chi, at);
    if (x == 1)
      v *= c.p;
    else
      v *= (rpow(x, c.p) - 1) / (x - 1);
  }
  return v;
}

Rational evaluate_characters(const std::vector<CharacterPair> &chars,
                             const TorusPoint &at) {
  Rational v = 0;
  for (const auto &chi : chars)
    v += evaluate_character(chi, at);
  return v;
}

} // namespace wfrob
