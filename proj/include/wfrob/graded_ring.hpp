#pragma once

#include "wfrob/numeric.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wfrob {

/// Rational coefficients on the basis of a GradedRing.
struct GradedElement {
  std::vector<Rational> coeffs;

  friend bool operator==(const GradedElement &, const GradedElement &) = default;
};

/// Finite commutative graded ring over Q, truncated at its top degree.
/// Basis element 0 must be the unit (degree 0). Products of basis elements
/// are given by integer structure constants; a missing entry for (i, j)
/// falls back to (j, i) and then to zero.
class GradedRing {
public:
  using Term = std::pair<std::size_t, std::int64_t>; // (basis index, coeff)

  GradedRing(std::vector<std::string> labels, std::vector<int> degrees,
             std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>>
                 products);

  /// Q[h] / h^{m+1}, basis 1, h, ..., h^m.
  static GradedRing projective_space(std::size_t m);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string &label(std::size_t i) const { return labels_[i]; }
  int degree(std::size_t i) const { return degrees_[i]; }
  int top_degree() const noexcept { return top_; }

  GradedElement zero() const;
  GradedElement one() const;
  GradedElement basis(std::size_t i) const;

  GradedElement add(const GradedElement &x, const GradedElement &y) const;
  GradedElement scale(const Rational &k, const GradedElement &x) const;
  GradedElement multiply(const GradedElement &x, const GradedElement &y) const;
  /// Degree-0 coefficient sum.
  Rational degree_zero_part(const GradedElement &x) const;
  /// Degree-d component of x.
  GradedElement component(const GradedElement &x, int d) const;

private:
  void check(const GradedElement &x) const;

  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  int top_ = 0;
  std::vector<std::vector<std::vector<Term>>> table_;
};

/// Scales the degree-i part by k^i.
GradedElement adams(const GradedRing &ring, const Rational &k,
                    const GradedElement &x);
/// Scales the degree-i part by k^{-i}. k != 0.
GradedElement adams_inverse(const GradedRing &ring, const Rational &k,
                            const GradedElement &x);

/// Multiplicative inverse by power series in the positive-degree part.
/// Throws DomainError("not_invertible") when the degree-0 part is not a
/// nonzero multiple of the unit.
GradedElement inverse(const GradedRing &ring, const GradedElement &x);

/// exp(x) for x of positive degree (nilpotent).
GradedElement exp_nilpotent(const GradedRing &ring, const GradedElement &x);

/// ch(O(d)) = exp(d h) on P^m.
GradedElement line_bundle_chern(const GradedRing &pm, std::int64_t d);
/// (h / (1 - e^{-h}))^{m+1} on P^m.
GradedElement todd_projective_space(const GradedRing &pm);

/// p^{dimX} (psi^p)^{-1}(ch_L td) / td
GradedElement chern_pushforward(const GradedRing &ring,
                                const GradedElement &ch_l,
                                const GradedElement &td, std::int64_t p,
                                int dim_x);

} // namespace wfrob
