#pragma once

#include "wfrob/numeric.hpp"
#include "wfrob/weight.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wfrob {

/// Dense square integer matrix acting on omega-coordinates.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }
  std::int64_t &operator()(std::size_t i, std::size_t j) {
    return a_[i * n_ + j];
  }

  Weight apply(const Weight &v) const;
  friend IntMatrix operator*(const IntMatrix &x, const IntMatrix &y);
  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;
  friend auto operator<=>(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

enum class RootType { A, B2, G2 };

struct PositiveRoot {
  Weight omega;                     // omega-coordinates
  std::vector<std::int64_t> alpha;  // coefficients on simple roots
  std::vector<std::int64_t> coroot; // coefficients on simple coroots
  std::int64_t height = 0;          // of the root
  std::int64_t coroot_height = 0;   // ht(alpha^vee)
};

/// Immutable root datum for A_n, B2 and G2, in omega-coordinates.
///
/// Cartan convention: cartan(i, j) = <alpha_j, alpha_i^vee>, so column j
/// holds the omega-coordinates of alpha_j. For B2 the first simple root is
/// long; for G2 the first simple root is short.
///
/// The Weyl group is enumerated as integer matrices only up to order 720
/// (A_5). Larger A_n keep everything that does not need the group and throw
/// DomainError("weyl_unavailable") from the group accessors.
class RootSystem {
public:
  static constexpr std::size_t kMaxWeylOrder = 720;

  static RootSystem build(RootType type, std::size_t n = 0);
  /// "A1", "A2", ..., "B2", "G2".
  static RootSystem parse(std::string_view name);

  RootType type() const noexcept { return type_; }
  const std::string &name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return rank_; }
  std::int64_t cartan(std::size_t i, std::size_t j) const {
    return cartan_(i, j);
  }
  const IntMatrix &cartan_matrix() const noexcept { return cartan_; }

  const std::vector<PositiveRoot> &positive_roots() const noexcept {
    return positive_roots_;
  }
  std::size_t num_positive_roots() const noexcept {
    return positive_roots_.size();
  }
  /// omega-coordinates of alpha_i.
  const Weight &simple_root(std::size_t i) const { return simple_roots_[i]; }
  const Weight &rho() const noexcept { return rho_; }
  std::int64_t coxeter_number() const noexcept { return coxeter_; }
  std::size_t group_dim() const noexcept {
    return rank_ + 2 * positive_roots_.size();
  }
  /// Order of W from the classification, available at every rank.
  std::uint64_t weyl_order() const noexcept { return weyl_order_; }

  bool has_weyl_group() const noexcept { return !weyl_.empty(); }
  const std::vector<IntMatrix> &weyl_elements() const;
  const IntMatrix &w0() const;
  std::size_t w0_index() const;
  std::size_t identity_index() const { return 0; }

  /// <lambda, alpha^vee> for the positive root with the given index.
  std::int64_t pairing(const Weight &lambda, std::size_t root_index) const;

  Weight weyl_apply(const IntMatrix &w, const Weight &lambda) const;
  Weight weyl_apply(std::size_t w_index, const Weight &lambda) const;
  /// w.lambda = w(lambda + rho) - rho
  Weight dot_action(const IntMatrix &w, const Weight &lambda) const;
  Weight dot_action(std::size_t w_index, const Weight &lambda) const;

  /// Coefficients of lambda in the simple-root basis.
  std::vector<Rational> root_coords(const Weight &lambda) const;
  /// Sum of root_coords.
  Rational phi(const Weight &lambda) const;

  /// det(cartan) * root_coords, exact integers. Cheaper than root_coords
  /// for sign and integrality tests.
  std::vector<std::int64_t> scaled_root_coords(const Weight &lambda) const;
  std::int64_t cartan_det() const noexcept { return det_; }
  /// True iff all root coordinates are integers (lambda in the root lattice).
  bool in_root_lattice(const Weight &lambda) const;
  /// True iff lambda is a nonnegative integer combination of simple roots.
  bool in_positive_root_cone(const Weight &lambda) const;

  /// Weight with the given simple-root coefficients.
  Weight from_root_coords(std::span<const std::int64_t> coeffs) const;

private:
  RootSystem() = default;
  void finish();

  RootType type_ = RootType::A;
  std::string name_;
  std::size_t rank_ = 0;
  IntMatrix cartan_;
  IntMatrix adjugate_; // adj(cartan); cartan^{-1} = adjugate_ / det_
  std::int64_t det_ = 1;
  std::vector<Weight> simple_roots_;
  std::vector<PositiveRoot> positive_roots_;
  Weight rho_;
  std::int64_t coxeter_ = 0;
  std::uint64_t weyl_order_ = 0;
  std::vector<IntMatrix> weyl_;
  std::size_t w0_index_ = 0;
};

} // namespace wfrob
