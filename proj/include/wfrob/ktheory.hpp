#pragma once

#include "wfrob/root_system.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace wfrob {

/// Character of T x T with weight (left, right).
struct CharacterPair {
  Weight left;
  Weight right;

  CharacterPair &operator+=(const CharacterPair &o) {
    left += o.left;
    right += o.right;
    return *this;
  }
  friend CharacterPair operator+(CharacterPair a, const CharacterPair &b) {
    return a += b;
  }
  friend CharacterPair operator*(std::int64_t k, const CharacterPair &c) {
    return {k * c.left, k * c.right};
  }
  friend bool operator==(const CharacterPair &, const CharacterPair &) = default;
  friend auto operator<=>(const CharacterPair &, const CharacterPair &) = default;
};

/// base (x) prod_{chi in tangent} (1 + chi + ... + chi^{p-1}).
/// Expands to exactly p^{tangent.size()} characters.
struct FixedPointClass {
  CharacterPair base;
  std::vector<CharacterPair> tangent;
  std::int64_t p = 0;

  BigInt augmentation() const;
};

/// (y, w) index pairs into weyl_elements(), y major.
std::vector<std::pair<std::size_t, std::size_t>> fixed_points(const RootSystem &rs);

/// Class of Fr^* Fr_* O(lambda) at the fixed point (y, w). Tangent pairs
/// are (y(gamma), 0) for gamma in Phi^+, then (0, -w(gamma)) for gamma in
/// Phi^+, then (y(alpha_i), -w(alpha_i)) for the simple roots.
FixedPointClass localized_class(const RootSystem &rs, const Weight &lambda,
                                std::int64_t p, std::size_t y, std::size_t w);

/// Every character of the class with multiplicity, sorted. Throws
/// DomainError("expansion_limit") if p^{dim G} exceeds `limit`.
std::vector<CharacterPair> expand_class(const FixedPointClass &c,
                                        std::uint64_t limit);

/// Values of the left and right torus coordinates; a character (a, b)
/// evaluates to prod t_i^{a_i} prod s_j^{b_j}. Entries must be nonzero.
struct TorusPoint {
  std::vector<Rational> t;
  std::vector<Rational> s;
};

Rational evaluate_character(const CharacterPair &chi, const TorusPoint &at);
Rational evaluate_class(const FixedPointClass &c, const TorusPoint &at);
Rational evaluate_characters(const std::vector<CharacterPair> &chars,
                             const TorusPoint &at);

} // namespace wfrob
