#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wfrob {

/// An integral weight in fundamental-weight coordinates:
/// coords[i] is the coefficient of omega_i, which is also the pairing with
/// the i-th simple coroot.
class Weight {
public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, 0) {}
  explicit Weight(std::vector<std::int64_t> coords)
      : coords_(std::move(coords)) {}
  Weight(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static Weight zero(std::size_t rank) { return Weight(rank); }
  static Weight unit(std::size_t rank, std::size_t i) {
    Weight w(rank);
    w.coords_.at(i) = 1;
    return w;
  }

  std::size_t rank() const noexcept { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t &operator[](std::size_t i) { return coords_[i]; }
  std::span<const std::int64_t> coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  bool is_dominant() const noexcept;

  Weight &operator+=(const Weight &o);
  Weight &operator-=(const Weight &o);
  Weight &operator*=(std::int64_t k);

  friend Weight operator+(Weight a, const Weight &b) { return a += b; }
  friend Weight operator-(Weight a, const Weight &b) { return a -= b; }
  friend Weight operator*(std::int64_t k, Weight a) { return a *= k; }
  friend Weight operator-(Weight a) { return a *= -1; }

  friend bool operator==(const Weight &, const Weight &) = default;
  friend auto operator<=>(const Weight &, const Weight &) = default;

  /// "6,6" style serialization.
  std::string to_string() const;

  /// Parses comma-separated integers. Throws std::invalid_argument on
  /// anything that is not a list of integers (rationals included).
  static Weight parse(std::string_view text);

private:
  std::vector<std::int64_t> coords_;
};

struct WeightHash {
  std::size_t operator()(const Weight &w) const noexcept;
};

} // namespace wfrob
