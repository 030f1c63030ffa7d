#include "wfrob/weight_order.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace wfrob;

TEST_CASE("root order examples") {
  const auto a2 = RootSystem::parse("A2");
  CHECK(root_order_geq(a2, Weight{3, -2}, Weight{3, -2}));
  CHECK(root_order_geq(a2, Weight{1, 1}, Weight{0, 0}));
  CHECK_FALSE(root_order_geq(a2, Weight{1, 0}, Weight{0, 0}));
}

TEST_CASE("succeq examples") {
  const auto a1 = RootSystem::parse("A1");
  for (std::int64_t a = -10; a <= 10; ++a)
    CHECK(is_succeq_zero(a1, Weight{a}) == (a >= 0));
  const auto a2 = RootSystem::parse("A2");
  CHECK(is_succeq_zero(a2, Weight{0, 0}));
  CHECK_FALSE(is_succeq_zero(a2, Weight{-1, 0}));
  CHECK(succeq(a2, Weight{3, 1}, Weight{1, 2}) ==
        is_succeq_zero(a2, Weight{2, -1}));
}

TEST_CASE("canonical class") {
  CHECK(canonical_class(RootSystem::parse("A1")) == Weight{-4});
  CHECK(canonical_class(RootSystem::parse("A2")) == Weight{-3, -3});
  const auto b2 = RootSystem::parse("B2");
  CHECK(canonical_class(b2) ==
        -2 * b2.rho() - b2.simple_root(0) - b2.simple_root(1));
}

TEST_CASE("is_succeq_zero matches brute force on rank-2 boxes") {
  for (const char *name : {"A2", "B2", "G2"}) {
    const auto rs = RootSystem::parse(name);
    for (std::int64_t a = -8; a <= 8; ++a)
      for (std::int64_t b = -8; b <= 8; ++b) {
        const Weight v{a, b};
        CHECK_MESSAGE(is_succeq_zero(rs, v) == oracle::succeq_zero(rs, v),
                      name << " " << v.to_string());
      }
  }
}

TEST_CASE("is_succeq_zero matches brute force on an A3 box") {
  const auto rs = RootSystem::parse("A3");
  for (std::int64_t a = -4; a <= 4; ++a)
    for (std::int64_t b = -4; b <= 4; ++b)
      for (std::int64_t c = -4; c <= 4; ++c) {
        const Weight v{a, b, c};
        CHECK(is_succeq_zero(rs, v) == oracle::succeq_zero(rs, v));
      }
}

TEST_CASE("witness is feasible") {
  const auto rs = RootSystem::parse("G2");
  for (std::int64_t a = -6; a <= 10; ++a)
    for (std::int64_t b = -6; b <= 10; ++b) {
      const Weight v{a, b};
      if (auto w = succeq_witness(rs, v)) {
        for (auto x : *w)
          CHECK(x >= 0);
        CHECK((v - rs.from_root_coords(*w)).is_dominant());
      }
    }
}

TEST_CASE("order properties on random pairs") {
  std::mt19937_64 gen(20240611);
  std::uniform_int_distribution<std::int64_t> coord(-10, 10);
  for (const char *name : {"A2", "A3", "B2", "G2"}) {
    const auto rs = RootSystem::parse(name);
    for (int trial = 0; trial < 400; ++trial) {
      Weight x(rs.rank()), y(rs.rank()), z(rs.rank());
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        x[i] = coord(gen);
        y[i] = coord(gen);
        z[i] = coord(gen);
      }
      CHECK(succeq(rs, x, x));
      if (succeq(rs, x, y) && succeq(rs, y, x))
        CHECK(x == y);
      if (succeq(rs, x, y) && succeq(rs, y, z))
        CHECK(succeq(rs, x, z));
      if (root_order_geq(rs, x, y))
        CHECK(succeq(rs, x, y));
      if (is_succeq_zero(rs, x)) {
        CHECK(rs.phi(x) >= 0);
        for (const auto &c : rs.root_coords(x))
          CHECK(c >= 0);
      }
    }
  }
}
