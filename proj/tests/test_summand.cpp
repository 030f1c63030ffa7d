#include "wfrob/summand.hpp"

#include "wfrob/blocks.hpp"
#include "wfrob/rep_dims.hpp"
#include "wfrob/weight_order.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <random>

using namespace wfrob;

TEST_CASE("prime hypotheses") {
  const auto a2 = RootSystem::parse("A2");
  CHECK_THROWS_AS(check_summand(a2, Weight{0, 0}, Weight{0, 0}, 3), DomainError);
  CHECK_THROWS_AS(check_summand(a2, Weight{0, 0}, Weight{0, 0}, 4), DomainError);
  CHECK_THROWS_AS(check_summand(RootSystem::parse("G2"), Weight{0, 0}, Weight{0, 0}, 3),
                  DomainError);
  CHECK_THROWS_AS(check_summand(RootSystem::parse("B2"), Weight{0, 0}, Weight{0, 0}, 2),
                  DomainError);
  CHECK_NOTHROW(check_summand(a2, Weight{0, 0}, Weight{0, 0}, 5));
}

TEST_CASE("Hom conditions") {
  const auto a2 = RootSystem::parse("A2");
  const std::int64_t p = 7;
  const Weight mu{1, -2};
  CHECK(hom_into_nonzero(a2, p * mu, mu, p));
  const Weight top = (1 - p) * canonical_class(a2);
  CHECK(hom_from_nonzero(a2, top + p * mu, mu, p));

  const auto a1 = RootSystem::parse("A1");
  for (std::int64_t q : {3, 5, 7}) {
    const Weight lambda{4 * q - 3};
    CHECK_FALSE(hom_from_nonzero(a1, lambda, Weight{0}, q));
  }
}

TEST_CASE("check_summand examples") {
  const auto a2 = RootSystem::parse("A2");
  auto v = check_summand(a2, Weight{0, 0}, Weight{0, 0}, 11);
  CHECK(v.necessary);
  CHECK(v.sufficient);
  REQUIRE(v.witness);
  CHECK(v.witness->a == std::vector<std::int64_t>{0, 0});
  CHECK(v.witness->b == std::vector<std::int64_t>{0, 0});

  v = check_summand(a2, Weight{6, 6}, Weight{0, 0}, 11);
  CHECK(v.sufficient);

  for (const char *name : {"A1", "A2", "A3", "B2", "G2"}) {
    const auto rs = RootSystem::parse(name);
    const std::int64_t p = 7;
    const Weight top = (1 - p) * canonical_class(rs);
    const auto verdict = check_summand(rs, top, Weight(rs.rank()), p);
    CHECK_MESSAGE(verdict.sufficient, name);
  }
}

TEST_CASE("witnesses reconstruct and respect the bounds") {
  const auto b2 = RootSystem::parse("B2");
  const std::int64_t p = 5;
  for (std::int64_t a = -10; a <= 30; ++a)
    for (std::int64_t b = -10; b <= 30; ++b) {
      const auto v = check_summand(b2, Weight{a, b}, Weight{0, 0}, p);
      if (v.sufficient) {
        CHECK(v.necessary);
        REQUIRE(v.witness);
        const Weight recon = Weight(v.witness->a) + b2.from_root_coords(v.witness->b);
        CHECK(recon == Weight{a, b});
        for (auto x : v.witness->a)
          CHECK((x >= 0 && x <= 2 * (p - 1)));
        for (auto x : v.witness->b)
          CHECK((x >= 0 && x <= p - 1));
      } else {
        CHECK_FALSE(v.witness);
      }
    }
}

TEST_CASE("witness search matches brute force") {
  for (const char *name : {"A2", "B2", "G2"}) {
    const auto rs = RootSystem::parse(name);
    const std::int64_t p = 5;
    for (std::int64_t a = -12; a <= 20; ++a)
      for (std::int64_t b = -12; b <= 20; ++b) {
        const Weight v{a, b};
        CHECK(find_summand_witness(rs, v, p).has_value() ==
              oracle::summand_witness(rs, v, p));
      }
  }
}

TEST_CASE("A1 candidate range") {
  const auto a1 = RootSystem::parse("A1");
  for (std::int64_t p : {3, 5, 7})
    for (std::int64_t n = -30; n <= 40; ++n) {
      std::vector<Weight> expect;
      for (std::int64_t k = ceil_div(4 + n, p) - 4; k <= floor_div(n, p); ++k)
        expect.push_back(Weight{k});
      CHECK(enumerate_candidate_mu(a1, Weight{n}, p) == expect);
    }
}

TEST_CASE("candidate box covers every candidate") {
  const auto a2 = RootSystem::parse("A2");
  const std::int64_t p = 5;
  const Weight top = (1 - p) * canonical_class(a2);
  for (const Weight lambda : {Weight{0, 0}, Weight{3, 4}, Weight{-7, 12}}) {
    std::vector<Weight> brute;
    for (std::int64_t x = -20; x <= 20; ++x)
      for (std::int64_t y = -20; y <= 20; ++y) {
        const Weight mu{x, y};
        const Weight v = lambda - p * mu;
        if (is_succeq_zero(a2, v) && is_succeq_zero(a2, top - v))
          brute.push_back(mu);
      }
    CHECK(enumerate_candidate_mu(a2, lambda, p) == brute);
  }
}

TEST_CASE("PSL3 candidate and guaranteed counts at p = 11") {
  const auto a2 = RootSystem::parse("A2");
  const std::int64_t p = 11;
  std::size_t lo = 100, hi = 0, glo = 100, ghi = 0;
  for (const auto &lambda : restricted_weights(a2, p)) {
    const auto c = enumerate_candidate_mu(a2, lambda, p);
    const auto g = enumerate_guaranteed_mu(a2, lambda, p);
    CHECK(std::includes(c.begin(), c.end(), g.begin(), g.end()));
    lo = std::min(lo, c.size());
    hi = std::max(hi, c.size());
    glo = std::min(glo, g.size());
    ghi = std::max(ghi, g.size());
  }
  CHECK(lo == 21);
  CHECK(hi == 27);
  CHECK(glo == 14);
  CHECK(ghi == 19);
  const Weight corner{-3 * (p - 1), 6 * (p - 1)};
  CHECK(enumerate_candidate_mu(a2, corner, p).size() == 27);
}

TEST_CASE("guaranteed mu examples") {
  const auto a3 = RootSystem::parse("A3");
  const std::int64_t p = 5;
  const Weight nu{1, -1, 2};
  auto g = enumerate_guaranteed_mu(a3, p * nu, p);
  CHECK(std::binary_search(g.begin(), g.end(), nu));
  g = enumerate_guaranteed_mu(a3, p * nu + (p - 1) * a3.rho(), p);
  CHECK(std::binary_search(g.begin(), g.end(), nu));
}

TEST_CASE("candidate sets are translation equivariant") {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<std::int64_t> coord(-15, 15);
  for (const char *name : {"A2", "B2", "G2"}) {
    const auto rs = RootSystem::parse(name);
    const std::int64_t p = 7;
    for (int trial = 0; trial < 20; ++trial) {
      const Weight lambda{coord(gen), coord(gen)};
      const Weight nu{coord(gen) / 3, coord(gen) / 3};
      auto base = enumerate_candidate_mu(rs, lambda, p);
      for (auto &mu : base)
        mu += nu;
      CHECK(enumerate_candidate_mu(rs, lambda + p * nu, p) == base);
    }
  }
}

TEST_CASE("PSL3 region lattice points") {
  CHECK(psl3_lattice_point_count(5) == 457);
  CHECK(psl3_lattice_point_count(11) == 2761);
  CHECK(psl3_lattice_point_count(2) == 34);
  for (std::int64_t p = 2; p <= 31; ++p)
    CHECK(psl3_lattice_point_count(p) == psl3_lattice_point_formula(p));
}

TEST_CASE("multiplicity upper bound examples") {
  const auto a2 = RootSystem::parse("A2");
  const std::int64_t p = 7;
  const Weight mu{2, -1};
  CHECK(multiplicity_upper_bound(a2, p * mu, mu, p).value() == 1);
  CHECK(multiplicity_upper_bound(a2, p * mu + a2.simple_root(0), mu, p).value() == 1);
  CHECK(multiplicity_upper_bound(a2, p * mu + a2.simple_root(1), mu, p).value() == 1);
  const Weight top = (1 - p) * canonical_class(a2);
  CHECK(multiplicity_upper_bound(a2, top + p * mu, mu, p).value() == 1);
  // outside the candidate set
  CHECK(multiplicity_upper_bound(a2, p * mu - Weight{1, 0}, mu, p).value() == 0);
}

TEST_CASE("dim F below alpha is 10 in rank one") {
  // W_0 and W_alpha (dim 3) both lie below alpha = 2 omega.
  const auto a1 = RootSystem::parse("A1");
  CHECK(filtration_dimension(a1, a1.simple_root(0)) == 10);
  CHECK(multiplicity_upper_bound(a1, Weight{2}, Weight{0}, 5).hom_into == 10);
}
