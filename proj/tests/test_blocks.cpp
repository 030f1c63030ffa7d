#include "wfrob/blocks.hpp"

#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

using namespace wfrob;

namespace {

// |W| / #{w : w.lambda = lambda mod p}
std::int64_t orbit_size_by_stabilizer(const RootSystem &rs, const Weight &lambda,
                                      std::int64_t p) {
  std::int64_t stab = 0;
  for (const auto &w : rs.weyl_elements())
    if (reduce_restricted(rs.dot_action(w, lambda), p) == lambda)
      ++stab;
  return static_cast<std::int64_t>(rs.weyl_elements().size()) / stab;
}

} // namespace

TEST_CASE("restricted weights") {
  const auto a1 = RootSystem::parse("A1");
  CHECK(restricted_weights(a1, 3) == std::vector<Weight>{Weight{0}, Weight{1}, Weight{2}});
  const auto g2 = RootSystem::parse("G2");
  const auto r = restricted_weights(g2, 7);
  CHECK(r.size() == 49);
  CHECK(std::find(r.begin(), r.end(), 6 * g2.rho()) != r.end());
  CHECK(std::find(r.begin(), r.end(), -g2.rho()) == r.end());
}

TEST_CASE("linkage classes") {
  for (const char *name : {"A1", "A2", "A3", "B2", "G2"}) {
    const auto rs = RootSystem::parse(name);
    CHECK(a_lambda(rs, 6 * rs.rho(), 7) == 1);
  }
  const auto a1 = RootSystem::parse("A1");
  const std::int64_t p = 7;
  for (std::int64_t n = 0; n <= p - 2; ++n) {
    const auto cls = linkage_class(a1, Weight{n}, p);
    std::set<Weight> expect{Weight{n}, Weight{p - 2 - n}};
    CHECK(std::set<Weight>(cls.orbit.begin(), cls.orbit.end()) == expect);
  }
  const auto a2 = RootSystem::parse("A2");
  CHECK(a_lambda(a2, Weight{p - 1, p - 1}, p) == 1);
  CHECK(a_lambda(a2, Weight{2, p - 4}, p) == 3);
  CHECK(a_lambda(a2, Weight{1, 2}, p) == 6);
}

TEST_CASE("orbit sizes equal |W| over the stabilizer") {
  for (const char *name : {"B2", "G2"}) {
    const auto rs = RootSystem::parse(name);
    for (std::int64_t p : {7, 11, 13})
      for (const auto &lambda : restricted_weights(rs, p)) {
        const auto a = a_lambda(rs, lambda, p);
        CHECK(a == orbit_size_by_stabilizer(rs, lambda, p));
        CHECK(static_cast<std::int64_t>(rs.weyl_elements().size()) % a == 0);
      }
  }
}

TEST_CASE("linkage classes partition the restricted weights") {
  for (const char *name : {"A2", "A3", "B2", "G2"}) {
    const auto rs = RootSystem::parse(name);
    const std::int64_t p = 7;
    std::int64_t total = 0;
    std::set<Weight> seen;
    for (const auto &cls : linkage_classes(rs, p)) {
      total += cls.a_lambda;
      for (const auto &w : cls.orbit)
        CHECK(seen.insert(w).second);
    }
    CHECK(total == static_cast<std::int64_t>(restricted_weights(rs, p).size()));
  }
}

TEST_CASE("SL_n types") {
  CHECK(psln_type(3, Weight{0, 0}, 5) == std::vector<std::int64_t>{1, 1, 1});
  // entries of (p-1)rho + rho are multiples of p, so they all agree
  CHECK(psln_type(4, Weight{4, 4, 4}, 5) == std::vector<std::int64_t>{4});
  CHECK(psln_type(3, Weight{1, 2}, 5) == std::vector<std::int64_t>{2, 1});
  CHECK(psln_type(3, Weight{1, 2}, 7) == std::vector<std::int64_t>{1, 1, 1});
  CHECK_THROWS_AS(psln_type(3, Weight{0, 0}, 3), DomainError);
  CHECK(multinomial({2, 1}) == 3);
  CHECK(multinomial({1, 1, 1, 1}) == 24);
  for (std::size_t n : {3u, 4u}) {
    const auto rs = RootSystem::build(RootType::A, n - 1);
    for (std::int64_t p : {5, 7})
      for (const auto &lambda : restricted_weights(rs, p))
        CHECK(multinomial(psln_type(n, lambda, p)) == a_lambda(rs, lambda, p));
  }
}

TEST_CASE("block dimensions") {
  const auto a2 = RootSystem::parse("A2");
  const std::int64_t p = 5;
  CHECK(block_dimension(a2, Weight{4, 4}, p) == ipow(BigInt(p), 6));
  CHECK(block_dimension(a2, Weight{0, 1}, p) == 6 * ipow(BigInt(p), 6));
  for (const char *name : {"A1", "A2", "B2", "G2"}) {
    const auto rs = RootSystem::parse(name);
    BigInt total = 0;
    for (const auto &cls : linkage_classes(rs, 7))
      total += block_dimension(rs, cls.representative, 7);
    CHECK(total == ipow(BigInt(7), static_cast<unsigned>(rs.group_dim())));
  }
}

TEST_CASE("alcove signatures") {
  for (const char *name : {"A2", "A3", "B2", "G2"}) {
    const auto rs = RootSystem::parse(name);
    const std::int64_t p = 13;
    const auto top = alcove_signature(rs, (p - 1) * rs.rho(), p);
    std::int64_t sep = 0;
    for (std::size_t k = 0; k < top.size(); ++k) {
      CHECK(top[k] == rs.positive_roots()[k].coroot_height);
      sep += top[k] - 1;
    }
    CHECK(separation_count(top) == sep);
    for (auto m : alcove_signature(rs, Weight(rs.rank()), p))
      CHECK(m == 1);
  }
  const auto a2 = RootSystem::parse("A2");
  // <(1,1) + rho, theta^vee> = 4 <= 5
  CHECK(alcove_signature(a2, Weight{1, 1}, 5) == std::vector<std::int64_t>{1, 1, 1});
  // on the wall <lambda + rho, theta^vee> = 5: still the lower alcove
  CHECK(alcove_signature(a2, Weight{2, 1}, 5) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(alcove_signature(a2, Weight{2, 2}, 5) == std::vector<std::int64_t>{1, 1, 2});
}

TEST_CASE("signatures are bounded and order compatible") {
  for (const char *name : {"A3", "B2", "G2"}) {
    const auto rs = RootSystem::parse(name);
    const auto &roots = rs.positive_roots();
    for (const auto &lambda : restricted_weights(rs, 11)) {
      const auto m = alcove_signature(rs, lambda, 11);
      for (std::size_t a = 0; a < roots.size(); ++a) {
        CHECK(m[a] >= 1);
        CHECK(m[a] <= roots[a].coroot_height);
        for (std::size_t b = 0; b < roots.size(); ++b) {
          bool below = true;
          for (std::size_t i = 0; i < rs.rank(); ++i)
            below = below && roots[a].coroot[i] <= roots[b].coroot[i];
          if (below)
            CHECK(m[a] <= m[b]);
        }
      }
    }
  }
}

TEST_CASE("alcove census") {
  auto census = [](const RootSystem &rs, std::int64_t p) {
    std::set<std::vector<std::int64_t>> sigs;
    for (const auto &lambda : restricted_weights(rs, p))
      sigs.insert(alcove_signature(rs, lambda, p));
    std::multiset<std::int64_t> seps;
    for (const auto &s : sigs)
      seps.insert(separation_count(s));
    return seps;
  };
  CHECK(census(RootSystem::parse("A3"), 7) == std::multiset<std::int64_t>{0, 1, 2, 2, 3, 4});
  CHECK(census(RootSystem::parse("A2"), 7) == std::multiset<std::int64_t>{0, 1});
  CHECK(census(RootSystem::parse("B2"), 7) == std::multiset<std::int64_t>{0, 1, 2, 3});
  CHECK(census(RootSystem::parse("G2"), 11) ==
        std::multiset<std::int64_t>{0, 1, 2, 3, 4, 5, 5, 6, 7, 8, 9, 10});
}

TEST_CASE("d_lambda lookups") {
  const auto a2 = RootSystem::parse("A2");
  CHECK(d_lambda(a2, Weight{0, 0}, 7) == 2);
  CHECK(d_lambda(a2, Weight{6, 6}, 7) == 1);
  CHECK(d_lambda(RootSystem::parse("B2"), Weight{0, 0}, 3) == 4);
  CHECK(d_lambda(RootSystem::parse("G2"), Weight{0, 0}, 7) == 29);
  CHECK(d_lambda(RootSystem::parse("G2"), Weight{6, 6}, 7) == 1);
  CHECK_THROWS_AS(d_lambda(RootSystem::parse("G2"), Weight{0, 0}, 3), DomainError);
  CHECK_THROWS_AS(d_lambda(a2, Weight{7, 0}, 7), DomainError);
  CHECK_THROWS_AS(d_lambda(RootSystem::parse("A4"), Weight{0, 0, 0, 0}, 7), DomainError);
}

TEST_CASE("ranks") {
  for (const char *name : {"A2", "A3", "B2", "G2"}) {
    const auto rs = RootSystem::parse(name);
    const Weight st = 6 * rs.rho();
    CHECK(rank_of_summand(rs, st, st, 7) == 1);
  }
  const auto a2 = RootSystem::parse("A2");
  CHECK(rank_of_summand(a2, Weight{0, 0}, Weight{1, 0}, 7) == 0);
  CHECK(rank_set(a2, 7) == std::set<BigInt>{1, 3, 6, 12, 24});
}

TEST_CASE("rank divided by d_mu is constant on a class") {
  const auto b2 = RootSystem::parse("B2");
  const std::int64_t p = 7;
  for (const auto &cls : linkage_classes(b2, p)) {
    const auto &l = cls.representative;
    const BigInt ref = rank_of_summand(b2, l, l, p) / d_lambda(b2, l, p);
    for (const auto &mu : cls.orbit)
      CHECK(rank_of_summand(b2, l, mu, p) / d_lambda(b2, mu, p) == ref);
  }
}

TEST_CASE("rank sets sit inside the envelope") {
  for (const char *name : {"A2", "A3", "B2", "G2"}) {
    const auto rs = RootSystem::parse(name);
    const auto s = rank_set(rs, 11);
    const auto env = rank_envelope(rs, 11);
    CHECK(std::includes(env.begin(), env.end(), s.begin(), s.end()));
  }
}
