#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sylow/arith.hpp"
#include "sylow/catalog.hpp"
#include "sylow/errors.hpp"
#include "sylow/subgroup_ops.hpp"
#include "sylow/verify.hpp"

using namespace sylow;

namespace {

Permutation cyc(std::size_t n, std::string_view s) { return parse_cycles(s, n); }

oracle::ElementSet elements_of(const PermGroup& g) { return oracle::closure(g.degree(), g.generators()); }

// Small groups for oracle equivalence: the catalog up to order 2000 plus
// subgroups of S6/S7 generated by seeded random pairs.
std::vector<NamedGroup> oracle_corpus() {
  auto out = catalog_corpus(2000);
  std::mt19937_64 rng(20240611);
  for (unsigned n : {5u, 6u, 7u}) {
    const PermGroup s = symmetric(n);
    for (int i = 0; out.size() < 200 && i < 12; ++i) {
      PermGroup h(n, {s.random_element(rng), s.random_element(rng)});
      if (h.order() <= 2000 && h.order() > 1) out.push_back({"random S" + std::to_string(n), h});
    }
  }
  return out;
}

}  // namespace

TEST(Sylow, KnownValues) {
  EXPECT_EQ(sylow_subgroup(symmetric(4), 2).order(), 8);
  EXPECT_TRUE(sylow_subgroup(alternating(5), 7).group.is_trivial());
  EXPECT_EQ(sylow_subgroup(mathieu(11), 2).order(), 16);
  EXPECT_THROW(sylow_subgroup(symmetric(4), 4), std::invalid_argument);
}

TEST(Normalizer, KnownValues) {
  const PermGroup l27 = psl2(7);
  EXPECT_EQ(normalizer(l27, sylow_subgroup(l27, 7)).order(), 21);
  const PermGroup a5 = alternating(5);
  EXPECT_EQ(normalizer(a5, a5).order(), 60);
  EXPECT_EQ(normalizer(a5, sylow_subgroup(a5, 5)).order(), 10);
}

TEST(Centralizer, KnownValues) {
  const PermGroup c6 = cyclic(6);
  EXPECT_EQ(centralizer(c6, PermGroup(6, {c6.generators().front().pow(2)})).order(), 6);
  const PermGroup a5 = alternating(5);
  EXPECT_EQ(centralizer(a5, sylow_subgroup(a5, 5)).order(), 5);
  EXPECT_EQ(centralizer(symmetric(3), PermGroup(3, {cyc(3, "(1,2,3)")})).order(), 3);
}

TEST(Center, KnownValues) {
  EXPECT_TRUE(center(symmetric(3)).group.is_trivial());
  EXPECT_EQ(center(sylow_subgroup(symmetric(4), 2).group).order(), 2);
  EXPECT_EQ(center(cyclic(6)).order(), 6);
}

TEST(Reality, KnownValues) {
  for (unsigned n = 2; n <= 7; ++n) {
    const PermGroup s = symmetric(n);
    for (auto st = s.elements(); auto x = st.next();) ASSERT_TRUE(is_real(s, *x)) << n;
  }
  // S8: one element per cycle type, i.e. per conjugacy class.
  const PermGroup s8 = symmetric(8);
  std::set<std::vector<std::size_t>> types;
  for (auto st = s8.elements(); auto x = st.next();) {
    std::vector<std::size_t> type;
    for (const auto& c : x->cycles()) type.push_back(c.size());
    std::sort(type.begin(), type.end());
    if (types.insert(type).second) ASSERT_TRUE(is_real(s8, *x)) << to_cycle_string(*x);
  }
  EXPECT_EQ(types.size(), 22u);  // partitions of 8
  EXPECT_FALSE(is_real(alternating(7), cyc(7, "(1,2,3,4,5,6,7)")));
  EXPECT_TRUE(is_real(alternating(5), cyc(5, "(1,2,3,4,5)")));
}

TEST(Reality, WitnessInverts) {
  const PermGroup a5 = alternating(5);
  const Permutation z = cyc(5, "(1,2,3,4,5)");
  auto w = real_witness(a5, z);
  ASSERT_TRUE(w);
  EXPECT_TRUE(a5.contains(*w));
  EXPECT_EQ(conjugate(z, *w), z.inverse());
}

TEST(Reality, ClassBudget) {
  ScopedBudget b({30'000'000, 10});
  EXPECT_THROW(is_real(alternating(7), cyc(7, "(1,2,3,4,5,6,7)")), BudgetExceeded);
}

TEST(ExtendedCentralizer, KnownValues) {
  const PermGroup a5 = alternating(5);
  const Permutation inv = cyc(5, "(1,2)(3,4)");
  EXPECT_TRUE(same_group(extended_centralizer(a5, inv).group, centralizer_element(a5, inv).group));
  const Permutation five = cyc(5, "(1,2,3,4,5)");
  EXPECT_EQ(extended_centralizer(a5, five).order(), 2 * centralizer_element(a5, five).order());
  const PermGroup a7 = alternating(7);
  const Permutation seven = cyc(7, "(1,2,3,4,5,6,7)");
  EXPECT_EQ(extended_centralizer(a7, seven).order(), centralizer_element(a7, seven).order());
  EXPECT_THROW(extended_centralizer(a5, a5.identity()), std::invalid_argument);
}

TEST(NormalClosure, KnownValues) {
  const PermGroup s4 = symmetric(4);
  const auto a4 = normal_closure(s4, PermGroup(4, {cyc(4, "(1,2,3)")}));
  EXPECT_EQ(a4.order(), 12);
  EXPECT_TRUE(same_group(a4.group, alternating(4)));
  EXPECT_TRUE(normal_closure(s4, PermGroup::trivial(4)).group.is_trivial());
  const PermGroup c6 = cyclic(6);
  const PermGroup h(6, {c6.generators().front().pow(3)});
  EXPECT_TRUE(same_group(normal_closure(c6, h).group, h));
}

TEST(DerivedSeries, KnownValues) {
  EXPECT_TRUE(is_soluble(symmetric(4)));
  EXPECT_FALSE(is_soluble(alternating(5)));
  const auto series = derived_series(symmetric(3));
  ASSERT_EQ(series.size(), 3u);
  EXPECT_EQ(series[0].order(), 6);
  EXPECT_EQ(series[1].order(), 3);
  EXPECT_EQ(series[2].order(), 1);
}

TEST(NilpotentHallPair, KnownValues) {
  EXPECT_TRUE(nilpotent_hall_pair_exists(direct_product(cyclic(6), cyclic(10)), 2, 5));
  EXPECT_FALSE(nilpotent_hall_pair_exists(alternating(5), 2, 3));
  EXPECT_TRUE(nilpotent_hall_pair_exists(direct_product(symmetric(3), cyclic(5)), 3, 5));
  EXPECT_FALSE(nilpotent_hall_pair_exists(agl1(5), 2, 5));
  EXPECT_THROW(nilpotent_hall_pair_exists(alternating(5), 3, 3), std::invalid_argument);
}

TEST(Frattini, KnownValues) {
  EXPECT_EQ(frattini_product_order(symmetric(4), alternating(4), 3), 24);
  EXPECT_EQ(frattini_product_order(symmetric(5), alternating(5), 5), 120);
  const PermGroup m11 = mathieu(11);
  EXPECT_EQ(frattini_product_order(m11, m11, 3), 7920);
  EXPECT_THROW(frattini_product_order(symmetric(4), PermGroup(4, {cyc(4, "(1,2)")}), 2),
               std::invalid_argument);
}

TEST(ConjugateSubgroup, SylowFiveOfA5) {
  const PermGroup a5 = alternating(5);
  const Subgroup p = sylow_subgroup(a5, 5);
  const Subgroup q = conjugate_subgroup(p, cyc(5, "(1,2,3)"));
  EXPECT_EQ(q.order(), 5);
  EXPECT_FALSE(same_group(p.group, q.group));
  // 6 Sylow 5-subgroups: the conjugate is one of them by order count.
  EXPECT_EQ(oracle::sylow_subgroups(5, elements_of(a5), 5).size(), 6u);
}

// Every Sylow, normalizer, centralizer, center, normal-closure and reality
// result agrees with brute force over the full element set.
TEST(OracleEquivalence, SmallGroups) {
  std::mt19937_64 rng(7);
  for (const auto& [name, g] : oracle_corpus()) {
    SCOPED_TRACE(name);
    const auto gset = elements_of(g);
    ASSERT_EQ(BigInt(gset.size()), g.order());
    const auto n = static_cast<std::uint64_t>(gset.size());
    for (std::uint64_t p = 2; p <= n; ++p) {
      if (n % p || !is_prime(p)) continue;
      SCOPED_TRACE(p);
      const Subgroup s = sylow_subgroup(g, p);
      const auto sset = elements_of(s.group);
      ASSERT_EQ(sset.size(), oracle::p_part(n, p));
      for (const auto& x : sset) ASSERT_TRUE(gset.count(x));

      const auto nset = oracle::normalizer(gset, sset);
      const Subgroup ng = normalizer(g, s);
      EXPECT_EQ(elements_of(ng.group), nset);
      EXPECT_EQ(ng.order(), BigInt(nset.size()));

      const auto cset = oracle::centralizer(gset, sset);
      EXPECT_EQ(elements_of(centralizer(g, s).group), cset);
      EXPECT_EQ(elements_of(center(s.group).group), oracle::centralizer(sset, sset));

      if (n <= 168)
        EXPECT_EQ(BigInt(oracle::sylow_subgroups(g.degree(), gset, p).size()), g.order() / ng.order());
    }
    for (int i = 0; i < 3; ++i) {
      const Permutation z = g.random_element(rng);
      EXPECT_EQ(is_real(g, z), oracle::is_real(gset, z)) << to_cycle_string(z);
      const auto zset = oracle::closure(g.degree(), {z});
      EXPECT_EQ(elements_of(normal_closure(g, PermGroup(g.degree(), {z})).group),
                oracle::normal_closure(g.degree(), gset, zset));
      EXPECT_EQ(elements_of(centralizer_element(g, z).group), oracle::centralizer(gset, zset));
    }
  }
}

TEST(OracleEquivalence, NormalizerOfRandomSubgroups) {
  std::mt19937_64 rng(11);
  const PermGroup s6 = symmetric(6);
  const auto gset = elements_of(s6);
  for (int i = 0; i < 25; ++i) {
    const PermGroup h(6, {s6.random_element(rng)});
    const auto hset = elements_of(h);
    EXPECT_EQ(elements_of(normalizer(s6, h).group), oracle::normalizer(gset, hset));
    EXPECT_EQ(elements_of(centralizer(s6, h).group), oracle::centralizer(gset, hset));
    const auto x = conjugating_element(s6, h.generators().front(), h.generators().front().inverse());
    ASSERT_TRUE(x);
    EXPECT_EQ(conjugate(h.generators().front(), *x), h.generators().front().inverse());
  }
}

TEST(Sylow, Deterministic) {
  const PermGroup m12 = mathieu(12);
  for (std::uint64_t p : {2, 3, 5, 11}) {
    const auto a = sylow_subgroup(m12, p), b = sylow_subgroup(m12, p);
    EXPECT_EQ(a.generators(), b.generators());
  }
}
