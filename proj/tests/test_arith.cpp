#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "sylow/arith.hpp"
#include "sylow/errors.hpp"
#include "sylow/perm_group.hpp"

using namespace sylow;

namespace {

using u64 = std::uint64_t;

bool trial_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::map<BigInt, unsigned> trial_factor(BigInt n) {
  std::map<BigInt, unsigned> out;
  for (u64 d = 2; BigInt(d) * d <= n; ++d)
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  if (n > 1) ++out[n];
  return out;
}

BigInt power(const BigInt& b, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

u64 powmod(u64 b, u64 e, u64 m) {
  unsigned __int128 r = 1 % m, x = b % m;
  for (; e; e >>= 1, x = x * x % m)
    if (e & 1) r = r * x % m;
  return static_cast<u64>(r);
}

// r | b^n - 1 and r does not divide b^e - 1 for e < n, straight from the definition.
bool primitive_by_definition(u64 r, u64 b, unsigned n) {
  if (powmod(b, n, r) != 1) return false;
  for (unsigned e = 1; e < n; ++e)
    if (powmod(b, e, r) == 1) return false;
  return true;
}

// |E6^eps(q)| = q^36 prod_{i in {2,5,6,8,9,12}} (q^i - eps^i) / gcd(3, q - eps).
BigInt e6_degree_product(u64 q, int eps) {
  BigInt n = power(q, 36);
  for (unsigned i : {2u, 5u, 6u, 8u, 9u, 12u}) n *= power(q, i) - (i % 2 && eps < 0 ? -1 : 1);
  const long long d = std::gcd(3LL, static_cast<long long>(q) - eps);
  return n / d;
}

std::set<u64> primes_of(const BigInt& n) {
  std::set<u64> out;
  for (const auto& [p, e] : trial_factor(n)) out.insert(static_cast<u64>(p));
  return out;
}

// PSp4(3) on the 40 points of PG(3,3), generated by the symplectic transvections.
PermGroup psp4_3() {
  using V = std::array<int, 4>;
  std::vector<V> points;
  for (int a = 0; a < 81; ++a) {
    V v{a % 3, a / 3 % 3, a / 9 % 3, a / 27};
    auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (lead != v.end() && *lead == 1) points.push_back(v);
  }
  auto normalize = [](V v) {
    auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (*lead == 2)
      for (int& x : v) x = x * 2 % 3;
    return v;
  };
  auto form = [](const V& x, const V& y) { return ((x[0] * y[2] + x[1] * y[3] - x[2] * y[0] - x[3] * y[1]) % 3 + 3) % 3; };
  std::vector<Permutation> gens;
  for (const V& v : points) {
    std::vector<Point> images;
    for (const V& x : points) {
      V y;
      const int c = form(x, v);
      for (int i = 0; i < 4; ++i) y[i] = (x[i] + c * v[i]) % 3;
      images.push_back(static_cast<Point>(std::find(points.begin(), points.end(), normalize(y)) - points.begin()));
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(points.size(), std::move(gens));
}

}  // namespace

TEST(Factorize, KnownValues) {
  const auto f60 = factorize(60);
  EXPECT_EQ(f60.factors, (std::map<BigInt, unsigned>{{2, 2}, {3, 1}, {5, 1}}));
  EXPECT_TRUE(factorize(1).factors.empty());
  const auto m23 = factorize(10200960);
  EXPECT_EQ(m23.factors, trial_factor(10200960));
  EXPECT_EQ(m23.factors, (std::map<BigInt, unsigned>{{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}));
}

TEST(Factorize, AgreesWithTrialDivision) {
  for (u64 n = 1; n < 20000; n += 7) EXPECT_EQ(factorize(n).factors, trial_factor(n)) << n;
  for (u64 n : {999999000001ULL, 600851475143ULL, 1000003ULL * 1000033ULL * 4294967291ULL})
    EXPECT_EQ(factorize(n).factors, trial_factor(n)) << n;
}

TEST(Factorize, LargeSemiprimes) {
  // Products of two primes far above the trial-division bound.
  const BigInt p("10000000019"), q("10000000033"), r("340282366920938463463374607431768211507");
  EXPECT_EQ(factorize(p * q).factors, (std::map<BigInt, unsigned>{{p, 1}, {q, 1}}));
  EXPECT_EQ(factorize(p * r).factors, (std::map<BigInt, unsigned>{{p, 1}, {r, 1}}));
}

TEST(Factorize, ReportsLimit) {
  FactorizeOptions tight;
  tight.trial_bound = 100;
  tight.rho_iterations = 10;
  tight.rho_iterations_128 = 10;
  const BigInt n = BigInt("10000000019") * BigInt("10000000033") * 4;
  EXPECT_THROW(factorize(n, tight), FactorizationLimit);
}

TEST(Primality, MatchesTrialDivision) {
  for (u64 n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), trial_prime(n)) << n;
  EXPECT_FALSE(is_prime(u64{3215031751}));  // strong pseudoprime to 2, 3, 5, 7
  EXPECT_TRUE(is_mersenne_prime(BigInt(31)));
  EXPECT_FALSE(is_mersenne_prime(BigInt(15)));
  EXPECT_FALSE(is_mersenne_prime(BigInt(5)));
}

TEST(Zsigmondy, KnownValues) {
  EXPECT_FALSE(zsigmondy(2, 6));
  EXPECT_FALSE(zsigmondy(3, 2));
  EXPECT_EQ(zsigmondy(2, 4), 5);
  EXPECT_EQ(zsigmondy(2, 3), 7);
  EXPECT_THROW(zsigmondy(1, 3), std::invalid_argument);
}

// Exhaustive over 2 <= p <= 50 prime, 2 <= n <= 30: present exactly off the
// exceptional set, r = 1 mod n, primitive by definition, and no smaller prime
// below 10^6 is primitive.
TEST(Zsigmondy, ExhaustiveProperty) {
  constexpr u64 kBound = 1'000'000;
  std::vector<bool> composite(kBound, false);
  std::vector<u64> small_primes;
  for (u64 i = 2; i < kBound; ++i) {
    if (composite[i]) continue;
    small_primes.push_back(i);
    for (u64 j = i * i; j < kBound; j += i) composite[j] = true;
  }
  for (u64 p = 2; p <= 50; ++p) {
    if (!trial_prime(p)) continue;
    const bool mersenne = ((p + 1) & p) == 0;
    for (unsigned n = 2; n <= 30; ++n) {
      SCOPED_TRACE(std::to_string(p) + "," + std::to_string(n));
      const bool exception = (n == 2 && mersenne) || (p == 2 && n == 6);
      const auto r = zsigmondy(p, n);
      ASSERT_EQ(r.has_value(), !exception);
      if (!r) continue;
      EXPECT_EQ(*r % n, 1);
      EXPECT_TRUE(is_prime(*r));
      for (unsigned e = 1; e < n; ++e) EXPECT_NE(boost::multiprecision::powm(BigInt(p), e, *r), 1);
      EXPECT_EQ(boost::multiprecision::powm(BigInt(p), n, *r), 1);
      const u64 bound = *r < kBound ? static_cast<u64>(*r) : kBound;
      for (u64 s : small_primes) {
        if (s >= bound) break;
        if (primitive_by_definition(s, p, n)) ADD_FAILURE() << "smaller primitive prime " << s;
      }
      if (*r < kBound) EXPECT_TRUE(primitive_by_definition(static_cast<u64>(*r), p, n));
    }
  }
}

TEST(Zsigmondy, CompositeBase) {
  EXPECT_FALSE(zsigmondy(7, 2));  // 7 + 1 = 8
  EXPECT_EQ(zsigmondy(4, 3), 7);
  EXPECT_EQ(zsigmondy(9, 2), 5);
  for (u64 q : {4u, 8u, 9u, 25u, 27u})
    for (unsigned n = 2; n <= 12; ++n) {
      const auto r = zsigmondy(q, n);
      if (!r) continue;
      EXPECT_TRUE(primitive_by_definition(static_cast<u64>(*r), q, n)) << q << "," << n;
    }
}

TEST(PrimitivePrimes, DefinitionOracle) {
  for (u64 b : {2u, 3u, 5u, 7u})
    for (unsigned n = 1; n <= 16; ++n) {
      std::set<u64> expected;
      for (const auto& p : primes_of(power(b, n) - 1))
        if (primitive_by_definition(p, b, n)) expected.insert(p);
      std::set<u64> got;
      for (const auto& r : primitive_primes(b, n)) got.insert(static_cast<u64>(r));
      EXPECT_EQ(got, expected) << b << "," << n;
    }
}

TEST(Cyclotomic, ProductOverDivisors) {
  for (u64 x : {2u, 3u, 10u})
    for (unsigned n = 1; n <= 24; ++n) {
      BigInt prod = 1;
      for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) prod *= cyclotomic_value(d, x);
      EXPECT_EQ(prod, power(x, n) - 1) << x << "," << n;
    }
}

TEST(OrderE6, DegreeProductOracle) {
  std::set<long long> d_seen;
  for (u64 q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
    for (int eps : {1, -1}) {
      d_seen.insert(std::gcd(3LL, static_cast<long long>(q) - eps));
      EXPECT_EQ(order_E6(q, eps > 0 ? Sign::Plus : Sign::Minus), e6_degree_product(q, eps)) << q << "," << eps;
    }
  EXPECT_EQ(d_seen, (std::set<long long>{1, 3}));
  EXPECT_EQ(order_E6(2, Sign::Plus),
            power(2, 36) * 3 * 31 * 63 * 255 * 511 * 4095);
}

TEST(OrderClassical, KnownSmallGroups) {
  EXPECT_EQ(order_linear(2, 7, Sign::Plus), 168);
  EXPECT_EQ(order_linear(4, 2, Sign::Plus), 20160);
  EXPECT_EQ(order_linear(3, 3, Sign::Plus), 5616);
  EXPECT_EQ(order_linear(3, 3, Sign::Minus), 6048);   // U3(3)
  EXPECT_EQ(order_linear(4, 2, Sign::Minus), 25920);  // U4(2)
  EXPECT_EQ(order_orthogonal_even(3, 2, Sign::Plus), 20160);   // O6+(2) = L4(2)
  EXPECT_EQ(order_orthogonal_even(3, 2, Sign::Minus), 25920);  // O6-(2) = U4(2)
}

TEST(Weyl, KnownValues) {
  EXPECT_EQ(weyl_order(Family::A, 4), 120);
  EXPECT_EQ(weyl_order(Family::E6_2, 6), 1152);
  const PermGroup psp = psp4_3();
  EXPECT_EQ(psp.order(), 25920);
  EXPECT_EQ(weyl_order(Family::E6, 6), 2 * psp.order());
  EXPECT_EQ(weyl_order(Family::D, 3), 8 * 6);
  EXPECT_THROW(weyl_order(Family::G2_2, 2), std::invalid_argument);
}

TEST(Fine, KnownValues) {
  EXPECT_TRUE(is_fine(LieTypeSpec::make(Family::A, 1, 5, 1)));
  EXPECT_FALSE(is_fine(LieTypeSpec::make(Family::A, 2, 5, 1)));
  EXPECT_FALSE(is_fine(LieTypeSpec::make(Family::E6, 6, 2, 1)));
  EXPECT_TRUE(is_fine(LieTypeSpec::make(Family::D, 4, 3, 1)));
  EXPECT_FALSE(is_fine(LieTypeSpec::make(Family::D, 5, 3, 1)));
  EXPECT_TRUE(is_fine(LieTypeSpec::make(Family::B, 3, 3, 1)));
  EXPECT_THROW(LieTypeSpec::make(Family::E6, 5, 2, 1), std::invalid_argument);
  EXPECT_THROW(LieTypeSpec::make(Family::A, 2, 4, 1), std::invalid_argument);
  EXPECT_EQ(LieTypeSpec::make(Family::D2, 3, 2, 1).eps, Sign::Minus);
}

TEST(SigmaPartition, LinearFourTwo) {
  const auto s = sigma_partition_linear(4, Sign::Plus, 2, 1);
  EXPECT_EQ(s.primitive, (std::set<u64>{5, 7}));
  EXPECT_EQ(s.primitive_index.at(7), 3u);
  EXPECT_EQ(s.primitive_index.at(5), 4u);
  EXPECT_EQ(s.other, (std::set<u64>{3}));
  EXPECT_EQ(s.defining_and_two, (std::set<u64>{2}));
}

// For l = 3 the admissible j with j <= l < 2j are 2 and 3, and 3 is primitive
// for (2, 2), so both odd primes of L3(2) land in the primitive block.
TEST(SigmaPartition, LinearThreeTwo) {
  const auto s = sigma_partition_linear(3, Sign::Plus, 2, 1);
  EXPECT_EQ(s.primitive, (std::set<u64>{3, 7}));
  EXPECT_TRUE(s.other.empty());
  EXPECT_EQ(s.defining_and_two, (std::set<u64>{2}));
}

TEST(SigmaPartition, Orthogonal) {
  EXPECT_EQ(sigma_partition_orthogonal(1, Sign::Plus, 2, 1).primitive, (std::set<u64>{7}));
  EXPECT_TRUE(sigma_partition_orthogonal(1, Sign::Minus, 2, 1).primitive.empty());
  EXPECT_EQ(sigma_partition_orthogonal(1, Sign::Minus, 3, 1).defining_and_two, (std::set<u64>{2, 3}));
}

// Blocks are disjoint, cover the prime set of the order, and primitive
// membership matches the definition.
TEST(SigmaPartition, BlocksAgainstOracle) {
  for (unsigned l = 3; l <= 6; ++l)
    for (u64 q : {2u, 3u, 4u, 5u, 7u})
      for (Sign eps : {Sign::Plus, Sign::Minus}) {
        const auto [r, t] = prime_power(q);
        const auto s = sigma_partition_linear(l, eps, r, t);
        const auto order_primes = primes_of(order_linear(l, q, eps));
        EXPECT_EQ(s.all(), order_primes) << l << "," << q;
        EXPECT_EQ(s.primitive.size() + s.other.size() + s.defining_and_two.size(), order_primes.size());
        EXPECT_EQ(s.defining_and_two, (std::set<u64>{2, r}));
        for (u64 p : order_primes) {
          if (p == 2 || p == r) continue;
          bool expected = false;
          for (unsigned j = l / 2 + 1; j <= l; ++j) {
            const unsigned k = eps == Sign::Minus && j % 2 ? 2 * j : j;
            expected = expected || primitive_by_definition(p, q, k);
          }
          EXPECT_EQ(s.primitive.count(p) > 0, expected) << l << "," << q << "," << p;
        }
      }
  for (unsigned l = 1; l <= 2; ++l)
    for (u64 q : {2u, 3u, 4u})
      for (Sign eps : {Sign::Plus, Sign::Minus}) {
        const auto [r, t] = prime_power(q);
        const auto s = sigma_partition_orthogonal(l, eps, r, t);
        EXPECT_EQ(s.all(), primes_of(order_orthogonal_even(2 * l + 1, q, eps)));
        for (u64 p : s.primitive)
          EXPECT_TRUE(primitive_by_definition(p, q, eps == Sign::Plus ? 2 * l + 1 : 4 * l + 2));
      }
}

TEST(Predict, LinearFourTwo) {
  const auto edges = predicted_edges(LieTypeSpec::make(Family::A, 3, 2, 1));
  std::set<std::pair<u64, u64>> arrows;
  for (const auto& a : edges) arrows.emplace(a.from, a.to);
  for (auto a : {std::pair<u64, u64>{3, 2}, {5, 2}, {7, 3}}) EXPECT_TRUE(arrows.count(a));
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::pair(a.from, a.to) < std::pair(b.from, b.to);
  }));
}

TEST(Predict, E6) {
  for (u64 q : {2u, 3u, 4u, 5u}) {
    const auto [r, t] = prime_power(q);
    for (Family f : {Family::E6, Family::E6_2}) {
      const auto spec = LieTypeSpec::make(f, 6, r, t);
      std::set<std::pair<u64, u64>> arrows;
      for (const auto& a : predicted_edges(spec)) arrows.emplace(a.from, a.to);
      EXPECT_TRUE(arrows.count({3, 2})) << q;
      // every prime s >= 5 of q^4 + 1 points to 2
      for (u64 s : primes_of(power(q, 4) + 1))
        if (s >= 5) EXPECT_TRUE(arrows.count({s, 2})) << q << " " << s;
      const auto pi = lie_prime_set(spec);
      EXPECT_EQ(pi, primes_of(order_E6(q, spec.eps)));
      for (const auto& [a, b] : arrows) EXPECT_TRUE(pi.count(a) && pi.count(b));
    }
  }
  std::set<std::pair<u64, u64>> q4;
  for (const auto& a : predicted_edges(LieTypeSpec::make(Family::E6, 6, 2, 2))) q4.emplace(a.from, a.to);
  EXPECT_TRUE(q4.count({5, 2}));
}

TEST(Predict, RejectsUnsupported) {
  EXPECT_THROW(predicted_edges(LieTypeSpec::make(Family::B, 3, 3, 1)), std::invalid_argument);
  EXPECT_THROW(predicted_edges(LieTypeSpec::make(Family::D, 4, 3, 1)), std::invalid_argument);
}

TEST(PrimePower, Splits) {
  EXPECT_EQ(prime_power(27), (std::pair<u64, unsigned>{3, 3}));
  EXPECT_EQ(prime_power(7), (std::pair<u64, unsigned>{7, 1}));
  EXPECT_THROW(prime_power(12), std::invalid_argument);
  EXPECT_THROW(prime_power(1), std::invalid_argument);
}

TEST(Family, Names) {
  for (Family f : {Family::A, Family::A2, Family::D2, Family::E6, Family::E6_2, Family::G2_2})
    EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_FALSE(parse_family("Q"));
}
