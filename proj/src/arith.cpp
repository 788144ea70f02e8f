#include "sylow/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/integer/common_factor.hpp>

#include "sylow/errors.hpp"

namespace sylow {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

constexpr std::array<u64, 13> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

bool fits_u64(const BigInt& n) { return n >= 0 && n <= std::numeric_limits<u64>::max(); }

// Pollard-Brent; returns a nontrivial factor or 0.
BigInt brent(const BigInt& n, u64 c, u64 max_iterations) {
  if (n % 2 == 0) return 2;
  BigInt y = 2, x, ys, g = 1, q = 1;
  const u64 m = 128;
  u64 r = 1, done = 0;
  auto f = [&](const BigInt& v) { return (v * v + c) % n; };
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      const u64 steps = std::min(m, r - k);
      for (u64 i = 0; i < steps; ++i) {
        y = f(y);
        q = q * (x > y ? x - y : y - x) % n;
      }
      g = gcd(q, n);
      k += steps;
      done += steps;
      if (done > max_iterations) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? BigInt(0) : g;
}

// Montgomery arithmetic modulo an odd n < 2^127, R = 2^128.
class Mont128 {
 public:
  explicit Mont128(u128 n) : n_(n) {
    u128 x = n;  // n * n = 1 mod 8
    for (int i = 0; i < 6; ++i) x *= 2 - n * x;
    ninv_ = -x;
    u128 r = (0 - n) % n;  // R mod n
    r2_ = r;
    for (int i = 0; i < 128; ++i) r2_ = (r2_ << 1) >= n ? (r2_ << 1) - n : (r2_ << 1);
  }

  u128 to(u128 a) const { return mul(a % n_, r2_); }

  u128 mul(u128 a, u128 b) const {
    u128 hi, lo;
    wide(a, b, hi, lo);
    const u128 m = lo * ninv_;
    u128 mh, ml;
    wide(m, n_, mh, ml);
    u128 t = hi + mh + (lo != 0 ? 1 : 0);
    (void)ml;
    return t >= n_ ? t - n_ : t;
  }

  u128 modulus() const { return n_; }

 private:
  static void wide(u128 a, u128 b, u128& hi, u128& lo) {
    const u128 mask = ~u64{0};
    const u128 a0 = a & mask, a1 = a >> 64, b0 = b & mask, b1 = b >> 64;
    const u128 p00 = a0 * b0, p01 = a0 * b1, p10 = a1 * b0, p11 = a1 * b1;
    const u128 mid = (p00 >> 64) + (p01 & mask) + (p10 & mask);
    lo = (mid << 64) | (p00 & mask);
    hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  }

  u128 n_, ninv_, r2_;
};

u128 gcd128(u128 a, u128 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

u128 brent128(u128 n, u64 c, u64 max_iterations) {
  const Mont128 mt(n);
  const u128 cm = mt.to(c);
  auto f = [&](u128 v) {
    u128 s = mt.mul(v, v) + cm;
    return s >= n ? s - n : s;
  };
  u128 y = mt.to(2), x = y, ys = y, g = 1, q = mt.to(1);
  const u64 m = 256;
  u64 r = 1, done = 0;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      const u64 steps = std::min(m, r - k);
      for (u64 i = 0; i < steps; ++i) {
        y = f(y);
        q = mt.mul(q, x > y ? x - y : y - x);
      }
      g = gcd128(q, n);
      k += steps;
      done += steps;
      if (done > max_iterations) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd128(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

BigInt find_factor(const BigInt& n, u64 c, const FactorizeOptions& options) {
  static const BigInt limit = BigInt(1) << 127;
  if (n < limit && (n & 1) == 1) {
    u128 v = 0;
    for (unsigned i = 0; i < 128; i += 32) v |= static_cast<u128>(static_cast<std::uint32_t>((n >> i) & 0xffffffffu)) << i;
    const u128 d = brent128(v, c, options.rho_iterations_128);
    BigInt out = 0;
    for (unsigned i = 0; i < 128; i += 32) out |= BigInt(static_cast<std::uint32_t>(d >> i)) << i;
    return out;
  }
  return brent(n, c, options.rho_iterations);
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out, const FactorizeOptions& options,
           const Factorization& partial) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (u64 c = 1; c <= 8; ++c) {
    BigInt d = find_factor(n, c, options);
    if (d != 0 && d != 1 && d != n) {
      split(d, out, options, partial);
      split(n / d, out, options, partial);
      return;
    }
  }
  std::ostringstream msg;
  msg << "factorize: cofactor " << n << " of " << partial.value << " resisted factoring; partial:";
  for (const auto& [p, e] : out) msg << ' ' << p << '^' << e;
  throw FactorizationLimit(msg.str());
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> d;
  for (unsigned i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

int mobius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

// Prime divisors of q^i - eps^i via the cyclotomic factors.
std::set<u64> primes_of_power_minus(const BigInt& q, unsigned i, Sign eps) {
  std::set<u64> out;
  if (eps == Sign::Plus || i % 2 == 0) {
    for (unsigned d : divisors(i))
      if (d > 1 || q > 2)
        for (u64 p : prime_divisors(cyclotomic_value(d, q))) out.insert(p);
  } else {
    // q^i + 1 = prod of Phi_d(q) over d | 2i, d not dividing i
    for (unsigned d : divisors(2 * i))
      if (i % d != 0)
        for (u64 p : prime_divisors(cyclotomic_value(d, q))) out.insert(p);
  }
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s && composite; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime(static_cast<u64>(n));
  for (u64 p : kBases)
    if (n % p == 0) return false;
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s && composite; ++i) {
      x = x * x % n;
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

bool is_mersenne_prime(const BigInt& p) {
  if (!is_prime(p)) return false;
  BigInt m = p + 1;
  return (m & (m - 1)) == 0;
}

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<u64> out;
  for (const auto& [p, e] : factors) {
    if (!fits_u64(p)) throw std::overflow_error("prime " + p.str() + " exceeds 64 bits");
    out.push_back(static_cast<u64>(p));
  }
  return out;
}

BigInt Factorization::p_part(const BigInt& p) const {
  auto it = factors.find(p);
  return it == factors.end() ? BigInt(1) : ipow(p, it->second);
}

Factorization factorize(const BigInt& n, const FactorizeOptions& options) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization f{n, {}};
  BigInt m = n;
  auto strip = [&](u64 p) {
    while (m % p == 0) {
      m /= p;
      ++f.factors[p];
    }
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel
  for (u64 p = 5; p <= options.trial_bound && BigInt(p) * p <= m; p += 6) {
    strip(p);
    strip(p + 2);
  }
  split(m, f.factors, options, f);
  return f;
}

std::vector<std::uint64_t> prime_divisors(const BigInt& n) { return factorize(n).primes(); }

bool is_primitive_prime(const BigInt& r, const BigInt& base, unsigned n) {
  if (!is_prime(r) || n < 1) return false;
  using boost::multiprecision::powm;
  if (powm(base, BigInt(n), r) != 1) return false;
  for (unsigned e = 1; e < n; ++e)
    if (powm(base, BigInt(e), r) == 1) return false;
  return true;
}

BigInt cyclotomic_value(unsigned n, const BigInt& x) {
  if (n == 0) throw std::invalid_argument("cyclotomic_value: n must be positive");
  BigInt num = 1, den = 1;
  for (unsigned d : divisors(n)) {
    int mu = mobius(n / d);
    if (mu == 1) num *= ipow(x, d) - 1;
    if (mu == -1) den *= ipow(x, d) - 1;
  }
  return num / den;
}

std::vector<BigInt> primitive_primes(const BigInt& base, unsigned n) {
  if (base < 2 || n < 1) throw std::invalid_argument("primitive_primes: need base >= 2, n >= 1");
  std::vector<BigInt> out;
  const Factorization f = factorize(cyclotomic_value(n, base));
  for (const auto& [r, e] : f.factors)
    if (is_primitive_prime(r, base, n)) out.push_back(r);
  return out;
}

std::optional<BigInt> zsigmondy(const BigInt& base, unsigned n) {
  if (base < 2 || n < 2) throw std::invalid_argument("zsigmondy: need base >= 2, n >= 2");
  // Primitive primes are 1 mod n, so scan those candidates first; only when the
  // scan comes up empty is the cyclotomic value factored.
  constexpr u64 kScanBound = 1 << 16;
  if (fits_u64(base)) {
    const u64 b = static_cast<u64>(base);
    for (u64 r = n + 1; r <= kScanBound; r += n)
      if (b % r != 0 && powmod(b, n, r) == 1 && is_prime(r) && is_primitive_prime(r, base, n))
        return BigInt(r);
  }
  BigInt m = cyclotomic_value(n, base);
  if (fits_u64(base))
    for (u64 r = 2; r <= kScanBound && r * r <= m; ++r)
      while (m % r == 0) m /= r;
  std::vector<BigInt> primes;
  for (const auto& [r, e] : factorize(m).factors)
    if (is_primitive_prime(r, base, n)) primes.push_back(r);
  if (primes.empty()) return std::nullopt;
  return primes.front();
}

BigInt order_E6(const BigInt& q, Sign eps) {
  const int e = sign_value(eps);
  const BigInt d = gcd(BigInt(3), q - e);
  const BigInt q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
  BigInt n = ipow(q, 36);
  n *= ipow(q - e, 6);
  n *= ipow(q + e, 4);
  n *= ipow(q2 - e * q + 1, 2);
  n *= ipow(q2 + e * q + 1, 3);
  n *= ipow(q2 + 1, 2);
  n *= q4 - q2 + 1;
  n *= q4 + 1;
  n *= (q4 * q - e) / (q - e);
  n *= q4 * q2 + e * q3 + 1;
  return n / d;
}

BigInt order_linear(unsigned n, const BigInt& q, Sign eps) {
  if (n < 2) throw std::invalid_argument("order_linear: n must be >= 2");
  const int e = sign_value(eps);
  BigInt order = ipow(q, n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i) order *= ipow(q, i) - (i % 2 ? e : 1);
  return order / gcd(BigInt(n), q - e);
}

BigInt order_orthogonal_even(unsigned n, const BigInt& q, Sign eps) {
  if (n < 2) throw std::invalid_argument("order_orthogonal_even: n must be >= 2");
  const int e = sign_value(eps);
  BigInt order = ipow(q, n * (n - 1)) * (ipow(q, n) - e);
  for (unsigned i = 1; i < n; ++i) order *= ipow(q, 2 * i) - 1;
  return order / gcd(BigInt(4), ipow(q, n) - e);
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 16> kFamilyNames{{
    {Family::A, "A"},     {Family::A2, "2A"},   {Family::B, "B"},      {Family::C, "C"},
    {Family::D, "D"},     {Family::D2, "2D"},   {Family::E6, "E6"},    {Family::E6_2, "2E6"},
    {Family::E7, "E7"},   {Family::E8, "E8"},   {Family::F4, "F4"},    {Family::G2, "G2"},
    {Family::B2_2, "2B2"}, {Family::D4_3, "3D4"}, {Family::F4_2, "2F4"}, {Family::G2_2, "2G2"},
}};

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames)
    if (n == name) return fam;
  return std::nullopt;
}

std::pair<std::uint64_t, unsigned> prime_power(const BigInt& q) {
  if (q < 2) throw std::invalid_argument("not a prime power: " + q.str());
  const auto f = factorize(q);
  if (f.factors.size() != 1) throw std::invalid_argument("not a prime power: " + q.str());
  return {f.primes().front(), f.factors.begin()->second};
}

LieTypeSpec LieTypeSpec::make(Family family, unsigned rank, std::uint64_t r, unsigned t) {
  if (!is_prime(r)) throw std::invalid_argument("characteristic must be prime");
  if (t < 1) throw std::invalid_argument("exponent t must be >= 1");
  auto need = [&](bool ok) {
    if (!ok)
      throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for family " +
                                  std::string(family_name(family)));
  };
  switch (family) {
    case Family::A: need(rank >= 1); break;
    case Family::A2: need(rank >= 2); break;
    case Family::B: need(rank >= 2); break;
    case Family::C: need(rank >= 2); break;
    case Family::D:
    case Family::D2: need(rank >= 3); break;
    case Family::E6:
    case Family::E6_2: need(rank == 6); break;
    case Family::E7: need(rank == 7); break;
    case Family::E8: need(rank == 8); break;
    case Family::F4: need(rank == 4); break;
    case Family::G2: need(rank == 2); break;
    case Family::B2_2:
      need(rank == 2);
      if (r != 2 || t % 2 == 0) throw std::invalid_argument("2B2 needs q = 2^(2m+1)");
      break;
    case Family::D4_3: need(rank == 4); break;
    case Family::F4_2:
      need(rank == 4);
      if (r != 2 || t % 2 == 0) throw std::invalid_argument("2F4 needs q = 2^(2m+1)");
      break;
    case Family::G2_2:
      need(rank == 2);
      if (r != 3 || t % 2 == 0) throw std::invalid_argument("2G2 needs q = 3^(2m+1)");
      break;
  }
  const bool twisted = family == Family::A2 || family == Family::D2 || family == Family::E6_2;
  return LieTypeSpec{family, rank, r, t, ipow(BigInt(r), t), twisted ? Sign::Minus : Sign::Plus};
}

BigInt weyl_order(Family family, unsigned rank) {
  const BigInt two = 2;
  switch (family) {
    case Family::A: return factorial(rank + 1);
    case Family::B:
    case Family::C: return ipow(two, rank) * factorial(rank);
    case Family::D: return ipow(two, rank) * factorial(rank);
    case Family::D2:
      if (rank < 2) break;
      return ipow(two, rank - 1) * factorial(rank - 1);
    case Family::E6: return 51840;
    case Family::E6_2: return 1152;
    case Family::E7: return 2903040;
    case Family::E8: return 696729600;
    case Family::F4: return 1152;
    case Family::G2: return 12;
    default: break;
  }
  throw std::invalid_argument("weyl_order: unsupported family " + std::string(family_name(family)));
}

bool is_fine(const LieTypeSpec& spec) {
  switch (spec.family) {
    case Family::A: return spec.rank <= 1;
    case Family::D: return spec.rank % 2 == 0;
    case Family::E6: return false;
    default: return true;
  }
}

std::set<std::uint64_t> SigmaPartition::all() const {
  std::set<u64> out(primitive.begin(), primitive.end());
  out.insert(other.begin(), other.end());
  out.insert(defining_and_two.begin(), defining_and_two.end());
  return out;
}

namespace {

SigmaPartition finish_partition(SigmaPartition part, std::set<u64> pi, u64 r) {
  for (u64 p : pi) {
    if (p == r || p == 2)
      part.defining_and_two.insert(p);
    else if (!part.primitive.count(p))
      part.other.insert(p);
  }
  return part;
}

void add_primitive(SigmaPartition& part, const BigInt& q, unsigned n, unsigned index) {
  for (const BigInt& p : primitive_primes(q, n)) {
    const u64 v = static_cast<u64>(p);
    part.primitive.insert(v);
    part.primitive_index.emplace(v, index);
  }
}

std::set<u64> linear_primes(unsigned l, Sign eps, u64 r, const BigInt& q) {
  std::set<u64> pi{r};
  for (unsigned i = 2; i <= l; ++i) pi.merge(primes_of_power_minus(q, i, eps));
  return pi;
}

std::set<u64> orthogonal_primes(unsigned n, Sign eps, u64 r, const BigInt& q) {
  std::set<u64> pi{r};
  pi.merge(primes_of_power_minus(q, n, eps));
  for (unsigned i = 1; i < n; ++i) pi.merge(primes_of_power_minus(q, 2 * i, Sign::Plus));
  return pi;
}

std::set<u64> e6_primes(Sign eps, u64 r, const BigInt& q) {
  // |E6^eps(q)| = q^36 prod over i in {2,5,6,8,9,12} of (q^i - eps^i), up to d
  std::set<u64> pi{r};
  for (unsigned i : {2u, 5u, 6u, 8u, 9u, 12u}) pi.merge(primes_of_power_minus(q, i, eps));
  return pi;
}

}  // namespace

SigmaPartition sigma_partition_linear(unsigned l, Sign eps, std::uint64_t r, unsigned t) {
  if (l <= 2) throw std::invalid_argument("sigma_partition_linear: need l > 2");
  if (!is_prime(r) || t < 1) throw std::invalid_argument("sigma_partition_linear: bad q");
  const BigInt q = ipow(BigInt(r), t);
  SigmaPartition part;
  part.kind = PartitionKind::Linear;
  for (unsigned j = l / 2 + 1; j <= l; ++j) {
    const bool doubled = eps == Sign::Minus && j % 2 == 1;
    add_primitive(part, q, doubled ? 2 * j : j, j);
  }
  return finish_partition(std::move(part), linear_primes(l, eps, r, q), r);
}

SigmaPartition sigma_partition_orthogonal(unsigned l, Sign eps, std::uint64_t r, unsigned t) {
  if (l < 1) throw std::invalid_argument("sigma_partition_orthogonal: need l >= 1");
  if (!is_prime(r) || t < 1) throw std::invalid_argument("sigma_partition_orthogonal: bad q");
  const BigInt q = ipow(BigInt(r), t);
  SigmaPartition part;
  part.kind = PartitionKind::Orthogonal;
  add_primitive(part, q, eps == Sign::Plus ? 2 * l + 1 : 4 * l + 2, 2 * l + 1);
  return finish_partition(std::move(part), orthogonal_primes(2 * l + 1, eps, r, q), r);
}

std::string_view justification_tag(Justification j) {
  switch (j) {
    case Justification::RealSemisimple: return "real-semisimple";
    case Justification::SingerNormalizer: return "singer-normalizer";
    case Justification::DefiningCharacteristic: return "borel";
    case Justification::E6RealTorus: return "e6-real-torus";
    case Justification::E6FiveFrobenius: return "e6-frobenius-5";
    case Justification::E6FiveToTwo: return "e6-five-to-two";
    case Justification::E6ThreeToTwo: return "e6-three-to-two";
    case Justification::E6SplitTorus: return "e6-split-torus";
    case Justification::E6NineFrobenius: return "e6-frobenius-9";
  }
  return "?";
}

namespace {

std::vector<PredictedArrow> sigma_arrows(const SigmaPartition& part, u64 r) {
  std::vector<PredictedArrow> out;
  const auto pi = part.all();
  for (u64 p : part.other)
    if (p % 2) out.push_back({p, 2, Justification::RealSemisimple});
  for (const auto& [p, j] : part.primitive_index)
    for (u64 s : prime_divisors(j))
      if (s != p && pi.count(s)) out.push_back({p, s, Justification::SingerNormalizer});
  if (r != 2) out.push_back({r, 2, Justification::DefiningCharacteristic});
  return out;
}

std::vector<PredictedArrow> e6_arrows(const LieTypeSpec& spec) {
  const BigInt& q = spec.q;
  const int e = sign_value(spec.eps);
  const BigInt q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
  std::vector<PredictedArrow> out;
  auto primes_of = [](const BigInt& n) { return prime_divisors(n); };

  for (const BigInt& n : {BigInt(q4 - q2 + 1), BigInt(q2 + q + 1), BigInt(q2 - q + 1),
                          BigInt(q2 + 1), BigInt(q4 + 1)})
    for (u64 s : primes_of(n))
      if (s >= 5) out.push_back({s, 2, Justification::E6RealTorus});

  const BigInt five_factor = (q4 * q - e) / (q - e);
  for (u64 s : primes_of(five_factor))
    if (s != 5 && (q - e) % s != 0) out.push_back({s, 5, Justification::E6FiveFrobenius});

  out.push_back({5, 2, Justification::E6FiveToTwo});
  if (spec.r != 2) out.push_back({spec.r, 2, Justification::DefiningCharacteristic});
  out.push_back({3, 2, Justification::E6ThreeToTwo});

  for (u64 p : primes_of(q2 - 1))
    if (p != 2) out.push_back({p, 2, Justification::E6SplitTorus});
  const BigInt nine_factor = (q4 * q2 + e * q3 + 1) / gcd(BigInt(3), q - e);
  for (u64 p : primes_of(nine_factor))
    if (p != 3) out.push_back({p, 3, Justification::E6NineFrobenius});
  return out;
}

}  // namespace

std::set<std::uint64_t> lie_prime_set(const LieTypeSpec& spec) {
  switch (spec.family) {
    case Family::A:
    case Family::A2: return linear_primes(spec.rank + 1, spec.eps, spec.r, spec.q);
    case Family::D:
    case Family::D2: return orthogonal_primes(spec.rank, spec.eps, spec.r, spec.q);
    case Family::E6:
    case Family::E6_2: return e6_primes(spec.eps, spec.r, spec.q);
    default:
      throw std::invalid_argument("lie_prime_set: unsupported family " +
                                  std::string(family_name(spec.family)));
  }
}

std::vector<PredictedArrow> predicted_edges(const LieTypeSpec& spec) {
  std::vector<PredictedArrow> raw;
  switch (spec.family) {
    case Family::A:
    case Family::A2:
      if (spec.rank < 2) throw std::invalid_argument("predicted_edges: linear groups need rank >= 2");
      raw = sigma_arrows(sigma_partition_linear(spec.rank + 1, spec.eps, spec.r, spec.t), spec.r);
      break;
    case Family::D:
    case Family::D2:
      if (spec.rank % 2 == 0)
        throw std::invalid_argument("predicted_edges: orthogonal groups need odd rank");
      raw = sigma_arrows(sigma_partition_orthogonal((spec.rank - 1) / 2, spec.eps, spec.r, spec.t),
                         spec.r);
      break;
    case Family::E6:
    case Family::E6_2: raw = e6_arrows(spec); break;
    default:
      throw std::invalid_argument("predicted_edges: unsupported family " +
                                  std::string(family_name(spec.family)));
  }
  // The order always contains these primes, but guard against degenerate input.
  const auto pi = lie_prime_set(spec);
  std::vector<PredictedArrow> out;
  for (const auto& a : raw) {
    if (a.from == a.to || !pi.count(a.from) || !pi.count(a.to)) continue;
    auto same = [&](const PredictedArrow& b) { return b.from == a.from && b.to == a.to; };
    if (std::none_of(out.begin(), out.end(), same)) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(a.from, a.to) < std::pair(b.from, b.to);
  });
  return out;
}

}  // namespace sylow
