#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sylow/bigint.hpp"

namespace sylow {

bool is_prime(std::uint64_t n);

/// Miller-Rabin with the first 13 prime bases: deterministic below 3.3e24,
/// a strong probable-prime test above.
bool is_prime(const BigInt& n);

/// Whether p is prime and p + 1 is a power of two.
bool is_mersenne_prime(const BigInt& p);

struct Factorization {
  BigInt value;
  std::map<BigInt, unsigned> factors;  // prime -> exponent

  std::vector<std::uint64_t> primes() const;  // throws std::overflow_error past 64 bits
  BigInt p_part(const BigInt& p) const;
};

struct FactorizeOptions {
  std::uint64_t trial_bound = 1'000'000;
  /// Pollard-Brent iterations per attempt before giving up, for cofactors
  /// above 2^127 (arbitrary precision) and below (128-bit Montgomery).
  std::uint64_t rho_iterations = 10'000'000;
  std::uint64_t rho_iterations_128 = 400'000'000;
};

/// Complete factorization of n >= 1: trial division, primality test on the
/// cofactor, then Pollard-Brent. Throws FactorizationLimit (carrying the partial
/// factorization in its message) when a cofactor resists.
Factorization factorize(const BigInt& n, const FactorizeOptions& options = {});

/// Sorted prime divisors.
std::vector<std::uint64_t> prime_divisors(const BigInt& n);

/// Whether r is primitive for (base, n): r | base^n - 1 and r does not divide
/// base^e - 1 for 1 <= e < n.
bool is_primitive_prime(const BigInt& r, const BigInt& base, unsigned n);

/// All primitive primes for (base, n), ascending. They divide the cyclotomic
/// value Phi_n(base), which is what gets factored.
std::vector<BigInt> primitive_primes(const BigInt& base, unsigned n);

/// Smallest primitive prime for (base, n), base >= 2, n >= 2. Absent exactly
/// when n = 2 and base + 1 is a power of two (for prime base: a Mersenne
/// prime), or (base, n) = (2, 6).
std::optional<BigInt> zsigmondy(const BigInt& base, unsigned n);

/// Phi_n(x) evaluated at an integer.
BigInt cyclotomic_value(unsigned n, const BigInt& x);

enum class Sign { Plus, Minus };

inline int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }

/// |E6(q)| (Plus) or |2E6(q)| (Minus) from the product of cyclotomic-type
/// factors over d = gcd(3, q - eps).
BigInt order_E6(const BigInt& q, Sign eps);

/// |PSL(n, q)| (Plus) or |PSU(n, q)| (Minus).
BigInt order_linear(unsigned n, const BigInt& q, Sign eps);

/// |P Omega^eps_{2n}(q)|.
BigInt order_orthogonal_even(unsigned n, const BigInt& q, Sign eps);

enum class Family { A, A2, B, C, D, D2, E6, E6_2, E7, E8, F4, G2, B2_2, D4_3, F4_2, G2_2 };

std::string_view family_name(Family f);  // "A", "2A", "E6", "2E6", ...
std::optional<Family> parse_family(std::string_view name);

/// A simple group of Lie type by root system. `rank` is the rank of the root
/// system; q = r^t.
struct LieTypeSpec {
  Family family;
  unsigned rank;
  std::uint64_t r;
  unsigned t;
  BigInt q;
  Sign eps;

  /// Validates family/rank and r; eps is Minus exactly for 2A, 2D, 2E6.
  static LieTypeSpec make(Family family, unsigned rank, std::uint64_t r, unsigned t);
};

/// Splits q into (r, t) with q = r^t, or throws std::invalid_argument.
std::pair<std::uint64_t, unsigned> prime_power(const BigInt& q);

/// Weyl group order by family. D_n returns 2^n n!, the order of the split
/// extension of an elementary abelian 2^n by S_n; the Weyl group of the root
/// system D_n itself has index 2 in that (2^(n-1) n!). 2D_n returns
/// 2^(n-1) (n-1)!, 2E6 returns 1152 (the F4 Weyl group), E6 returns 51840.
/// Throws std::invalid_argument for twisted families other than 2D and 2E6.
BigInt weyl_order(Family family, unsigned rank);

/// False exactly for untwisted A_l (l > 1), D_l with l odd, and E6.
bool is_fine(const LieTypeSpec& spec);

enum class PartitionKind { Linear, Orthogonal };

/// pi(L) split into primitive primes, the remaining primes, and {r, 2}.
struct SigmaPartition {
  std::set<std::uint64_t> primitive;
  std::set<std::uint64_t> other;
  std::set<std::uint64_t> defining_and_two;
  /// For each primitive prime, the index j of the cyclotomic factor
  /// q^j - eps^j it was taken from.
  std::map<std::uint64_t, unsigned> primitive_index;
  PartitionKind kind;
  std::set<std::uint64_t> all() const;
};

/// L = L_l^eps(q), l > 2 the matrix dimension. Primitive primes are those of
/// (q, j) for l/2 < j <= l; for eps = Minus and odd j, those of (q, 2j).
SigmaPartition sigma_partition_linear(unsigned l, Sign eps, std::uint64_t r, unsigned t);

/// L = P Omega^eps_{4l+2}(q), l >= 1. Primitive primes are those of (q, 2l+1)
/// for Plus and (q, 4l+2) for Minus.
SigmaPartition sigma_partition_orthogonal(unsigned l, Sign eps, std::uint64_t r, unsigned t);

/// Why an arrow is predicted.
enum class Justification {
  RealSemisimple,        // odd prime with a real central element in a Sylow subgroup
  SingerNormalizer,      // primitive prime, cyclic Sylow normalized by an element of order s | j
  DefiningCharacteristic,// Borel subgroup: r -> 2 for odd r
  E6RealTorus,           // s >= 5 dividing q^4-q^2+1, q^2+-q+1, q^2+1 or q^4+1
  E6FiveFrobenius,       // s | (q^5-eps)/(q-eps), s != 5, s not dividing q-eps: s -> 5
  E6FiveToTwo,           // 5 -> 2
  E6ThreeToTwo,          // 3 -> 2
  E6SplitTorus,          // odd p | q^2 - 1: p -> 2
  E6NineFrobenius,       // p | (q^6+eps q^3+1)/(3,q-eps): p -> 3
};

std::string_view justification_tag(Justification j);

struct PredictedArrow {
  std::uint64_t from;
  std::uint64_t to;
  Justification why;

  friend bool operator==(const PredictedArrow&, const PredictedArrow&) = default;
};

/// Arrows guaranteed to lie in the Sylow graph of the simple group `spec`,
/// sorted by (from, to), one per arrow (first justification wins).
/// Supported: A/2A with rank >= 2, D/2D with odd rank >= 3, E6/2E6.
/// The prediction is sound, not complete.
std::vector<PredictedArrow> predicted_edges(const LieTypeSpec& spec);

/// Prime set of the order of the simple group `spec` (supported families only).
std::set<std::uint64_t> lie_prime_set(const LieTypeSpec& spec);

}  // namespace sylow
