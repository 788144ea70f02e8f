#include "sylow/bigint.hpp"

#include <stdexcept>

namespace sylow {

BigInt p_part(BigInt n, std::uint64_t p) {
  if (n <= 0 || p < 2) throw std::invalid_argument("p_part: need n > 0 and p >= 2");
  BigInt part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

unsigned p_valuation(BigInt n, std::uint64_t p) {
  if (n <= 0 || p < 2) throw std::invalid_argument("p_valuation: need n > 0 and p >= 2");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace sylow
