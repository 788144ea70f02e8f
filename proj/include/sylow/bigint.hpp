#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sylow {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& n) { return n.str(); }

/// Largest power of `p` dividing `n` (n > 0).
BigInt p_part(BigInt n, std::uint64_t p);

/// Exponent of `p` in `n` (n > 0).
unsigned p_valuation(BigInt n, std::uint64_t p);

BigInt factorial(unsigned n);
BigInt ipow(const BigInt& base, unsigned exponent);

}  // namespace sylow
