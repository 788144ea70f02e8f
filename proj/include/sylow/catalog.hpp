#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sylow/perm_group.hpp"

namespace sylow {

/// GF(r^t) with elements indexed 0..q-1: index sum c_i r^i stands for the
/// polynomial sum c_i x^i reduced modulo the smallest monic irreducible
/// polynomial of degree t (coefficients compared as base-r numbers).
class FiniteField {
 public:
  using Elt = std::uint32_t;

  /// Throws std::invalid_argument unless q is a prime power <= 1024.
  explicit FiniteField(std::uint64_t q);

  std::uint64_t q() const { return q_; }
  std::uint64_t characteristic() const { return r_; }
  unsigned degree() const { return t_; }
  /// Coefficients c_0..c_t of the modulus (c_t = 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elt add(Elt a, Elt b) const { return add_[a * q_ + b]; }
  Elt mul(Elt a, Elt b) const {
    return a == 0 || b == 0 ? 0 : exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  Elt neg(Elt a) const { return neg_[a]; }
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  /// Throws std::domain_error for 0.
  Elt inv(Elt a) const;
  Elt pow(Elt a, std::uint64_t e) const;
  /// A generator of the multiplicative group (the smallest index with order q-1).
  Elt primitive() const { return primitive_; }

 private:
  std::uint64_t q_, r_;
  unsigned t_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elt> add_, neg_, exp_, log_;
  Elt primitive_ = 1;
};

PermGroup symmetric(unsigned n);
PermGroup alternating(unsigned n);
PermGroup cyclic(unsigned n);
/// The dihedral group of the given order (2n), acting on n points
/// (the Klein four-group on 4 points when order = 4).
PermGroup dihedral(unsigned order);
/// Acts on the disjoint union: points of b are shifted by degree(a).
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
/// x -> ax + b over GF(q).
PermGroup agl1(std::uint64_t q);

/// Actions on the projective line GF(q) u {inf}; inf is point q.
PermGroup psl2(std::uint64_t q);
PermGroup pgl2(std::uint64_t q);
/// psl2(q) extended by the field automorphism x -> x^(r^(t/k)) of order k.
/// Throws std::invalid_argument unless 1 < k and k | t.
PermGroup psl2_field_extension(std::uint64_t q, unsigned k);

/// PSL(m, q) on the (q^m - 1)/(q - 1) projective points, generated by
/// elementary transvections.
PermGroup psl(unsigned m, std::uint64_t q);

/// Mathieu group M_n, n in {11, 12, 22, 23, 24}.
PermGroup mathieu(unsigned n);

/// Parsed form of the group mini-language:
///
///   spec    := factor { "x" factor }
///   factor  := "S" N | "A" N | "C" N | "D" N | "M" N | "AGL1(" N ")"
///            | "PSL2(" N ")" [ ":" N ] | "PGL2(" N ")" | "PSL" N "(" N ")"
///            | "(" spec ")"
///
/// "D" takes the order of the dihedral group. Whitespace is ignored.
struct GroupSpec {
  enum class Kind { Symmetric, Alternating, Cyclic, Dihedral, Mathieu, Affine, PSL2, PGL2, PSL,
                    Product };
  Kind kind = Kind::Symmetric;
  std::uint64_t n = 0;  // degree / order / q / Mathieu index
  std::uint64_t m = 0;  // PSL dimension, or field-extension degree for PSL2 (0 = none)
  std::vector<GroupSpec> factors;  // Product only

  /// Throws ParseError with the 0-based offset of the offending character.
  static GroupSpec parse(std::string_view text);
  std::string to_string() const;
  PermGroup build() const;
};

inline PermGroup parse_group(std::string_view text) { return GroupSpec::parse(text).build(); }

}  // namespace sylow
