#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sylow/bigint.hpp"
#include "sylow/perm_group.hpp"

namespace sylow {

/// A Sylow p-subgroup of `g`; the trivial subgroup when p does not divide |g|.
///
/// Starts from the p-part of the element with the largest p-power order among
/// a fixed-seed sample, then repeatedly adjoins an element y of N_G(P) \ P with
/// y^p in P until the full p-part of |g| is reached.
/// Throws std::invalid_argument if p is not prime.
Subgroup sylow_subgroup(const PermGroup& g, std::uint64_t p);

/// N_G(H) by a pruned walk of the element tree of `g`.
Subgroup normalizer(const PermGroup& g, const PermGroup& h);
inline Subgroup normalizer(const PermGroup& g, const Subgroup& h) { return normalizer(g, h.group); }

/// C_G(H): elements commuting with every generator of H.
Subgroup centralizer(const PermGroup& g, const PermGroup& h);
inline Subgroup centralizer(const PermGroup& g, const Subgroup& h) { return centralizer(g, h.group); }
Subgroup centralizer_element(const PermGroup& g, const Permutation& z);

/// Z(H) = C_H(H).
Subgroup center(const PermGroup& h);

/// Some x in g with a^x = b, if any.
std::optional<Permutation> conjugating_element(const PermGroup& g, const Permutation& a,
                                               const Permutation& b);

/// Whether z is conjugate to z^-1 in g, by building the conjugacy orbit of z.
/// Throws BudgetExceeded if the class outgrows budget().max_class_size.
bool is_real(const PermGroup& g, const Permutation& z);

/// As is_real, also returning the conjugating element found on the orbit.
std::optional<Permutation> real_witness(const PermGroup& g, const Permutation& z);

/// {y in g : z^y = z or z^y = z^-1}. Throws std::invalid_argument for z = 1.
Subgroup extended_centralizer(const PermGroup& g, const Permutation& z);

/// Smallest normal subgroup of g containing h.
Subgroup normal_closure(const PermGroup& g, const PermGroup& h);
inline Subgroup normal_closure(const PermGroup& g, const Subgroup& h) { return normal_closure(g, h.group); }

bool is_normal(const PermGroup& g, const PermGroup& n);

/// g = G^(0) > G^(1) > ... until the series stabilizes. Every term has parent g.
std::vector<Subgroup> derived_series(const PermGroup& g);
bool is_soluble(const PermGroup& g);

/// Whether some Sylow p- and Sylow q-subgroup of g commute elementwise.
/// Fixes P and walks the conjugacy orbit of one Sylow q-subgroup.
bool nilpotent_hall_pair_exists(const PermGroup& g, std::uint64_t p, std::uint64_t q);

/// |N * N_G(S)| for S a Sylow p-subgroup of n, computed as
/// |N| |N_G(S)| / |N_N(S)|. Throws std::invalid_argument unless n is normal in g.
BigInt frattini_product_order(const PermGroup& g, const PermGroup& n, std::uint64_t p);
inline BigInt frattini_product_order(const PermGroup& g, const Subgroup& n, std::uint64_t p) {
  return frattini_product_order(g, n.group, p);
}

}  // namespace sylow
