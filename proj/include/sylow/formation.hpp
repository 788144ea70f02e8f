#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "sylow/bigint.hpp"
#include "sylow/perm_group.hpp"

namespace sylow {

using PrimeSet = std::set<std::uint64_t>;

/// Disjoint nonempty blocks of primes.
struct PrimePartition {
  std::vector<PrimeSet> blocks;

  bool valid() const;
  PrimeSet primes() const;
  /// The block containing p, or nullptr.
  const PrimeSet* block_of(std::uint64_t p) const;
};

/// Characteristic pi with a relation p -> pi(p) (the primes p is tied to).
struct FormationSpec {
  PrimeSet pi;
  std::map<std::uint64_t, PrimeSet> relation;

  /// pi(p) = block of p.
  static FormationSpec from_partition(const PrimePartition& partition);
  bool related(std::uint64_t p, std::uint64_t q) const;
};

/// p in pi(p) subset of pi for every p in pi, and the relation is symmetric.
bool validate_spec(const FormationSpec& spec);

/// Whether the primes of sigma are pairwise unrelated.
/// Throws std::invalid_argument unless sigma is a subset of spec.pi.
bool sigma_family_member(const FormationSpec& spec, const PrimeSet& sigma);

/// Classes of the transitive closure of the relation, ordered by smallest prime.
std::vector<PrimeSet> prime_components(const FormationSpec& spec);

/// Whether g is the direct product of a tau-group for each block tau, i.e. the
/// normal closure of the Sylow subgroups for the primes of each block is a
/// group of that block's primes. Throws std::invalid_argument if the blocks do
/// not cover pi(g).
bool in_product_class(const PermGroup& g, const PrimePartition& partition);

/// g has a nilpotent Hall sigma-subgroup, sigma = {p, q}: some Sylow p- and
/// Sylow q-subgroup commute. True when at most one prime of sigma divides |g|.
bool in_E_sigma_n(const PermGroup& g, const PrimeSet& sigma);

/// For soluble g: whether g lies in E_sigma^n for every two-prime sigma of
/// unrelated primes dividing |g|. Throws std::invalid_argument if g is not
/// soluble or pi(g) is not contained in spec.pi.
bool soluble_covering_membership(const PermGroup& g, const FormationSpec& spec);

struct NClosureReport {
  bool group_member = false;
  std::map<std::uint64_t, bool> normalizer_member;     // by prime of pi(g)
  std::map<std::uint64_t, BigInt> normalizer_order;

  bool all_normalizers_member() const;
  /// (g in X) <=> (every Sylow normalizer in X).
  bool equivalence_holds() const { return group_member == all_normalizers_member(); }
};

NClosureReport n_closure_check(const PermGroup& g,
                               const std::function<bool(const PermGroup&)>& membership);

}  // namespace sylow
