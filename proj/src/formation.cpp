#include "sylow/formation.hpp"

#include <algorithm>
#include <stdexcept>

#include "sylow/arith.hpp"
#include "sylow/subgroup_ops.hpp"

namespace sylow {

namespace {

PrimeSet primes_of(const PermGroup& g) {
  const auto v = prime_divisors(g.order());
  return PrimeSet(v.begin(), v.end());
}

bool is_tau_group(const PermGroup& h, const PrimeSet& tau) {
  BigInt n = h.order();
  for (std::uint64_t p : tau)
    while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

bool PrimePartition::valid() const {
  PrimeSet seen;
  for (const auto& b : blocks) {
    if (b.empty()) return false;
    for (std::uint64_t p : b)
      if (!is_prime(p) || !seen.insert(p).second) return false;
  }
  return true;
}

PrimeSet PrimePartition::primes() const {
  PrimeSet out;
  for (const auto& b : blocks) out.insert(b.begin(), b.end());
  return out;
}

const PrimeSet* PrimePartition::block_of(std::uint64_t p) const {
  for (const auto& b : blocks)
    if (b.count(p)) return &b;
  return nullptr;
}

FormationSpec FormationSpec::from_partition(const PrimePartition& partition) {
  if (!partition.valid()) throw std::invalid_argument("from_partition: blocks are not a partition");
  FormationSpec spec;
  for (const auto& b : partition.blocks)
    for (std::uint64_t p : b) {
      spec.pi.insert(p);
      spec.relation[p] = b;
    }
  return spec;
}

bool FormationSpec::related(std::uint64_t p, std::uint64_t q) const {
  auto it = relation.find(p);
  return it != relation.end() && it->second.count(q);
}

bool validate_spec(const FormationSpec& spec) {
  for (std::uint64_t p : spec.pi) {
    auto it = spec.relation.find(p);
    if (it == spec.relation.end() || !it->second.count(p)) return false;
    for (std::uint64_t q : it->second)
      if (!spec.pi.count(q) || !spec.related(q, p)) return false;
  }
  // Nothing outside pi may carry a relation.
  for (const auto& [p, set] : spec.relation)
    if (!spec.pi.count(p)) return false;
  return true;
}

bool sigma_family_member(const FormationSpec& spec, const PrimeSet& sigma) {
  for (std::uint64_t p : sigma)
    if (!spec.pi.count(p)) throw std::invalid_argument("sigma_family_member: sigma is not inside pi");
  for (auto a = sigma.begin(); a != sigma.end(); ++a)
    for (auto b = std::next(a); b != sigma.end(); ++b)
      if (spec.related(*a, *b) || spec.related(*b, *a)) return false;
  return true;
}

std::vector<PrimeSet> prime_components(const FormationSpec& spec) {
  std::vector<PrimeSet> out;
  PrimeSet done;
  for (std::uint64_t start : spec.pi) {
    if (done.count(start)) continue;
    PrimeSet comp{start};
    std::vector<std::uint64_t> stack{start};
    while (!stack.empty()) {
      const std::uint64_t p = stack.back();
      stack.pop_back();
      for (std::uint64_t q : spec.pi)
        if (!comp.count(q) && (spec.related(p, q) || spec.related(q, p))) {
          comp.insert(q);
          stack.push_back(q);
        }
    }
    done.insert(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool in_product_class(const PermGroup& g, const PrimePartition& partition) {
  if (!partition.valid()) throw std::invalid_argument("in_product_class: invalid partition");
  const PrimeSet pi_g = primes_of(g);
  for (std::uint64_t p : pi_g)
    if (!partition.block_of(p))
      throw std::invalid_argument("in_product_class: prime " + std::to_string(p) + " not covered");
  for (const auto& tau : partition.blocks) {
    std::vector<Permutation> gens;
    for (std::uint64_t p : tau) {
      if (!pi_g.count(p)) continue;
      const Subgroup s = sylow_subgroup(g, p);
      gens.insert(gens.end(), s.generators().begin(), s.generators().end());
    }
    if (gens.empty()) continue;
    if (!is_tau_group(normal_closure(g, PermGroup(g.degree(), gens)).group, tau)) return false;
  }
  return true;
}

bool in_E_sigma_n(const PermGroup& g, const PrimeSet& sigma) {
  if (sigma.size() != 2) throw std::invalid_argument("in_E_sigma_n: sigma must have two primes");
  const std::uint64_t p = *sigma.begin(), q = *sigma.rbegin();
  if (g.order() % p != 0 || g.order() % q != 0) return true;
  return nilpotent_hall_pair_exists(g, p, q);
}

bool soluble_covering_membership(const PermGroup& g, const FormationSpec& spec) {
  if (!is_soluble(g)) throw std::invalid_argument("soluble_covering_membership: group is not soluble");
  const PrimeSet pi_g = primes_of(g);
  for (std::uint64_t p : pi_g)
    if (!spec.pi.count(p))
      throw std::invalid_argument("soluble_covering_membership: prime " + std::to_string(p) +
                                  " outside the characteristic");
  for (auto a = pi_g.begin(); a != pi_g.end(); ++a)
    for (auto b = std::next(a); b != pi_g.end(); ++b) {
      const PrimeSet sigma{*a, *b};
      if (sigma_family_member(spec, sigma) && !in_E_sigma_n(g, sigma)) return false;
    }
  return true;
}

bool NClosureReport::all_normalizers_member() const {
  return std::all_of(normalizer_member.begin(), normalizer_member.end(),
                     [](const auto& kv) { return kv.second; });
}

NClosureReport n_closure_check(const PermGroup& g,
                               const std::function<bool(const PermGroup&)>& membership) {
  NClosureReport report;
  report.group_member = membership(g);
  for (std::uint64_t p : primes_of(g)) {
    const Subgroup n = normalizer(g, sylow_subgroup(g, p));
    report.normalizer_order[p] = n.order();
    report.normalizer_member[p] = membership(n.group);
  }
  return report;
}

}  // namespace sylow
