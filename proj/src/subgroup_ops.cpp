#include "sylow/subgroup_ops.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "search.hpp"
#include "sylow/arith.hpp"
#include "sylow/errors.hpp"

namespace sylow {

namespace {

constexpr std::uint64_t kSylowSeed = 0x5e1f'0c0d'e5a1'7001ULL;

void require_subgroup(const PermGroup& g, const PermGroup& h, const char* who) {
  if (g.degree() != h.degree()) throw std::invalid_argument(std::string(who) + ": degree mismatch");
  for (const auto& x : h.generators())
    if (!g.contains(x)) throw std::invalid_argument(std::string(who) + ": H is not a subgroup of G");
}

PermGroup adjoin(const PermGroup& h, const Permutation& x) {
  auto gens = h.generators();
  gens.push_back(x);
  return PermGroup(h.degree(), std::move(gens));
}

// g^p computed in place on raw images.
bool power_in(std::span<const Point> g, std::uint64_t p, const PermGroup& target,
              std::vector<Point>& acc, std::vector<Point>& tmp, std::vector<Point>& scratch) {
  acc.assign(g.begin(), g.end());
  tmp.resize(g.size());
  for (std::uint64_t k = 1; k < p; ++k) {
    for (std::size_t x = 0; x < g.size(); ++x) tmp[x] = g[acc[x]];
    acc.swap(tmp);
  }
  return target.chain().contains(acc, scratch);
}

// A p-element of g with the largest p-power order in a deterministic sample.
std::optional<Permutation> starting_p_element(const PermGroup& g, std::uint64_t p) {
  std::mt19937_64 rng(kSylowSeed ^ p);
  std::optional<Permutation> best;
  BigInt best_order = 1;
  constexpr int kSample = 64;
  constexpr int kMaxTries = 1 << 16;
  for (int t = 0; t < kMaxTries && (t < kSample || !best); ++t) {
    Permutation x = g.random_element(rng);
    BigInt o = x.order();
    BigInt part = p_part(o, p);
    if (part > best_order) {
      best_order = part;
      best = x.pow(static_cast<long long>(o / part));
    }
  }
  return best;
}

}  // namespace

Subgroup sylow_subgroup(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("sylow: " + std::to_string(p) + " is not prime");
  const BigInt target = p_part(g.order(), p);
  if (target == 1) return Subgroup{g, PermGroup::trivial(g.degree())};

  auto start = starting_p_element(g, p);
  if (!start) throw std::logic_error("sylow: no p-element found in sample");
  PermGroup current(g.degree(), {*start});

  std::vector<Point> acc, tmp, scratch;
  while (current.order() < target) {
    // Any y normalizing P with y not in P and y^p in P gives a p-group <P, y>
    // of order p|P|; one exists as long as P is not Sylow.
    struct AscentPredicate : detail::NormalizerPredicate {
      AscentPredicate(const PermGroup& h, std::uint64_t p, std::vector<Point>& acc,
                      std::vector<Point>& tmp, std::vector<Point>& scratch)
          : NormalizerPredicate(h), p_group(h), prime(p), acc(acc), tmp(tmp), scratch(scratch) {}
      bool leaf(std::span<const Point> y) override {
        if (!NormalizerPredicate::leaf(y)) return false;
        if (p_group.chain().contains(y, scratch)) return false;
        return power_in(y, prime, p_group, acc, tmp, scratch);
      }
      const PermGroup& p_group;
      std::uint64_t prime;
      std::vector<Point>&acc, &tmp, &scratch;
    } pred(current, p, acc, tmp, scratch);

    auto chain = detail::search_chain(g, detail::orbit_ordered_base(current));
    std::optional<Permutation> found;
    detail::backtrack(chain, pred, [&](std::span<const Point> y) {
      found = Permutation::unchecked(std::vector<Point>(y.begin(), y.end()));
      return false;
    });
    if (!found) throw std::logic_error("sylow: ascent found no p-element in the normalizer");
    current = adjoin(current, *found);
  }
  return Subgroup{g, current};
}

Subgroup normalizer(const PermGroup& g, const PermGroup& h) {
  require_subgroup(g, h, "normalizer");
  if (h.is_trivial()) return whole(g);
  detail::NormalizerPredicate pred(h);
  auto chain = detail::search_chain(g, detail::orbit_ordered_base(h));
  return Subgroup{g, detail::collect_group(g, chain, pred)};
}

Subgroup centralizer(const PermGroup& g, const PermGroup& h) {
  require_subgroup(g, h, "centralizer");
  if (h.is_trivial()) return whole(g);
  detail::ConjugacyPredicate pred(h.generators(), h.generators());
  auto chain = detail::search_chain(g, detail::orbit_ordered_base(h));
  return Subgroup{g, detail::collect_group(g, chain, pred)};
}

Subgroup centralizer_element(const PermGroup& g, const Permutation& z) {
  if (!g.contains(z)) throw std::invalid_argument("centralizer_element: element outside group");
  return centralizer(g, PermGroup(g.degree(), {z}));
}

Subgroup center(const PermGroup& h) { return centralizer(h, h); }

std::optional<Permutation> conjugating_element(const PermGroup& g, const Permutation& a,
                                               const Permutation& b) {
  if (a.degree() != g.degree() || b.degree() != g.degree())
    throw std::invalid_argument("conjugating_element: degree mismatch");
  detail::ConjugacyPredicate pred({a}, {b});
  auto chain = detail::search_chain(g, detail::orbit_ordered_base(PermGroup(g.degree(), {a})));
  std::optional<Permutation> found;
  detail::backtrack(chain, pred, [&](std::span<const Point> x) {
    found = Permutation::unchecked(std::vector<Point>(x.begin(), x.end()));
    return false;
  });
  return found;
}

std::optional<Permutation> real_witness(const PermGroup& g, const Permutation& z) {
  if (!g.contains(z)) throw std::invalid_argument("is_real: element outside group");
  const Permutation target = z.inverse();
  if (z == target) return g.identity();
  const std::uint64_t limit = budget().max_class_size;
  // Conjugacy orbit of z under the generators; parent links rebuild the conjugator.
  std::vector<Permutation> orbit{z};
  std::vector<std::pair<std::size_t, std::size_t>> parent{{SIZE_MAX, SIZE_MAX}};
  std::unordered_map<Permutation, std::size_t, PermutationHash> index{{z, 0}};
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation c = conjugate(orbit[i], gens[s]);
      if (index.count(c)) continue;
      if (orbit.size() >= limit)
        throw BudgetExceeded("is_real: conjugacy class exceeds " + std::to_string(limit));
      index.emplace(c, orbit.size());
      orbit.push_back(c);
      parent.emplace_back(i, s);
      if (orbit.back() == target) {
        std::vector<std::size_t> word;
        for (std::size_t k = orbit.size() - 1; parent[k].first != SIZE_MAX; k = parent[k].first)
          word.push_back(parent[k].second);
        Permutation x = g.identity();
        for (auto it = word.rbegin(); it != word.rend(); ++it) x = compose(x, gens[*it]);
        return x;
      }
    }
  }
  return std::nullopt;
}

bool is_real(const PermGroup& g, const Permutation& z) { return real_witness(g, z).has_value(); }

Subgroup extended_centralizer(const PermGroup& g, const Permutation& z) {
  if (z.is_identity()) throw std::invalid_argument("extended_centralizer: z must be nontrivial");
  Subgroup c = centralizer_element(g, z);
  auto y = conjugating_element(g, z, z.inverse());
  if (!y || c.contains(*y)) return c;
  return Subgroup{g, adjoin(c.group, *y)};
}

Subgroup normal_closure(const PermGroup& g, const PermGroup& h) {
  require_subgroup(g, h, "normal_closure");
  PermGroup closure = h;
  std::vector<Permutation> gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& x : g.generators()) {
      Permutation c = conjugate(gens[i], x);
      if (closure.contains(c)) continue;
      gens.push_back(c);
      closure = PermGroup(g.degree(), gens);
    }
  }
  return Subgroup{g, closure};
}

bool is_normal(const PermGroup& g, const PermGroup& n) {
  require_subgroup(g, n, "is_normal");
  for (const auto& x : n.generators())
    for (const auto& y : g.generators())
      if (!n.contains(conjugate(x, y))) return false;
  return true;
}

std::vector<Subgroup> derived_series(const PermGroup& g) {
  std::vector<Subgroup> series{whole(g)};
  PermGroup current = g;
  while (!current.is_trivial()) {
    const auto& gens = current.generators();
    std::vector<Permutation> comms;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        Permutation c = commutator(gens[i], gens[j]);
        if (!c.is_identity()) comms.push_back(std::move(c));
      }
    PermGroup next = normal_closure(current, PermGroup(g.degree(), comms)).group;
    if (next.order() == current.order()) break;
    series.push_back(Subgroup{g, next});
    current = next;
  }
  return series;
}

bool is_soluble(const PermGroup& g) { return derived_series(g).back().group.is_trivial(); }

bool nilpotent_hall_pair_exists(const PermGroup& g, std::uint64_t p, std::uint64_t q) {
  if (p == q) throw std::invalid_argument("nilpotent_hall_pair_exists: primes must differ");
  if (!is_prime(p) || !is_prime(q)) throw std::invalid_argument("nilpotent_hall_pair_exists: not prime");
  const PermGroup big_p = sylow_subgroup(g, p).group;
  const PermGroup q0 = sylow_subgroup(g, q).group;
  auto commute = [&](const PermGroup& q_group) {
    for (const auto& a : big_p.generators())
      for (const auto& b : q_group.generators())
        if (compose(a, b) != compose(b, a)) return false;
    return true;
  };
  if (commute(q0)) return true;
  if (big_p.is_trivial() || q0.is_trivial()) return true;

  // Conjugacy orbit of Q0, keyed by sorted element lists.
  auto key = [&](const PermGroup& h) {
    std::vector<Permutation> elems;
    for (auto s = h.elements(); auto x = s.next();) elems.push_back(std::move(*x));
    std::sort(elems.begin(), elems.end());
    return elems;
  };
  std::map<std::vector<Permutation>, std::size_t> seen{{key(q0), 0}};
  std::vector<PermGroup> orbit{q0};
  const std::uint64_t limit = budget().max_elements;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& x : g.generators()) {
      std::vector<Permutation> gens;
      for (const auto& y : orbit[i].generators()) gens.push_back(conjugate(y, x));
      PermGroup conj(g.degree(), std::move(gens));
      if (!seen.emplace(key(conj), orbit.size()).second) continue;
      if (commute(conj)) return true;
      if (orbit.size() >= limit) throw BudgetExceeded("nilpotent_hall_pair_exists: orbit too large");
      orbit.push_back(std::move(conj));
    }
  }
  return false;
}

BigInt frattini_product_order(const PermGroup& g, const PermGroup& n, std::uint64_t p) {
  if (!is_normal(g, n)) throw std::invalid_argument("frattini_product_order: N is not normal in G");
  const PermGroup s = sylow_subgroup(n, p).group;
  const BigInt ng = normalizer(g, s).order();
  const BigInt nn = normalizer(n, s).order();
  return n.order() * ng / nn;
}

}  // namespace sylow
