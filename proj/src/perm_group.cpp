#include "sylow/perm_group.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "sylow/errors.hpp"

namespace sylow {

namespace {

std::atomic<std::uint64_t> g_max_elements{Budget{}.max_elements};
std::atomic<std::uint64_t> g_max_class_size{Budget{}.max_class_size};

// Per-level state used only while Schreier-Sims runs.
struct BuildLevel {
  ChainLevel level;
  // checked[j] has one flag per generator: Schreier generator (j, s) verified.
  std::vector<std::vector<bool>> checked;
};

void extend_orbit(BuildLevel& bl, std::size_t degree) {
  ChainLevel& lv = bl.level;
  if (lv.orbit.empty()) {
    lv.orbit_index.assign(degree, -1);
    lv.orbit.push_back(lv.base);
    lv.orbit_index[lv.base] = 0;
    lv.transversal.emplace_back(degree);
    lv.inverse_transversal.emplace_back(degree);
  }
  // Breadth-first closure. Existing transversal elements never change.
  for (std::size_t j = 0; j < lv.orbit.size(); ++j) {
    for (const auto& s : lv.generators) {
      Point image = s(lv.orbit[j]);
      if (lv.orbit_index[image] >= 0) continue;
      lv.orbit_index[image] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(image);
      Permutation u = compose(lv.transversal[j], s);
      lv.inverse_transversal.push_back(u.inverse());
      lv.transversal.push_back(std::move(u));
    }
  }
  bl.checked.resize(lv.orbit.size());
  for (auto& row : bl.checked) row.resize(lv.generators.size(), false);
}

bool fixes_all(const Permutation& g, const std::vector<BuildLevel>& levels, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    if (g(levels[i].level.base) != levels[i].level.base) return false;
  return true;
}

}  // namespace

Budget budget() { return Budget{g_max_elements.load(), g_max_class_size.load()}; }

void set_budget(const Budget& b) {
  g_max_elements.store(b.max_elements);
  g_max_class_size.store(b.max_class_size);
}

StabChain StabChain::build(std::size_t degree, std::span<const Permutation> generators,
                           std::span<const Point> base_prefix) {
  StabChain chain;
  chain.degree_ = degree;

  std::vector<Permutation> strong;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("StabChain: generator degree mismatch");
    if (!g.is_identity() && std::find(strong.begin(), strong.end(), g) == strong.end())
      strong.push_back(g);
  }
  if (strong.empty()) return chain;

  std::vector<BuildLevel> levels;
  auto add_level = [&](Point b) {
    BuildLevel bl;
    bl.level.base = b;
    levels.push_back(std::move(bl));
  };
  for (Point b : base_prefix) {
    if (b >= degree) throw std::invalid_argument("StabChain: base point out of range");
    for (const auto& bl : levels)
      if (bl.level.base == b) throw std::invalid_argument("StabChain: repeated base point");
    add_level(b);
  }
  for (const auto& s : strong) {
    if (!fixes_all(s, levels, levels.size())) continue;
    add_level(static_cast<Point>(s.smallest_moved_point()));
  }
  for (const auto& s : strong) {
    for (std::size_t i = 0; i < levels.size(); ++i) {
      levels[i].level.generators.push_back(s);
      if (s(levels[i].level.base) != levels[i].level.base) break;
    }
  }
  for (auto& bl : levels) extend_orbit(bl, degree);

  // Holt's SCHREIERSIMS, remembering which Schreier generators were verified.
  std::vector<Point> scratch(degree);
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
  while (i >= 0) {
    bool added = false;
    BuildLevel& cur = levels[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; !added && j < cur.level.orbit.size(); ++j) {
      for (std::size_t s = 0; !added && s < cur.level.generators.size(); ++s) {
        if (cur.checked[j][s]) continue;
        const Permutation& gen = cur.level.generators[s];
        Point image = gen(cur.level.orbit[j]);
        const auto k = static_cast<std::size_t>(cur.level.orbit_index[image]);
        Permutation h = compose(compose(cur.level.transversal[j], gen), cur.level.inverse_transversal[k]);
        std::size_t l = static_cast<std::size_t>(i) + 1;
        for (; l < levels.size(); ++l) {
          const ChainLevel& lv = levels[l].level;
          std::int32_t idx = lv.orbit_index[h(lv.base)];
          if (idx < 0) break;
          h = compose(h, lv.inverse_transversal[static_cast<std::size_t>(idx)]);
        }
        if (l == levels.size() && h.is_identity()) {
          cur.checked[j][s] = true;
          continue;
        }
        if (l == levels.size()) {
          add_level(static_cast<Point>(h.smallest_moved_point()));
          levels.back().level.generators.clear();
        }
        for (std::size_t m = static_cast<std::size_t>(i) + 1; m <= l && m < levels.size(); ++m) {
          levels[m].level.generators.push_back(h);
          extend_orbit(levels[m], degree);
        }
        i = static_cast<std::ptrdiff_t>(std::min(l, levels.size() - 1));
        added = true;
      }
    }
    if (!added) --i;
  }

  for (auto& bl : levels) chain.levels_.push_back(std::move(bl.level));
  return chain;
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  for (const auto& lv : levels_) b.push_back(lv.base);
  return b;
}

BigInt StabChain::order() const {
  BigInt n = 1;
  for (const auto& lv : levels_) n *= lv.orbit.size();
  return n;
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw std::invalid_argument("contains: degree mismatch");
  std::vector<Point> scratch;
  return contains(g.images(), scratch);
}

bool StabChain::contains(std::span<const Point> images, std::vector<Point>& scratch) const {
  scratch.assign(images.begin(), images.end());
  for (const auto& lv : levels_) {
    std::int32_t idx = lv.orbit_index[scratch[lv.base]];
    if (idx < 0) return false;
    const Point* inv = lv.inverse_transversal[static_cast<std::size_t>(idx)].data();
    for (auto& x : scratch) x = inv[x];
  }
  for (std::size_t i = 0; i < scratch.size(); ++i)
    if (scratch[i] != i) return false;
  return true;
}

Permutation StabChain::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::uniform_int_distribution<std::size_t> pick(0, it->orbit.size() - 1);
    g = compose(g, it->transversal[pick(rng)]);
  }
  return g;
}

void StabChain::strip_trivial_levels() {
  std::erase_if(levels_, [](const ChainLevel& lv) { return lv.orbit.size() == 1; });
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators) {
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  for (auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("PermGroup: generator degree mismatch");
    if (!g.is_identity() &&
        std::find(impl->generators.begin(), impl->generators.end(), g) == impl->generators.end())
      impl->generators.push_back(std::move(g));
  }
  impl->chain = StabChain::build(degree, impl->generators);
  impl->order = impl->chain.order();
  impl_ = std::move(impl);
}

bool PermGroup::contains(const Permutation& g) const { return chain().contains(g); }

ElementStream PermGroup::elements() const { return ElementStream(*this); }

std::vector<Point> PermGroup::orbit(Point x) const {
  std::vector<Point> orb{x};
  std::vector<bool> seen(degree(), false);
  seen[x] = true;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (const auto& g : generators()) {
      Point y = g(orb[i]);
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  return orb;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    auto orb = orbit(static_cast<Point>(x));
    for (Point y : orb) seen[y] = true;
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const {
  return degree() == 0 || orbit(0).size() == degree();
}

PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> generators) {
  return PermGroup(degree, std::move(generators));
}

ElementStream::ElementStream(const PermGroup& group) : group_(group) {
  if (group.order() > budget().max_elements)
    throw BudgetExceeded("elements: group order " + group.order().str() +
                         " exceeds the enumeration budget");
}

std::optional<Permutation> ElementStream::next() {
  if (done_) return std::nullopt;
  const auto& levels = group_.chain().levels();
  const std::size_t depth = levels.size();
  if (!started_) {
    started_ = true;
    if (depth == 0) {
      done_ = true;
      return group_.identity();
    }
    index_.assign(depth, 0);
    partial_.clear();
    partial_.push_back(levels[0].transversal[0]);
    for (std::size_t k = 1; k < depth; ++k)
      partial_.push_back(compose(levels[k].transversal[0], partial_[k - 1]));
    return partial_.back();
  }
  if (depth == 0) {
    done_ = true;
    return std::nullopt;
  }
  // Odometer increment, innermost level fastest.
  std::size_t k = depth;
  while (k > 0) {
    --k;
    if (++index_[k] < levels[k].orbit.size()) break;
    index_[k] = 0;
    if (k == 0) {
      done_ = true;
      return std::nullopt;
    }
  }
  for (std::size_t m = k; m < depth; ++m) {
    const Permutation& u = levels[m].transversal[index_[m]];
    partial_[m] = m == 0 ? u : compose(u, partial_[m - 1]);
  }
  return partial_.back();
}

Subgroup make_subgroup(const PermGroup& parent, std::vector<Permutation> generators) {
  for (const auto& g : generators)
    if (!parent.contains(g)) throw std::invalid_argument("make_subgroup: generator outside parent");
  return Subgroup{parent, PermGroup(parent.degree(), std::move(generators))};
}

Subgroup whole(const PermGroup& g) { return Subgroup{g, g}; }

bool same_group(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  for (const auto& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

Subgroup conjugate_subgroup(const Subgroup& h, const Permutation& g) {
  if (!h.parent.contains(g)) throw std::invalid_argument("conjugate_subgroup: element outside parent");
  std::vector<Permutation> gens;
  gens.reserve(h.generators().size());
  for (const auto& x : h.generators()) gens.push_back(conjugate(x, g));
  return Subgroup{h.parent, PermGroup(h.parent.degree(), std::move(gens))};
}

}  // namespace sylow
