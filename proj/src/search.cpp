#include "search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sylow::detail {

namespace {

// Orbit id (smallest point of the orbit) and orbit size for the group
// generated by `gens` on {0, ..., degree-1}.
void orbit_partition(std::size_t degree, const std::vector<Permutation>& gens,
                     std::vector<std::uint32_t>& id, std::vector<std::uint32_t>& size) {
  std::vector<std::uint32_t> parent(degree);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (std::size_t x = 0; x < degree; ++x) {
      auto a = find(static_cast<std::uint32_t>(x)), b = find(g(static_cast<Point>(x)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  id.assign(degree, 0);
  size.assign(degree, 0);
  for (std::size_t x = 0; x < degree; ++x) {
    id[x] = find(static_cast<std::uint32_t>(x));
    ++size[id[x]];
  }
  for (std::size_t x = 0; x < degree; ++x) size[x] = size[id[x]];
}

std::vector<std::uint32_t> cycle_lengths(const Permutation& p) {
  std::vector<std::uint32_t> len(p.degree(), 1);
  for (const auto& c : p.cycles())
    for (Point x : c) len[x] = static_cast<std::uint32_t>(c.size());
  return len;
}

std::vector<std::size_t> base_positions(std::size_t degree, std::span<const Point> base) {
  std::vector<std::size_t> pos(degree, SIZE_MAX);
  for (std::size_t i = 0; i < base.size(); ++i) pos[base[i]] = i;
  return pos;
}

}  // namespace

std::vector<Point> orbit_ordered_base(const PermGroup& group) {
  auto orbits = group.orbits();
  std::erase_if(orbits, [](const auto& o) { return o.size() < 2; });
  std::stable_sort(orbits.begin(), orbits.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<Point> base;
  for (const auto& o : orbits) {
    auto bfs = group.orbit(o.front());
    base.insert(base.end(), bfs.begin(), bfs.end());
  }
  return base;
}

StabChain search_chain(const PermGroup& g, std::span<const Point> prefix) {
  StabChain chain = StabChain::build(g.degree(), g.generators(), prefix);
  chain.strip_trivial_levels();
  return chain;
}

PermGroup collect_group(const PermGroup& g, const StabChain& chain, SearchPredicate& pred) {
  std::vector<Permutation> gens;
  PermGroup found = PermGroup::trivial(g.degree());
  std::uint64_t count = 0;
  std::vector<Point> scratch;
  backtrack(chain, pred, [&](std::span<const Point> element) {
    ++count;
    if (!found.chain().contains(element, scratch)) {
      gens.push_back(Permutation::unchecked(std::vector<Point>(element.begin(), element.end())));
      found = PermGroup(g.degree(), gens);
    }
    return true;
  });
  if (found.order() != count)
    throw std::logic_error("collect_group: accepted set is not a group (" + std::to_string(count) +
                           " elements, closure order " + found.order().str() + ")");
  return found;
}

ConjugacyPredicate::ConjugacyPredicate(std::vector<Permutation> sources,
                                       std::vector<Permutation> targets)
    : sources_(std::move(sources)), targets_(std::move(targets)) {
  if (sources_.size() != targets_.size())
    throw std::invalid_argument("ConjugacyPredicate: unequal source/target counts");
  for (std::size_t m = 0; m < sources_.size(); ++m) {
    source_cycle_len_.push_back(cycle_lengths(sources_[m]));
    target_cycle_len_.push_back(cycle_lengths(targets_[m]));
  }
  const std::size_t degree = sources_.empty() ? 0 : sources_.front().degree();
  orbit_partition(degree, sources_, source_orbit_, source_orbit_size_);
  orbit_partition(degree, targets_, target_orbit_, target_orbit_size_);
}

void ConjugacyPredicate::prepare(std::span<const Point> base) {
  base_.assign(base.begin(), base.end());
  links_.assign(base_.size(), {});
  if (sources_.empty()) return;
  auto pos = base_positions(sources_.front().degree(), base_);
  for (std::size_t m = 0; m < sources_.size(); ++m)
    for (std::size_t i = 0; i < base_.size(); ++i) {
      std::size_t j = pos[sources_[m](base_[i])];
      if (j == SIZE_MAX) continue;
      links_[std::max(i, j)].push_back({m, i, j});
    }
}

bool ConjugacyPredicate::node(std::size_t depth, std::span<const Point> images) {
  const Point b = base_[depth];
  const Point y = images[depth];
  if (sources_.empty()) return true;
  if (source_orbit_size_[b] != target_orbit_size_[y]) return false;
  for (std::size_t m = 0; m < sources_.size(); ++m)
    if (source_cycle_len_[m][b] != target_cycle_len_[m][y]) return false;
  for (std::size_t i = 0; i < depth; ++i) {
    bool same_source = source_orbit_[base_[i]] == source_orbit_[b];
    bool same_target = target_orbit_[images[i]] == target_orbit_[y];
    if (same_source != same_target) return false;
  }
  for (const Link& l : links_[depth])
    if (targets_[l.gen](images[l.from]) != images[l.to]) return false;
  return true;
}

bool ConjugacyPredicate::leaf(std::span<const Point> g) {
  for (std::size_t m = 0; m < sources_.size(); ++m) {
    const Point* a = sources_[m].data();
    const Point* b = targets_[m].data();
    for (std::size_t x = 0; x < g.size(); ++x)
      if (g[a[x]] != b[g[x]]) return false;
  }
  return true;
}

NormalizerPredicate::NormalizerPredicate(const PermGroup& h) : h_(h) {
  orbit_partition(h.degree(), h.generators(), orbit_, orbit_size_);
  constexpr std::uint64_t kMaxTracked = 1u << 14;
  if (h.order() <= kMaxTracked && h.degree() * static_cast<std::size_t>(h.order()) <= (1u << 23)) {
    track_elements_ = true;
    element_count_ = static_cast<std::size_t>(h.order());
    elements_.reserve(element_count_ * h.degree());
    for (auto s = h.elements(); auto x = s.next();)
      elements_.insert(elements_.end(), x->images().begin(), x->images().end());
    all_.resize(element_count_);
    std::iota(all_.begin(), all_.end(), 0u);
  }
}

void NormalizerPredicate::prepare(std::span<const Point> base) {
  base_.assign(base.begin(), base.end());
  links_.assign(base_.size(), {});
  const auto& gens = h_.generators();
  auto pos = base_positions(h_.degree(), base_);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t i = 0; i < base_.size(); ++i) {
      std::size_t j = pos[gens[a](base_[i])];
      if (j == SIZE_MAX) continue;
      links_[std::max(i, j)].push_back({a, i, j});
    }
  candidates_.assign(base_.size(), std::vector<std::vector<std::uint32_t>>(gens.size()));
  current_.assign(base_.size(), std::vector<const std::vector<std::uint32_t>*>(gens.size(), &all_));
  conj_.resize(h_.degree());
}

bool NormalizerPredicate::node(std::size_t depth, std::span<const Point> images) {
  const Point b = base_[depth];
  const Point y = images[depth];
  if (orbit_size_[b] != orbit_size_[y]) return false;
  for (std::size_t i = 0; i < depth; ++i)
    if ((orbit_[base_[i]] == orbit_[b]) != (orbit_[images[i]] == orbit_[y])) return false;
  if (!track_elements_) return true;

  const std::size_t degree = h_.degree();
  const std::size_t gens = h_.generators().size();
  for (std::size_t a = 0; a < gens; ++a)
    current_[depth][a] = depth == 0 ? &all_ : current_[depth - 1][a];
  // Links are grouped by generator in the order prepare() emitted them.
  const auto& links = links_[depth];
  for (std::size_t start = 0; start < links.size();) {
    std::size_t a = links[start].gen;
    std::size_t end = start;
    while (end < links.size() && links[end].gen == a) ++end;
    auto& out = candidates_[depth][a];
    out.clear();
    for (std::uint32_t e : *current_[depth][a]) {
      const Point* c = elements_.data() + static_cast<std::size_t>(e) * degree;
      bool ok = true;
      for (std::size_t l = start; l < end && ok; ++l) ok = c[images[links[l].from]] == images[links[l].to];
      if (ok) out.push_back(e);
    }
    if (out.empty()) return false;
    current_[depth][a] = &out;
    start = end;
  }
  return true;
}

bool NormalizerPredicate::leaf(std::span<const Point> g) {
  for (const auto& h : h_.generators()) {
    const Point* hp = h.data();
    for (std::size_t x = 0; x < g.size(); ++x) conj_[g[x]] = g[hp[x]];
    if (!h_.chain().contains(conj_, scratch_)) return false;
  }
  return true;
}

}  // namespace sylow::detail
