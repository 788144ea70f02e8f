#pragma once

// Depth-first walk over the element tree of a stabilizer chain. Level k of the
// tree fixes the image of the k-th base point; leaves are group elements.
// A predicate may reject a node from the base images fixed so far, which
// prunes the whole subtree of that node.

#include <cstdint>
#include <span>
#include <vector>

#include "sylow/errors.hpp"
#include "sylow/perm_group.hpp"

namespace sylow::detail {

class SearchPredicate {
 public:
  virtual ~SearchPredicate() = default;
  /// Base points are fixed; called once before the walk.
  virtual void prepare(std::span<const Point> base) = 0;
  /// images[0..depth] are the images of base[0..depth].
  virtual bool node(std::size_t depth, std::span<const Point> images) = 0;
  virtual bool leaf(std::span<const Point> element) = 0;
};

/// Calls `on_leaf(element)` for each accepted leaf until it returns false.
/// Throws BudgetExceeded when more than budget().max_elements leaves are visited.
template <class OnLeaf>
void backtrack(const StabChain& chain, SearchPredicate& pred, OnLeaf&& on_leaf) {
  const auto& levels = chain.levels();
  const std::size_t degree = chain.degree();
  const std::size_t depth = levels.size();
  pred.prepare(chain.base());
  if (depth == 0) {
    Permutation id(degree);
    std::vector<Point> images;
    if (pred.leaf(id.images())) on_leaf(id.images());
    return;
  }
  const std::uint64_t limit = budget().max_elements;
  std::uint64_t leaves = 0;
  std::vector<std::vector<Point>> partial(depth, std::vector<Point>(degree));
  std::vector<Point> images(depth);
  std::vector<std::size_t> index(depth, 0);
  bool stop = false;

  // Explicit stack; index[k] is the next orbit position to try at level k.
  std::size_t k = 0;
  while (!stop) {
    const ChainLevel& lv = levels[k];
    if (index[k] == lv.orbit.size()) {
      if (k == 0) break;
      index[k] = 0;
      --k;
      continue;
    }
    const std::size_t i = index[k]++;
    const Point* prev = k == 0 ? nullptr : partial[k - 1].data();
    const Point orbit_point = lv.orbit[i];
    images[k] = prev ? prev[orbit_point] : orbit_point;
    if (!pred.node(k, std::span<const Point>(images.data(), k + 1))) continue;
    const Point* u = lv.transversal[i].data();
    Point* out = partial[k].data();
    if (prev)
      for (std::size_t x = 0; x < degree; ++x) out[x] = prev[u[x]];
    else
      for (std::size_t x = 0; x < degree; ++x) out[x] = u[x];
    if (k + 1 < depth) {
      ++k;
      continue;
    }
    if (++leaves > limit)
      throw BudgetExceeded("search visited more than " + std::to_string(limit) + " elements");
    std::span<const Point> element(partial[k]);
    if (pred.leaf(element) && !on_leaf(element)) stop = true;
  }
}

/// Base prefix that lists the points of each nontrivial orbit of `group`,
/// largest orbits first, each in breadth-first order from its smallest point.
std::vector<Point> orbit_ordered_base(const PermGroup& group);

/// Finds g with a_m^g = b_m for all pairs. Prunes on cycle lengths, on the
/// orbit partitions of <a_m> and <b_m>, and on base points linked by a_m.
class ConjugacyPredicate : public SearchPredicate {
 public:
  ConjugacyPredicate(std::vector<Permutation> sources, std::vector<Permutation> targets);

  void prepare(std::span<const Point> base) override;
  bool node(std::size_t depth, std::span<const Point> images) override;
  bool leaf(std::span<const Point> element) override;

  const std::vector<Permutation>& sources() const { return sources_; }

 private:
  struct Link {
    std::size_t gen, from, to;
  };
  std::vector<Permutation> sources_, targets_;
  std::vector<std::vector<std::uint32_t>> source_cycle_len_, target_cycle_len_;
  std::vector<std::uint32_t> source_orbit_, target_orbit_;
  std::vector<std::uint32_t> source_orbit_size_, target_orbit_size_;
  std::vector<Point> base_;
  std::vector<std::vector<Link>> links_;
};

/// Accepts g with H^g = H. Besides orbit invariants it keeps, per generator h
/// and depth, the elements of H still able to equal h^g (when |H| is small).
class NormalizerPredicate : public SearchPredicate {
 public:
  explicit NormalizerPredicate(const PermGroup& h);

  void prepare(std::span<const Point> base) override;
  bool node(std::size_t depth, std::span<const Point> images) override;
  bool leaf(std::span<const Point> element) override;

 private:
  struct Link {
    std::size_t gen, from, to;
  };
  PermGroup h_;
  std::vector<std::uint32_t> orbit_, orbit_size_;
  std::vector<Point> base_;
  std::vector<std::vector<Link>> links_;
  bool track_elements_ = false;
  std::size_t element_count_ = 0;
  std::vector<Point> elements_;  // flat, element e occupies [e*degree, (e+1)*degree)
  // candidates_[depth][gen]: indices into elements_, or inherited from depth-1.
  std::vector<std::vector<std::vector<std::uint32_t>>> candidates_;
  std::vector<std::vector<const std::vector<std::uint32_t>*>> current_;
  std::vector<std::uint32_t> all_;
  std::vector<Point> conj_, scratch_;
};

/// Builds a chain of `g` whose base starts with `prefix`, dropping levels
/// with trivial basic orbits.
StabChain search_chain(const PermGroup& g, std::span<const Point> prefix);

/// Collects all accepted leaves into a group. Leaves are counted; the count
/// must agree with the order of the group they generate.
PermGroup collect_group(const PermGroup& g, const StabChain& chain, SearchPredicate& pred);

}  // namespace sylow::detail
