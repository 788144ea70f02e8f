#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "sylow/bigint.hpp"
#include "sylow/permutation.hpp"

namespace sylow {

/// Global work limits. Operations that would exceed them throw BudgetExceeded.
struct Budget {
  /// Group elements streamed, or search-tree leaves visited, per operation.
  std::uint64_t max_elements = 30'000'000;
  /// Conjugacy-class size limit for orbit-based reality tests.
  std::uint64_t max_class_size = 1'000'000;
};

Budget budget();
void set_budget(const Budget& b);

/// Restores the previous budget on scope exit.
class ScopedBudget {
 public:
  explicit ScopedBudget(const Budget& b) : saved_(budget()) { set_budget(b); }
  ~ScopedBudget() { set_budget(saved_); }
  ScopedBudget(const ScopedBudget&) = delete;
  ScopedBudget& operator=(const ScopedBudget&) = delete;

 private:
  Budget saved_;
};

struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> generators;    // fix every earlier base point
  std::vector<Point> orbit;               // basic orbit, discovery order
  std::vector<std::int32_t> orbit_index;  // point -> position in orbit, or -1
  std::vector<Permutation> transversal;   // transversal[i] maps base to orbit[i]
  std::vector<Permutation> inverse_transversal;
};

/// Stabilizer chain built by deterministic Schreier-Sims.
///
/// An element factors uniquely as g = u_m * ... * u_1 (u_m applied first)
/// with u_i taken from the transversal of level i.
class StabChain {
 public:
  StabChain() = default;

  /// The base starts with `base_prefix` (in order); further points are the
  /// smallest moved point of the generator that needs them.
  static StabChain build(std::size_t degree, std::span<const Permutation> generators,
                         std::span<const Point> base_prefix = {});

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<ChainLevel>& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;
  BigInt order() const;

  bool contains(const Permutation& g) const;

  /// Membership test on raw images; `scratch` is reused between calls.
  bool contains(std::span<const Point> images, std::vector<Point>& scratch) const;

  /// Uniformly random element for the given engine.
  Permutation random_element(std::mt19937_64& rng) const;

  /// Drops levels whose basic orbit has length 1.
  void strip_trivial_levels();

 private:
  std::size_t degree_ = 0;
  std::vector<ChainLevel> levels_;
};

class ElementStream;

/// A permutation group given by generators, with its stabilizer chain.
/// Immutable; copies share the chain.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return impl_->degree; }
  const std::vector<Permutation>& generators() const noexcept { return impl_->generators; }
  const StabChain& chain() const noexcept { return impl_->chain; }
  const BigInt& order() const noexcept { return impl_->order; }
  std::vector<Point> base() const { return impl_->chain.base(); }

  bool is_trivial() const noexcept { return impl_->order == 1; }

  /// Throws std::invalid_argument on degree mismatch.
  bool contains(const Permutation& g) const;

  /// Deterministic stream over all elements. Throws BudgetExceeded when the
  /// order exceeds budget().max_elements.
  ElementStream elements() const;

  std::vector<Point> orbit(Point x) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  Permutation identity() const { return Permutation(degree()); }
  Permutation random_element(std::mt19937_64& rng) const { return chain().random_element(rng); }

 private:
  struct Impl {
    std::size_t degree;
    std::vector<Permutation> generators;
    StabChain chain;
    BigInt order;
  };
  std::shared_ptr<const Impl> impl_;
};

PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> generators);

/// Streams elements in the lexicographic order of transversal indices,
/// level 1 outermost. Nothing beyond one partial product per level is stored.
class ElementStream {
 public:
  explicit ElementStream(const PermGroup& group);

  std::optional<Permutation> next();

 private:
  PermGroup group_;
  std::vector<std::size_t> index_;
  std::vector<Permutation> partial_;
  bool started_ = false;
  bool done_ = false;
};

/// A subgroup together with the group it lives in.
struct Subgroup {
  PermGroup parent;
  PermGroup group;

  const BigInt& order() const noexcept { return group.order(); }
  const std::vector<Permutation>& generators() const noexcept { return group.generators(); }
  bool contains(const Permutation& g) const { return group.contains(g); }
};

/// Wraps `generators` as a subgroup of `parent`; throws std::invalid_argument
/// if one of them is not in `parent`.
Subgroup make_subgroup(const PermGroup& parent, std::vector<Permutation> generators);

/// The whole group as a subgroup of itself.
Subgroup whole(const PermGroup& g);

/// Same element set: two-sided generator membership plus equal orders.
bool same_group(const PermGroup& a, const PermGroup& b);

/// H^g, generated by h^g for the generators h of H. Throws std::invalid_argument
/// if g is not in the parent of H.
Subgroup conjugate_subgroup(const Subgroup& h, const Permutation& g);

}  // namespace sylow
