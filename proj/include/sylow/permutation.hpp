#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sylow/bigint.hpp"

namespace sylow {

/// Points are 0-indexed internally. Cycle notation on the boundary is 1-indexed.
using Point = std::uint16_t;

inline constexpr std::size_t kMaxDegree = 65535;

/// A bijection of {0, ..., degree-1}.
///
/// Products follow the "apply left first" convention: `compose(a, b)` maps
/// x to b(a(x)). Conjugation is right conjugation, `h^g = g^-1 h g`, which
/// sends g(x) to g(h(x)).
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// No validation; the caller guarantees `images` is a bijection.
  static Permutation unchecked(std::vector<Point> images) noexcept {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Builds from 0-indexed disjoint cycles.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }
  const Point* data() const noexcept { return images_.data(); }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;

  /// Order as the lcm of the cycle lengths.
  BigInt order() const;

  /// Cycles of length > 1, each starting at its smallest point, sorted by it.
  std::vector<std::vector<Point>> cycles() const;

  /// Smallest point not fixed, or degree() for the identity.
  std::size_t smallest_moved_point() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// Apply `a` first, then `b`. Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

/// h^g = g^-1 h g.
Permutation conjugate(const Permutation& h, const Permutation& g);

/// [a, b] = a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

/// 1-indexed cycle notation, e.g. "(1,2,3)(4,5)"; identity is "()".
std::string to_cycle_string(const Permutation& p);

/// Parses 1-indexed cycle notation. Accepts "()" and whitespace; commas
/// between points are optional when points are separated by spaces.
Permutation parse_cycles(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace sylow
