#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hsw {

using Point = std::uint32_t;

/// Permutation of {0..n-1} stored as an image array. Points are 0-based
/// internally; everything that talks to users (parsing, printing, JSON) is
/// 1-based. Composition is a right action: (i)(p*q) = ((i)p)q.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);

  /// Validates bijectivity. Throws PointOutOfRange / RepeatedPoint.
  static Permutation from_images(std::vector<Point> images);
  static Permutation from_images_1based(std::span<const std::int64_t> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  const std::vector<Point>& images() const noexcept { return images_; }
  std::vector<std::int64_t> images_1based() const;

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Number of points moved plus the cycle type.
  std::vector<std::size_t> cycle_lengths() const;
  bool is_full_cycle() const;

  /// "(1 2 3)(4 5)", or "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// Right-action product: i -> q(p(i)). Throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation operator*(const Permutation& p, const Permutation& q);

/// Parses a product of disjoint cycles in 1-based cycle notation, e.g.
/// "(1 2 3 4)", "(1,3)(2,4)" or "()". Whitespace is ignored.
Permutation parse_permutation(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

inline constexpr std::uint64_t kDefaultElementCap = 200000;

/// A finitely generated permutation group. The element list is computed on
/// demand and cached; copies share the cache.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  /// Breadth-first closure, identity first. Throws CapExceeded.
  const std::vector<Permutation>& elements(std::uint64_t cap = kDefaultElementCap) const;

  /// Group order if the closure fits under `cap`, otherwise nullopt.
  std::optional<std::uint64_t> order(std::uint64_t cap = kDefaultElementCap) const;

  bool contains(const Permutation& g, std::uint64_t cap = kDefaultElementCap) const;

 private:
  struct Cache;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

std::vector<Permutation> enumerate_elements(const PermGroup& group,
                                            std::uint64_t cap = kDefaultElementCap);

/// Orbit partition of {0..n-1}; each cell sorted, cells ordered by least point.
std::vector<std::vector<Point>> orbits(const PermGroup& group);
bool is_transitive(const PermGroup& group);

/// Throws NotTransitive.
bool is_primitive(const PermGroup& group);

/// Smallest block of imprimitivity containing points a and b.
std::vector<Point> minimal_block(const PermGroup& group, Point a, Point b);

struct RegularityCheck {
  bool regular = false;
  /// False when the ambient group could not be enumerated, so membership of
  /// the candidate generators in it was not checked.
  bool membership_verified = false;
  std::uint64_t subgroup_order = 0;
};

/// Throws NotMember if a generator lies outside an enumerable ambient group,
/// CapExceeded if the subgroup closure exceeds `cap`.
RegularityCheck is_regular_subgroup(const PermGroup& group,
                                    std::span<const Permutation> sub_generators,
                                    std::uint64_t cap = kDefaultElementCap);

/// First n-cycle in enumeration order, if any. Throws CapExceeded.
std::optional<Permutation> find_cyclic_regular(const PermGroup& group,
                                               std::uint64_t cap = kDefaultElementCap);

/// Powers c^0, c^1, ..., c^{ord-1}.
std::vector<Permutation> cyclic_powers(const Permutation& c);

bool is_abelian(std::span<const Permutation> generators);

}  // namespace hsw
