#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hsw/perm.hpp"

namespace hsw {

class Algebra;

/// A finite group given by its multiplication table; elements are 0..order-1.
class FiniteGroupTable {
 public:
  /// `table[a * order + b]` is the product ab. Checks the group axioms and
  /// throws BadParameter if they fail.
  static FiniteGroupTable create(std::size_t order, std::vector<std::uint32_t> table,
                                 std::vector<std::string> labels = {});

  /// Z/n, element i is i.
  static FiniteGroupTable cyclic(std::size_t n);
  /// Element (h, g) has index h * |G| + g.
  static FiniteGroupTable direct_product(const FiniteGroupTable& h, const FiniteGroupTable& g);
  /// Elements must be closed under composition; indices follow the given order.
  static FiniteGroupTable from_permutations(const std::vector<Permutation>& elements);

  std::size_t order() const noexcept { return order_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * order_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t identity() const noexcept { return identity_; }
  const std::vector<std::uint32_t>& table() const noexcept { return table_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::uint64_t element_order(std::uint32_t a) const;
  bool is_abelian() const;
  /// Least element generating the whole group, if cyclic.
  std::optional<std::uint32_t> cyclic_generator() const;

 private:
  FiniteGroupTable() = default;

  std::size_t order_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::uint32_t identity_ = 0;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroupTable>;

bool is_subgroup(const FiniteGroupTable& g, const std::vector<std::uint32_t>& subset);
bool is_normal(const FiniteGroupTable& g, const std::vector<std::uint32_t>& subgroup);
/// Subgroup generated by `gens`, sorted.
std::vector<std::uint32_t> generated_subgroup(const FiniteGroupTable& g,
                                              const std::vector<std::uint32_t>& gens);
/// All subgroups, each sorted, ordered by (size, elements).
std::vector<std::vector<std::uint32_t>> all_subgroups(const FiniteGroupTable& g);

/// Table of the subgroup on `elements`; index i stands for elements[i].
FiniteGroupTable subgroup_table(const FiniteGroupTable& g, const std::vector<std::uint32_t>& elements);

struct Quotient {
  FiniteGroupTable table;
  std::vector<std::uint32_t> coset_of;                // element of G -> coset index
  std::vector<std::vector<std::uint32_t>> cosets;      // ordered by least element
};

/// G/U for normal U. Throws IncompatibleInputs if U is not a normal subgroup.
Quotient quotient(const FiniteGroupTable& g, const std::vector<std::uint32_t>& u);

/// Partition of a group into basic sets. Sets are kept sorted; the set
/// containing the identity comes first, the rest ordered by (size, least
/// element). Construction checks only that the sets partition G.
class SchurPartition {
 public:
  /// Throws InvalidPartition if the sets are not a partition of G.
  static SchurPartition make(GroupPtr group, std::vector<std::vector<std::uint32_t>> sets);
  static SchurPartition group_algebra(GroupPtr group);
  /// {e}, G \ {e}.
  static SchurPartition trivial(GroupPtr group);

  const FiniteGroupTable& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const std::vector<std::vector<std::uint32_t>>& sets() const noexcept { return sets_; }
  std::size_t rank() const noexcept { return sets_.size(); }
  std::uint32_t set_of(std::uint32_t g) const { return set_of_[g]; }

  bool operator==(const SchurPartition& other) const { return sets_ == other.sets_; }

 private:
  SchurPartition() = default;

  GroupPtr group_;
  std::vector<std::vector<std::uint32_t>> sets_;
  std::vector<std::uint32_t> set_of_;
};

struct InvalidWitness {
  std::size_t x = 0, y = 0;   // basic sets whose product fails
  std::uint32_t g = 0, h = 0; // two elements of one basic set with different coefficients
  std::int64_t coeff_g = 0, coeff_h = 0;
};

struct SchurValidation {
  bool valid = false;
  std::string reason;
  std::optional<InvalidWitness> witness;
  /// constants[(x * r + y) * r + z] = coefficient of Z in X * Y, when valid.
  std::vector<std::int64_t> constants;
};

SchurValidation validate(const SchurPartition& partition);

/// Schur partition of N induced by the point stabiliser of G, with Omega
/// identified with N through the base point 0 (beta <-> the x with 0^x = beta).
/// `n_elements` lists N; its order fixes the element indices of the result.
/// Throws NotTransitive, NotRegular.
SchurPartition from_regular_action(const PermGroup& g, const std::vector<Permutation>& n_elements);

/// Orbits of <auts> on G. Each automorphism is an image array on element
/// indices. Throws NotAutomorphism.
SchurPartition cyclotomic(GroupPtr group, const std::vector<std::vector<std::uint32_t>>& auts);

/// Multiplication by u on Z/n, as an image array.
std::vector<std::uint32_t> unit_automorphism(std::size_t n, std::uint32_t u);
/// Subgroups of (Z/n)^*, each given as a sorted list of units.
std::vector<std::vector<std::uint32_t>> unit_group_subgroups(std::size_t n);
/// Cyclotomic ring of Z/n for a subgroup of units.
SchurPartition cyclotomic_cyclic(std::size_t n, const std::vector<std::uint32_t>& units);

/// Basic sets X x Y over H x G (indices as in FiniteGroupTable::direct_product).
SchurPartition tensor(const SchurPartition& a, const SchurPartition& b);

/// Wedge product over G. `a_h` lives on subgroup_table(G, h) and `a_q` on
/// quotient(G, u).table. Throws IncompatibleInputs naming the failed
/// hypothesis.
SchurPartition wedge(GroupPtr g, const std::vector<std::uint32_t>& h, const SchurPartition& a_h,
                     const std::vector<std::uint32_t>& u, const SchurPartition& a_q);

/// Every Schur partition of G, sorted by basic-set list. Throws GroupTooLarge
/// above order 16.
std::vector<SchurPartition> enumerate_all(GroupPtr group);

/// Plain set-partition search without pruning, used as a cross-check.
/// Throws GroupTooLarge above order 10.
std::vector<SchurPartition> enumerate_all_naive(GroupPtr group);

enum class SchurClass { Trivial, Cyclotomic, Tensor, Wedge, Unclassified };
std::string to_string(SchurClass c);

struct Classification {
  SchurClass label = SchurClass::Unclassified;
  std::string detail;
};

/// Tries, in order: trivial (rank 2 or the group algebra), cyclotomic
/// (every subgroup of the unit group), tensor (coprime A-subgroups), wedge
/// (A-subgroups 1 < U <= H < G). Throws NotCyclic.
Classification classify_cyclic(const SchurPartition& a);

/// Basis = basic sets, unit = the identity set. Throws InvalidPartition if
/// the partition is not a Schur ring.
Algebra to_algebra(const SchurPartition& a, std::uint32_t p, unsigned k = 1);

}  // namespace hsw
