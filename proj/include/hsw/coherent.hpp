#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hsw/gfield.hpp"
#include "hsw/perm.hpp"

namespace hsw {

class Algebra;

struct Orbital {
  std::size_t id = 0;
  std::pair<Point, Point> representative;  // first pair reached, 0-based
  std::uint64_t valency = 0;               // |{b : (rep.first, b) in r}|
  std::uint64_t size = 0;                  // number of pairs
  bool reflexive = false;
  std::size_t paired = 0;                  // id of r*
};

/// Partition of Omega x Omega into basic relations together with the
/// intersection numbers c[t][r][s] = #{g : (a,g) in r, (g,b) in s} for the
/// representative (a,b) of t. Intersection numbers are kept as integers and
/// reduced per characteristic on demand.
class CoherentConfig {
 public:
  /// Orbitals of `group`, numbered in order of their first pair under the
  /// lexicographic scan of Omega x Omega.
  static CoherentConfig from_group(const PermGroup& group);

  /// Arbitrary labelling of pairs (row-major n*n ids 0..m-1). Intersection
  /// numbers are read off each relation's first pair without checking.
  static CoherentConfig from_partition(std::size_t degree, std::vector<std::uint32_t> pair_labels);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t rank() const noexcept { return orbitals_.size(); }
  const std::vector<Orbital>& orbitals() const noexcept { return orbitals_; }
  bool transitive() const noexcept { return transitive_; }

  std::uint32_t relation_of(Point a, Point b) const { return pair_labels_[a * degree_ + b]; }
  const std::vector<std::uint32_t>& pair_labels() const noexcept { return pair_labels_; }

  std::int64_t c(std::size_t t, std::size_t r, std::size_t s) const {
    const std::size_t m = rank();
    return tensor_[(t * m + r) * m + s];
  }
  const std::vector<std::int64_t>& tensor() const noexcept { return tensor_; }

  /// Valencies of the relations leaving point 0, sorted; for a transitive
  /// group these are the subdegrees.
  std::vector<std::uint64_t> subdegrees() const;

  /// Reflexive relation on the diagonal of the source orbit of r.
  std::size_t source_identity(std::size_t r) const;

 private:
  CoherentConfig() = default;
  void finish(bool transitive);

  std::size_t degree_ = 0;
  std::vector<std::uint32_t> pair_labels_;
  std::vector<Orbital> orbitals_;
  std::vector<std::int64_t> tensor_;
  bool transitive_ = false;
};

CoherentConfig orbitals(const PermGroup& group);

/// Recomputes c[t][r][s] and spot-checks each relation on a second pair.
/// Throws AxiomViolation on disagreement.
std::vector<std::int64_t> intersection_numbers(const CoherentConfig& config);

struct AxiomReport {
  bool partition = true;        // every pair in exactly one relation
  bool diagonal_union = true;   // reflexive relations tile the diagonal
  bool closed_under_star = true;
  bool constant_intersections = true;
  bool triple_identity = true;
  std::vector<std::string> failures;

  bool all_pass() const {
    return partition && diagonal_union && closed_under_star && constant_intersections &&
           triple_identity;
  }
};

/// Exhaustive check of the coherent-configuration axioms and of the identity
/// |t| c^{t*}_{rs} = |r| c^{r*}_{st} = |s| c^{s*}_{tr}.
AxiomReport verify_axioms(const CoherentConfig& config);

/// Adjacency algebra over GF(p^k); basis indexed by relations, unit = sum of
/// reflexive relations.
Algebra to_algebra(const CoherentConfig& config, std::uint32_t p, unsigned k = 1);

struct SymmetrizingForm {
  gf::Matrix gram;     // gram(k,l) = c^{1_{Omega(s_k)}}_{s_k s_l}
  bool nondegenerate = false;
  bool symmetric = false;
};

SymmetrizingForm symmetrizing_form(const CoherentConfig& config, std::uint32_t p, unsigned k = 1);

/// Dimension of the commutant {X : P_s X = X P_s for every generator s}
/// over GF(p^k), by sparse elimination on the n^2 unknowns. Throws
/// DegreeTooLarge beyond `max_degree`.
std::size_t centralizer_dimension_oracle(const PermGroup& group, std::uint32_t p, unsigned k = 1,
                                         std::size_t max_degree = 30);

/// Checks A_r A_s = sum_t c^t_{rs} A_t as integer matrices.
bool matrix_model_holds(const CoherentConfig& config);

}  // namespace hsw
