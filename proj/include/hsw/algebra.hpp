#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hsw/gfield.hpp"

namespace hsw {

/// Finite-dimensional unital associative algebra over GF(p^k), given by
/// structure constants b_i b_j = sum_l c(i,j,l) b_l.
class Algebra {
 public:
  /// Validates associativity on all basis triples and the unit.
  /// Throws NotAssociative, DimensionMismatch or BadParameter (bad unit).
  static Algebra create(gf::Field field, std::vector<std::string> labels,
                        std::vector<gf::Elem> constants, std::vector<gf::Elem> unit);

  static Algebra from_integers(gf::Field field, std::vector<std::string> labels,
                               std::span<const std::int64_t> constants,
                               std::span<const std::int64_t> unit);

  const gf::Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<gf::Elem>& constants() const noexcept { return constants_; }
  const std::vector<gf::Elem>& unit() const noexcept { return unit_; }

  gf::Elem c(std::size_t i, std::size_t j, std::size_t l) const {
    return constants_[(i * dim_ + j) * dim_ + l];
  }

  std::vector<gf::Elem> multiply(std::span<const gf::Elem> a, std::span<const gf::Elem> b) const;
  bool is_commutative() const;

 private:
  Algebra() : field_(gf::Field::make(2)) {}

  gf::Field field_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<gf::Elem> constants_;
  std::vector<gf::Elem> unit_;
};

/// Throws FieldMismatch.
Algebra direct_sum(const Algebra& a, const Algebra& b);
Algebra tensor_product(const Algebra& a, const Algebra& b);

/// Same algebra in the basis b'_i = sum_j P(i,j) b_j. Throws BadParameter if
/// P is singular.
Algebra change_basis(const Algebra& a, const gf::Matrix& p);

/// Rows span {b_i b_j - b_j b_i}, in RREF.
gf::Matrix commutator_space(const Algebra& a);

/// Rows form the RREF basis of the functionals vanishing on [A,A]; these are
/// exactly the functionals whose trace form lambda(ab) is symmetric.
gf::Matrix central_functionals(const Algebra& a);

/// gram(u,v) = lambda(b_u b_v).
gf::Matrix gram_matrix(const Algebra& a, std::span<const gf::Elem> functional);

enum class FormKind { Symmetric, Frobenius };
enum class DecisionMode { Deterministic, Randomized };
enum class Proof { Exact, Probabilistic };

struct DecisionOptions {
  DecisionMode mode = DecisionMode::Deterministic;
  std::uint64_t seed = 0;
  unsigned trials = 64;
  std::uint64_t grid_budget = 10'000'000;
  /// In deterministic mode, fall back to randomized search instead of
  /// throwing ModeInfeasible when the grid exceeds the budget.
  bool randomized_fallback = false;
};

/// A point of the pencil where det G(t) != 0, over GF(p^k) with the given
/// modulus. Coordinates refer to the pencil basis (central_functionals for
/// symmetric forms, the coordinate functionals for Frobenius forms).
struct Certificate {
  std::uint32_t p = 2;
  unsigned k = 1;
  gf::Poly modulus;
  std::vector<gf::Elem> point;
};

struct FormVerdict {
  FormKind kind = FormKind::Symmetric;
  bool holds = false;
  Proof proof = Proof::Exact;
  /// "probe", "eigenspace", "grid", "randomized", "brute_force" or
  /// "empty_pencil".
  std::string method;
  std::size_t pencil_dimension = 0;
  std::uint64_t evaluations = 0;
  unsigned trials = 0;
  double error_bound = 0.0;
  std::optional<Certificate> certificate;
};

/// Decides whether A admits a nondegenerate associative (and, for
/// FormKind::Symmetric, symmetric) bilinear form after extension to the
/// algebraic closure, i.e. whether det G(t) is a nonzero polynomial.
///
/// Deterministic mode probes a few pseudo-random points (fixed internal
/// seed) and otherwise evaluates the full grid S^m with |S| = dim + 1, which
/// proves vanishing because det G(t) has degree at most dim. Randomized mode
/// evaluates `trials` points over GF(p^K), p^K >= 2^20; a negative answer then
/// carries error bound (dim / p^K)^trials. Positive answers always carry a
/// certificate. Throws ModeInfeasible when the grid exceeds the budget and no
/// fallback is allowed.
FormVerdict decide_form(const Algebra& a, FormKind kind, const DecisionOptions& options = {});
FormVerdict is_symmetric(const Algebra& a, const DecisionOptions& options = {});
FormVerdict is_frobenius(const Algebra& a, const DecisionOptions& options = {});

/// Re-evaluates det G(t*) at the certificate point.
bool verify_certificate(const Algebra& a, FormKind kind, const Certificate& certificate);

/// Exhaustive search over all points of the pencil with coordinates in the
/// algebra's own field. Throws SearchSpaceTooLarge if q^m > limit.
FormVerdict brute_force_form_search(const Algebra& a, bool symmetric_only,
                                    std::uint64_t limit = 1'000'000);

std::string to_string(FormKind kind);

}  // namespace hsw
