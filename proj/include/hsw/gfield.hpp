#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hsw::gf {

/// Field elements are encoded as integers: c_0 + c_1 p + ... + c_{k-1} p^{k-1}
/// for the residue class c_0 + c_1 x + ... of F_p[x]/(modulus). The prime
/// field F_p is therefore the range [0, p) in every extension.
using Elem = std::uint64_t;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

/// Polynomials over F_p as coefficient vectors, lowest degree first.
using Poly = std::vector<std::uint32_t>;

/// Rabin's test: f of degree k is irreducible iff x^{p^k} = x mod f and
/// gcd(x^{p^{k/r}} - x, f) = 1 for every prime r | k.
bool is_irreducible(std::uint32_t p, const Poly& f);

class Field {
 public:
  /// F_{p^k} with the smallest monic irreducible modulus of degree k in the
  /// integer encoding of its low coefficients. Throws NotPrime, BadParameter.
  static Field make(std::uint32_t p, unsigned k = 1);

  /// Throws NotPrime, BadParameter (not monic / reducible).
  static Field with_modulus(std::uint32_t p, Poly modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return q_; }
  const Poly& modulus() const noexcept { return modulus_; }
  bool is_prime_field() const noexcept { return k_ == 1; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  Elem from_int(std::int64_t value) const noexcept;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// Throws DimensionMismatch-free domain error (BadParameter) on zero.
  Elem inv(Elem a) const;

  Poly digits(Elem a) const;
  Elem from_digits(const Poly& coefficients) const;

  /// Smallest element (by encoding) of multiplicative order q - 1.
  Elem primitive_element() const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(std::uint32_t p, Poly modulus);

  std::uint32_t p_ = 2;
  unsigned k_ = 1;
  std::uint64_t q_ = 2;
  Poly modulus_;
};

/// Embedding of a subfield into an extension of it, determined by the image
/// of the generator x of the smaller field (the least root of its modulus).
class Embedding {
 public:
  /// Throws FieldMismatch unless from.degree() divides to.degree() and the
  /// characteristics agree.
  Embedding(const Field& from, const Field& to);

  const Field& source() const noexcept { return from_; }
  const Field& target() const noexcept { return to_; }
  Elem operator()(Elem a) const;

 private:
  Field from_;
  Field to_;
  std::vector<Elem> generator_powers_;
};

/// Dense row-major matrix of encoded field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Elem fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  void append_row(std::span<const Elem> values);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

struct RowReduction {
  Matrix reduced;                    // reduced row-echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank = 0;
  std::optional<Elem> determinant;   // square inputs only
};

/// Gauss-Jordan elimination, pivot = first nonzero entry scanning rows in
/// order within each column.
RowReduction row_reduce(const Field& f, Matrix m);

Elem determinant(const Field& f, Matrix m);
std::size_t rank(const Field& f, const Matrix& m);

/// Basis (as rows, in RREF) of {x : M x = 0}.
Matrix nullspace(const Field& f, const Matrix& m);

/// Basis (as rows, in RREF) of the row space.
Matrix row_space(const Field& f, const Matrix& m);

std::optional<Matrix> inverse(const Field& f, const Matrix& m);

struct DetRankSolve {
  std::optional<Elem> determinant;
  std::size_t rank = 0;
  /// X with M X = rhs, when a right-hand side was given and is consistent.
  std::optional<Matrix> particular;
  bool consistent = true;
  Matrix nullspace;
};

/// Throws DimensionMismatch if rhs has a different row count.
DetRankSolve det_rank_solve(const Field& f, const Matrix& m,
                            const std::optional<Matrix>& rhs = std::nullopt);

/// Incremental Gaussian elimination over sparse rows. Used where the systems
/// are large but each equation touches only a handful of unknowns.
class SparseEchelon {
 public:
  using Row = std::vector<std::pair<std::size_t, Elem>>;  // sorted by column

  SparseEchelon(const Field& f, std::size_t columns) : field_(f), columns_(columns) {}

  /// Returns true if the row was independent of the rows added so far.
  bool add(Row row);
  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t columns() const noexcept { return columns_; }

 private:
  Field field_;
  std::size_t columns_;
  std::map<std::size_t, Row> pivots_;  // leading column -> monic row
};

}  // namespace hsw::gf
