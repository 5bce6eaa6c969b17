#include "hsw/algebra.hpp"

#include <cmath>
#include <random>

#include "hsw/error.hpp"

namespace hsw {

using gf::Elem;
using gf::Field;
using gf::Matrix;

Algebra Algebra::create(Field field, std::vector<std::string> labels, std::vector<Elem> constants,
                        std::vector<Elem> unit) {
  const std::size_t n = labels.size();
  if (constants.size() != n * n * n || unit.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "structure constants do not match dimension " + std::to_string(n));
  for (Elem x : constants)
    if (x >= field.order()) throw Error(ErrorKind::BadParameter, "structure constant outside the field");

  Algebra a;
  a.field_ = std::move(field);
  a.dim_ = n;
  a.labels_ = std::move(labels);
  a.constants_ = std::move(constants);
  a.unit_ = std::move(unit);
  const Field& f = a.field_;

  // (b_i b_j) b_l == b_i (b_j b_l)
  std::vector<Elem> lhs(n), rhs(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (std::size_t x = 0; x < n; ++x) {
          const Elem ij = a.c(i, j, x);
          if (ij != 0)
            for (std::size_t y = 0; y < n; ++y)
              if (a.c(x, l, y) != 0) lhs[y] = f.add(lhs[y], f.mul(ij, a.c(x, l, y)));
          const Elem jl = a.c(j, l, x);
          if (jl != 0)
            for (std::size_t y = 0; y < n; ++y)
              if (a.c(i, x, y) != 0) rhs[y] = f.add(rhs[y], f.mul(jl, a.c(i, x, y)));
        }
        if (lhs != rhs)
          throw Error(ErrorKind::NotAssociative, "(b" + std::to_string(i) + " b" + std::to_string(j) +
                                                     ") b" + std::to_string(l) + " differs from b" +
                                                     std::to_string(i) + " (b" + std::to_string(j) +
                                                     " b" + std::to_string(l) + ")");
      }

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Elem> basis(n, 0);
    basis[i] = 1;
    if (a.multiply(a.unit_, basis) != basis || a.multiply(basis, a.unit_) != basis)
      throw Error(ErrorKind::BadParameter, "given unit does not act as identity on b" + std::to_string(i));
  }
  return a;
}

Algebra Algebra::from_integers(Field field, std::vector<std::string> labels,
                               std::span<const std::int64_t> constants,
                               std::span<const std::int64_t> unit) {
  std::vector<Elem> c(constants.size()), u(unit.size());
  for (std::size_t i = 0; i < constants.size(); ++i) c[i] = field.from_int(constants[i]);
  for (std::size_t i = 0; i < unit.size(); ++i) u[i] = field.from_int(unit[i]);
  return create(std::move(field), std::move(labels), std::move(c), std::move(u));
}

std::vector<Elem> Algebra::multiply(std::span<const Elem> a, std::span<const Elem> b) const {
  const Field& f = field_;
  std::vector<Elem> out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      const Elem ab = f.mul(a[i], b[j]);
      for (std::size_t l = 0; l < dim_; ++l)
        if (c(i, j, l) != 0) out[l] = f.add(out[l], f.mul(ab, c(i, j, l)));
    }
  }
  return out;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t l = 0; l < dim_; ++l)
        if (c(i, j, l) != c(j, i, l)) return false;
  return true;
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "direct sum over different fields");
  const std::size_t n = a.dim(), m = b.dim(), d = n + m;
  std::vector<Elem> c(d * d * d, 0), unit(d, 0);
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("A." + l);
  for (const auto& l : b.labels()) labels.push_back("B." + l);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) c[(i * d + j) * d + l] = a.c(i, j, l);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l) c[((n + i) * d + n + j) * d + n + l] = b.c(i, j, l);
  for (std::size_t i = 0; i < n; ++i) unit[i] = a.unit()[i];
  for (std::size_t i = 0; i < m; ++i) unit[n + i] = b.unit()[i];
  return Algebra::create(a.field(), std::move(labels), std::move(c), std::move(unit));
}

Algebra tensor_product(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "tensor product over different fields");
  const Field& f = a.field();
  const std::size_t n = a.dim(), m = b.dim(), d = n * m;
  std::vector<Elem> c(d * d * d, 0), unit(d, 0);
  std::vector<std::string> labels;
  for (const auto& x : a.labels())
    for (const auto& y : b.labels()) labels.push_back(x + "*" + y);
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t i2 = 0; i2 < m; ++i2)
      for (std::size_t j1 = 0; j1 < n; ++j1)
        for (std::size_t j2 = 0; j2 < m; ++j2)
          for (std::size_t l1 = 0; l1 < n; ++l1) {
            const Elem x = a.c(i1, j1, l1);
            if (x == 0) continue;
            for (std::size_t l2 = 0; l2 < m; ++l2)
              c[((i1 * m + i2) * d + j1 * m + j2) * d + l1 * m + l2] = f.mul(x, b.c(i2, j2, l2));
          }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) unit[i * m + j] = f.mul(a.unit()[i], b.unit()[j]);
  return Algebra::create(f, std::move(labels), std::move(c), std::move(unit));
}

Algebra change_basis(const Algebra& a, const Matrix& p) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  if (p.rows() != n || p.cols() != n) throw Error(ErrorKind::DimensionMismatch, "basis change must be n x n");
  auto p_inv = gf::inverse(f, p);
  if (!p_inv) throw Error(ErrorKind::BadParameter, "basis change matrix is singular");
  // old coordinates v (row) -> new coordinates v P^{-1}
  auto to_new = [&](const std::vector<Elem>& v) {
    std::vector<Elem> out(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      for (std::size_t l = 0; l < n; ++l) out[l] = f.add(out[l], f.mul(v[j], (*p_inv)(j, l)));
    }
    return out;
  };
  std::vector<Elem> c(n * n * n, 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto row_i = p.row(i);
      auto row_j = p.row(j);
      auto prod = to_new(a.multiply(row_i, row_j));
      for (std::size_t l = 0; l < n; ++l) c[(i * n + j) * n + l] = prod[l];
    }
  return Algebra::create(f, std::move(labels), std::move(c), to_new(a.unit()));
}

Matrix commutator_space(const Algebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  Matrix m(0, n);
  std::vector<Elem> row(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool nonzero = false;
      for (std::size_t l = 0; l < n; ++l) {
        row[l] = f.sub(a.c(i, j, l), a.c(j, i, l));
        nonzero = nonzero || row[l] != 0;
      }
      if (nonzero) m.append_row(row);
    }
  return gf::row_space(f, m);
}

Matrix central_functionals(const Algebra& a) {
  Matrix comm = commutator_space(a);
  if (comm.rows() == 0) return Matrix::identity(a.dim());
  return gf::nullspace(a.field(), comm);
}

Matrix gram_matrix(const Algebra& a, std::span<const Elem> functional) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  Matrix g(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      Elem s = 0;
      for (std::size_t l = 0; l < n; ++l)
        if (functional[l] != 0 && a.c(u, v, l) != 0) s = f.add(s, f.mul(functional[l], a.c(u, v, l)));
      g(u, v) = s;
    }
  return g;
}

std::string to_string(FormKind kind) { return kind == FormKind::Symmetric ? "symmetric" : "frobenius"; }

namespace {

constexpr std::uint64_t kProbeSeed = 0x9E3779B97F4A7C15ULL;
constexpr unsigned kProbePoints = 8;

Matrix pencil_basis(const Algebra& a, FormKind kind) {
  return kind == FormKind::Symmetric ? central_functionals(a) : Matrix::identity(a.dim());
}

// Gram matrices of the basis functionals, embedded in an extension field.
class Pencil {
 public:
  Pencil(const Algebra& a, const Matrix& basis, const Field& target)
      : field_(target), n_(a.dim()), m_(basis.rows()) {
    gf::Embedding embed(a.field(), target);
    grams_.reserve(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      Matrix g = gram_matrix(a, basis.row(i));
      Matrix e(n_, n_);
      for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = 0; v < n_; ++v) e(u, v) = embed(g(u, v));
      grams_.push_back(std::move(e));
    }
  }

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return m_; }

  Elem det_at(std::span<const Elem> t) const {
    Matrix g(n_, n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (t[i] == 0) continue;
      for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = 0; v < n_; ++v)
          if (grams_[i](u, v) != 0) g(u, v) = field_.add(g(u, v), field_.mul(t[i], grams_[i](u, v)));
    }
    return gf::determinant(field_, std::move(g));
  }

 private:
  Field field_;
  std::size_t n_;
  std::size_t m_;
  std::vector<Matrix> grams_;
};

// Least multiple K of `base` with p^K >= bound.
Field extension_at_least(const Field& base, long double bound) {
  unsigned k = base.degree();
  for (;;) {
    long double size = 1;
    for (unsigned i = 0; i < k; ++i) size *= base.characteristic();
    if (size >= bound) break;
    k += base.degree();
  }
  if (k == base.degree()) return base;
  return Field::make(base.characteristic(), k);
}

Certificate make_certificate(const Field& f, std::vector<Elem> point) {
  return Certificate{f.characteristic(), f.degree(), f.modulus(), std::move(point)};
}

// Searches random points; fills verdict on success.
bool random_search(const Pencil& pencil, std::mt19937_64& rng, unsigned count, FormVerdict& verdict) {
  const std::uint64_t q = pencil.field().order();
  std::vector<Elem> t(pencil.size());
  for (unsigned trial = 0; trial < count; ++trial) {
    for (auto& x : t) x = rng() % q;
    ++verdict.evaluations;
    if (pencil.det_at(t) != 0) {
      verdict.holds = true;
      verdict.certificate = make_certificate(pencil.field(), t);
      return true;
    }
  }
  return false;
}

// A subspace of dimension >= 2 on which every basis element acts by one
// scalar: each functional kills some x there, and Kx is then a left ideal
// inside its kernel, so no form is nondegenerate. Searched over the base
// field only, branching on the eigenvalue of each basis element.
bool scalar_eigenspace(const Algebra& a, std::size_t i, const Matrix& space) {
  if (space.rows() < 2) return false;
  if (i == a.dim()) return true;
  const Field& f = a.field();
  const std::size_t n = a.dim(), k = space.rows();
  // columns: (e_i * s_j) as vectors in A
  Matrix image(n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t v = 0; v < n; ++v) {
      const Elem x = space(j, v);
      if (x == 0) continue;
      for (std::size_t l = 0; l < n; ++l)
        if (a.c(i, v, l) != 0) image(l, j) = f.add(image(l, j), f.mul(x, a.c(i, v, l)));
    }
  for (Elem c = 0; c < f.order(); ++c) {
    Matrix m = image;
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < n; ++l) m(l, j) = f.sub(m(l, j), f.mul(c, space(j, l)));
    const Matrix coeffs = gf::nullspace(f, m);
    if (coeffs.rows() < 2) continue;
    if (scalar_eigenspace(a, i + 1, multiply(f, coeffs, space))) return true;
  }
  return false;
}

constexpr std::uint64_t kEigenFieldLimit = 256;

}  // namespace

FormVerdict decide_form(const Algebra& a, FormKind kind, const DecisionOptions& options) {
  FormVerdict verdict;
  verdict.kind = kind;
  const Matrix basis = pencil_basis(a, kind);
  const std::size_t n = a.dim(), m = basis.rows();
  verdict.pencil_dimension = m;

  if (m == 0) {
    verdict.holds = n == 0;
    verdict.method = "empty_pencil";
    return verdict;
  }

  const Field big = extension_at_least(a.field(), static_cast<long double>(1u << 20));

  auto randomized = [&](FormVerdict& v) {
    v.method = "randomized";
    v.trials = options.trials;
    std::mt19937_64 rng(options.seed);
    Pencil pencil(a, basis, big);
    if (random_search(pencil, rng, options.trials, v)) {
      v.proof = Proof::Exact;
      return;
    }
    v.holds = false;
    v.proof = Proof::Probabilistic;
    v.error_bound = std::pow(static_cast<double>(n) / static_cast<double>(big.order()), options.trials);
  };

  if (options.mode == DecisionMode::Randomized) {
    randomized(verdict);
    return verdict;
  }

  // probe: base field first so certificates stay rational where possible
  std::mt19937_64 rng(kProbeSeed);
  verdict.method = "probe";
  if (random_search(Pencil(a, basis, a.field()), rng, kProbePoints, verdict)) return verdict;
  if (random_search(Pencil(a, basis, big), rng, kProbePoints, verdict)) return verdict;

  if (a.field().order() <= kEigenFieldLimit && scalar_eigenspace(a, 0, Matrix::identity(n))) {
    verdict.method = "eigenspace";
    verdict.holds = false;
    verdict.proof = Proof::Exact;
    return verdict;
  }

  // exhaustive grid S^m, |S| = n + 1 > deg det G(t)
  const Field grid_field = extension_at_least(a.field(), static_cast<long double>(n + 1));
  long double grid_size = 1;
  for (std::size_t i = 0; i < m; ++i) grid_size *= static_cast<long double>(n + 1);
  if (grid_size > static_cast<long double>(options.grid_budget)) {
    if (!options.randomized_fallback)
      throw Error(ErrorKind::ModeInfeasible,
                  "deterministic grid of " + std::to_string(n + 1) + "^" + std::to_string(m) +
                      " points exceeds the budget of " + std::to_string(options.grid_budget));
    FormVerdict fallback;
    fallback.kind = kind;
    fallback.pencil_dimension = m;
    randomized(fallback);
    fallback.evaluations += verdict.evaluations;
    return fallback;
  }

  verdict.method = "grid";
  Pencil pencil(a, basis, grid_field);
  std::vector<Elem> t(m, 0);
  for (;;) {
    ++verdict.evaluations;
    if (pencil.det_at(t) != 0) {
      verdict.holds = true;
      verdict.certificate = make_certificate(grid_field, t);
      return verdict;
    }
    std::size_t i = 0;
    while (i < m && t[i] == n) t[i++] = 0;
    if (i == m) break;
    ++t[i];
  }
  verdict.holds = false;
  verdict.proof = Proof::Exact;
  return verdict;
}

FormVerdict is_symmetric(const Algebra& a, const DecisionOptions& options) {
  return decide_form(a, FormKind::Symmetric, options);
}

FormVerdict is_frobenius(const Algebra& a, const DecisionOptions& options) {
  return decide_form(a, FormKind::Frobenius, options);
}

bool verify_certificate(const Algebra& a, FormKind kind, const Certificate& certificate) {
  const Field f = Field::with_modulus(certificate.p, certificate.modulus);
  const Matrix basis = pencil_basis(a, kind);
  if (certificate.point.size() != basis.rows()) return false;
  for (Elem x : certificate.point)
    if (x >= f.order()) return false;
  Pencil pencil(a, basis, f);
  return pencil.det_at(certificate.point) != 0;
}

FormVerdict brute_force_form_search(const Algebra& a, bool symmetric_only, std::uint64_t limit) {
  FormVerdict verdict;
  verdict.kind = symmetric_only ? FormKind::Symmetric : FormKind::Frobenius;
  verdict.method = "brute_force";
  const Matrix basis = pencil_basis(a, verdict.kind);
  const std::size_t m = basis.rows();
  verdict.pencil_dimension = m;
  const std::uint64_t q = a.field().order();
  long double space = 1;
  for (std::size_t i = 0; i < m; ++i) space *= static_cast<long double>(q);
  if (space > static_cast<long double>(limit))
    throw Error(ErrorKind::SearchSpaceTooLarge,
                std::to_string(q) + "^" + std::to_string(m) + " points exceed the limit " + std::to_string(limit));

  Pencil pencil(a, basis, a.field());
  std::vector<Elem> t(m, 0);
  for (;;) {
    ++verdict.evaluations;
    if (pencil.det_at(t) != 0) {
      verdict.holds = true;
      verdict.certificate = make_certificate(a.field(), t);
      return verdict;
    }
    std::size_t i = 0;
    while (i < m && t[i] == q - 1) t[i++] = 0;
    if (i == m) break;
    ++t[i];
  }
  return verdict;
}

}  // namespace hsw
