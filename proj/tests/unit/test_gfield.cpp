#include <gtest/gtest.h>

#include <random>

#include "hsw/error.hpp"
#include "hsw/gfield.hpp"

using namespace hsw;
using namespace hsw::gf;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::BadParameter;
}

// Schoolbook arithmetic on coefficient vectors, independent of Field.
Poly poly_mul_mod(std::uint32_t p, const Poly& a, const Poly& b, const Poly& m) {
  std::vector<std::uint64_t> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  const std::size_t k = m.size() - 1;
  for (std::size_t d = prod.size(); d-- > k;) {
    const auto c = prod[d];
    if (!c) continue;
    for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * m[i]) % p;
  }
  Poly out(k, 0);
  for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

bool has_root(std::uint32_t p, const Poly& f) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

// Polynomial remainder over F_p, for trial division.
Poly poly_rem(std::uint32_t p, Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  std::uint64_t lead_inv = 1;
  for (std::uint32_t x = 1; x < p; ++x)
    if (std::uint64_t(x) * b.back() % p == 1) lead_inv = x;
  while (a.size() > db && !a.empty()) {
    if (a.back() == 0) {
      a.pop_back();
      continue;
    }
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i]) % p);
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

bool irreducible_by_trial_division(std::uint32_t p, const Poly& f) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      auto c = code;
      for (std::size_t i = 0; i < d; ++i, c /= p) g[i] = static_cast<std::uint32_t>(c % p);
      if (poly_rem(p, f, g).empty()) return false;
    }
  }
  return true;
}

Matrix random_matrix(std::mt19937_64& rng, const Field& f, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng() % f.order();
  return m;
}

Elem leibniz_det(const Field& f, const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Elem total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Elem term = 1;
    for (std::size_t i = 0; i < n; ++i) term = f.mul(term, m(i, perm[i]));
    total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(Primes, Basics) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(65537));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(primes_up_to(12), (std::vector<std::uint32_t>{2, 3, 5, 7, 11}));
  EXPECT_EQ(prime_factors(360), (std::vector<std::uint64_t>{2, 3, 5}));
}

TEST(Field, SmallestModulus) {
  EXPECT_EQ(Field::make(3, 2).modulus(), (Poly{1, 0, 1}));
  EXPECT_EQ(Field::make(2, 2).modulus(), (Poly{1, 1, 1}));
  EXPECT_EQ(Field::make(2, 3).modulus(), (Poly{1, 1, 0, 1}));
  // oracle: first monic polynomial without roots in encoding order (degree 2, 3)
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (unsigned k : {2u, 3u}) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < k; ++i) count *= p;
      Poly expected;
      for (std::uint64_t code = 0; code < count && expected.empty(); ++code) {
        Poly f(k + 1, 0);
        f[k] = 1;
        auto c = code;
        for (unsigned i = 0; i < k; ++i, c /= p) f[i] = static_cast<std::uint32_t>(c % p);
        if (!has_root(p, f)) expected = f;
      }
      EXPECT_EQ(Field::make(p, k).modulus(), expected) << p << "^" << k;
    }
  }
}

TEST(Field, IrreducibilityMatchesTrialDivision) {
  for (std::uint32_t p : {2u, 3u}) {
    for (std::size_t deg = 1; deg <= (p == 2 ? 7u : 4u); ++deg) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < deg; ++i) count *= p;
      for (std::uint64_t code = 0; code < count; ++code) {
        Poly f(deg + 1, 0);
        f[deg] = 1;
        auto c = code;
        for (std::size_t i = 0; i < deg; ++i, c /= p) f[i] = static_cast<std::uint32_t>(c % p);
        EXPECT_EQ(is_irreducible(p, f), irreducible_by_trial_division(p, f)) << p << " " << code;
      }
    }
  }
}

TEST(Field, Errors) {
  EXPECT_EQ(kind_of([] { Field::make(4); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([] { Field::make(2, 0); }), ErrorKind::BadParameter);
  EXPECT_EQ(kind_of([] { Field::with_modulus(2, {1, 0, 1}); }), ErrorKind::BadParameter);
  EXPECT_EQ(kind_of([] { Field::make(5).inv(0); }), ErrorKind::BadParameter);
}

TEST(Field, MultiplicationMatchesSchoolbook) {
  std::mt19937_64 rng(3);
  for (auto [p, k] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}, {7u, 2u}, {2u, 8u}}) {
    const auto f = Field::make(p, k);
    for (int i = 0; i < 300; ++i) {
      const Elem a = rng() % f.order(), b = rng() % f.order();
      EXPECT_EQ(f.digits(f.mul(a, b)), poly_mul_mod(p, f.digits(a), f.digits(b), f.modulus()));
      EXPECT_EQ(f.from_digits(f.digits(a)), a);
    }
  }
}

TEST(Field, Axioms) {
  std::mt19937_64 rng(9);
  for (auto [p, k] : {std::pair{2u, 1u}, {2u, 5u}, {3u, 2u}, {13u, 1u}, {5u, 3u}}) {
    const auto f = Field::make(p, k);
    for (int i = 0; i < 200; ++i) {
      const Elem a = rng() % f.order(), b = rng() % f.order(), c = rng() % f.order();
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      EXPECT_EQ(f.sub(f.add(a, b), b), a);
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      if (a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      EXPECT_EQ(f.pow(a, f.order()), a);  // Frobenius fixes everything
    }
    EXPECT_EQ(f.from_int(-1), f.neg(1));
  }
}

TEST(Field, PrimitiveElement) {
  for (auto [p, k] : {std::pair{2u, 4u}, {3u, 2u}, {7u, 1u}, {5u, 2u}}) {
    const auto f = Field::make(p, k);
    const Elem g = f.primitive_element();
    std::uint64_t order = 1;
    for (Elem x = g; x != 1; x = f.mul(x, g)) ++order;
    EXPECT_EQ(order, f.order() - 1);
  }
}

TEST(Embedding, IsRingHomomorphism) {
  const auto small = Field::make(2, 2), big = Field::make(2, 4);
  Embedding e(small, big);
  EXPECT_EQ(e(0), 0u);
  EXPECT_EQ(e(1), 1u);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      EXPECT_EQ(e(small.add(a, b)), big.add(e(a), e(b)));
      EXPECT_EQ(e(small.mul(a, b)), big.mul(e(a), e(b)));
    }
  EXPECT_EQ(kind_of([] { Embedding(Field::make(2, 2), Field::make(2, 3)); }), ErrorKind::FieldMismatch);
  EXPECT_EQ(kind_of([] { Embedding(Field::make(2), Field::make(3)); }), ErrorKind::FieldMismatch);
}

TEST(Matrix, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(17);
  for (auto [p, k] : {std::pair{5u, 1u}, {2u, 2u}, {3u, 2u}}) {
    const auto f = Field::make(p, k);
    for (int i = 0; i < 40; ++i) {
      auto m = random_matrix(rng, f, 4, 4);
      EXPECT_EQ(determinant(f, m), leibniz_det(f, m));
    }
  }
}

TEST(Matrix, RankNullspaceInverse) {
  std::mt19937_64 rng(21);
  const auto f = Field::make(3);
  for (int i = 0; i < 40; ++i) {
    auto a = random_matrix(rng, f, 3, 5);
    auto m = multiply(f, transpose(random_matrix(rng, f, 3, 6)), a);  // 6x5, rank <= 3
    const auto r = rank(f, m);
    EXPECT_LE(r, 3u);
    auto ns = nullspace(f, m);
    EXPECT_EQ(ns.rows(), 5 - r);
    auto prod = multiply(f, m, transpose(ns));
    for (std::size_t x = 0; x < prod.rows(); ++x)
      for (std::size_t y = 0; y < prod.cols(); ++y) EXPECT_EQ(prod(x, y), 0u);
    EXPECT_EQ(row_space(f, m).rows(), r);

    SparseEchelon se(f, 5);
    for (std::size_t x = 0; x < m.rows(); ++x) {
      SparseEchelon::Row row;
      for (std::size_t y = 0; y < 5; ++y)
        if (m(x, y)) row.emplace_back(y, m(x, y));
      se.add(row);
    }
    EXPECT_EQ(se.rank(), r);
  }
  for (int i = 0; i < 40; ++i) {
    auto m = random_matrix(rng, f, 4, 4);
    auto inv = inverse(f, m);
    EXPECT_EQ(inv.has_value(), determinant(f, m) != 0);
    if (inv) EXPECT_EQ(multiply(f, m, *inv), Matrix::identity(4));
  }
}

TEST(Matrix, DetRankSolve) {
  const auto f = Field::make(5);
  Matrix m(2, 2);
  m(0, 0) = 1, m(0, 1) = 2, m(1, 0) = 2, m(1, 1) = 4;  // singular mod 5
  Matrix rhs(2, 1);
  rhs(0, 0) = 3, rhs(1, 0) = 1;  // 2 * 3 = 6 = 1 mod 5: consistent
  auto s = det_rank_solve(f, m, rhs);
  EXPECT_EQ(s.determinant, 0u);
  EXPECT_EQ(s.rank, 1u);
  ASSERT_TRUE(s.consistent);
  ASSERT_TRUE(s.particular.has_value());
  EXPECT_EQ(multiply(f, m, *s.particular), rhs);
  EXPECT_EQ(s.nullspace.rows(), 1u);
  rhs(1, 0) = 2;
  EXPECT_FALSE(det_rank_solve(f, m, rhs).consistent);
  EXPECT_EQ(kind_of([&] { det_rank_solve(f, m, Matrix(3, 1)); }), ErrorKind::DimensionMismatch);
}
