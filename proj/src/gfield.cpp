#include "hsw/gfield.hpp"

#include <algorithm>
#include <array>

#include "hsw/error.hpp"

namespace hsw::gf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    factors.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
  std::vector<std::uint32_t> primes;
  for (std::uint32_t n = 2; n <= bound; ++n)
    if (is_prime(n)) primes.push_back(n);
  return primes;
}

namespace {

// --- polynomial arithmetic over F_p -------------------------------------

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * m[i] % p) % p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_mod(std::move(prod), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^{p^j} mod f
Poly frobenius_power(const Poly& f, std::uint32_t p, unsigned j) {
  Poly x{0, 1};
  Poly r = poly_mod(x, f, p);
  for (unsigned i = 0; i < j; ++i) r = poly_powmod(r, p, f, p);
  return r;
}

}  // namespace

bool is_irreducible(std::uint32_t p, const Poly& f_in) {
  Poly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  if (k == 1) return true;
  const Poly x{0, 1};
  if (poly_sub(frobenius_power(f, p, k), x, p) != Poly{}) return false;
  for (std::uint64_t r : prime_factors(k)) {
    Poly g = poly_gcd(f, poly_sub(frobenius_power(f, p, static_cast<unsigned>(k / r)), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

// --- Field ----------------------------------------------------------------

Field::Field(std::uint32_t p, Poly modulus) : p_(p), modulus_(std::move(modulus)) {
  k_ = static_cast<unsigned>(modulus_.size() - 1);
  q_ = 1;
  for (unsigned i = 0; i < k_; ++i) q_ *= p_;
}

Field Field::make(std::uint32_t p, unsigned k) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorKind::BadParameter, "extension degree must be at least 1");
  long double size = 1;
  for (unsigned i = 0; i < k; ++i) size *= p;
  if (size > static_cast<long double>(1ULL << 62))
    throw Error(ErrorKind::BadParameter, "field too large for 64-bit element encoding");
  if (k == 1) return Field(p, Poly{0, 1});

  std::uint64_t low_count = 1;
  for (unsigned i = 0; i < k; ++i) low_count *= p;
  for (std::uint64_t code = 0; code < low_count; ++code) {
    Poly f(k + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[k] = 1;
    if (f[0] == 0) continue;  // divisible by x
    if (is_irreducible(p, f)) return Field(p, std::move(f));
  }
  throw Error(ErrorKind::BadParameter, "no irreducible polynomial found");  // unreachable
}

Field Field::with_modulus(std::uint32_t p, Poly modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  for (auto& c : modulus) c %= p;
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1)
    throw Error(ErrorKind::BadParameter, "modulus must be monic of degree at least 1");
  if (!is_irreducible(p, modulus)) throw Error(ErrorKind::BadParameter, "modulus is reducible");
  return Field(p, std::move(modulus));
}

Elem Field::from_int(std::int64_t value) const noexcept {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem Field::add(Elem a, Elem b) const noexcept {
  if (k_ == 1) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  Elem result = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    Elem d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    result += d * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return result;
}

Elem Field::neg(Elem a) const noexcept {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Elem result = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    Elem d = a % p_;
    result += (d == 0 ? 0 : p_ - d) * place;
    place *= p_;
    a /= p_;
  }
  return result;
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (k_ == 1) return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  if (a == 0 || b == 0) return 0;
  if (p_ == 2) {
    // carry-less product, then reduce by the modulus bit pattern
    unsigned __int128 prod = 0;
    for (unsigned i = 0; i < k_; ++i)
      if ((b >> i) & 1) prod ^= static_cast<unsigned __int128>(a) << i;
    unsigned __int128 mod = 0;
    for (unsigned i = 0; i <= k_; ++i)
      if (modulus_[i]) mod |= static_cast<unsigned __int128>(1) << i;
    for (int bit = 2 * static_cast<int>(k_) - 2; bit >= static_cast<int>(k_); --bit)
      if ((prod >> bit) & 1) prod ^= mod << (bit - static_cast<int>(k_));
    return static_cast<Elem>(prod);
  }
  std::array<std::uint64_t, 128> da{}, db{}, prod{};
  for (unsigned i = 0; i < k_; ++i) {
    da[i] = a % p_;
    db[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  // modulus is monic: x^k = -(m_0 + ... + m_{k-1} x^{k-1})
  for (int deg = 2 * static_cast<int>(k_) - 2; deg >= static_cast<int>(k_); --deg) {
    const std::uint64_t c = prod[deg];
    if (c == 0) continue;
    prod[deg] = 0;
    const int shift = deg - static_cast<int>(k_);
    for (unsigned i = 0; i < k_; ++i)
      prod[shift + i] = (prod[shift + i] + (p_ - c) * modulus_[i]) % p_;
  }
  Elem result = 0;
  for (int i = static_cast<int>(k_) - 1; i >= 0; --i) result = result * p_ + prod[i];
  return result;
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::BadParameter, "inverse of zero");
  return pow(a, q_ - 2);
}

Poly Field::digits(Elem a) const {
  Poly d(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = static_cast<std::uint32_t>(a % p_);
    a /= p_;
  }
  return d;
}

Elem Field::from_digits(const Poly& coefficients) const {
  Poly reduced = poly_mod(coefficients, modulus_, p_);
  Elem result = 0;
  for (std::size_t i = reduced.size(); i-- > 0;) result = result * p_ + reduced[i];
  return result;
}

Elem Field::primitive_element() const {
  const auto factors = prime_factors(q_ - 1);
  for (Elem g = 1; g < q_; ++g) {
    bool primitive = true;
    for (auto r : factors)
      if (pow(g, (q_ - 1) / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return g;
  }
  return 1;  // q = 2
}

std::string Field::describe() const {
  std::string out = "GF(" + std::to_string(p_);
  if (k_ > 1) out += "^" + std::to_string(k_);
  return out + ")";
}

// --- Embedding --------------------------------------------------------------

Embedding::Embedding(const Field& from, const Field& to) : from_(from), to_(to) {
  if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0)
    throw Error(ErrorKind::FieldMismatch,
                from.describe() + " does not embed in " + to.describe());
  const unsigned k = from.degree();
  Elem root = 0;
  if (k == 1) {
    root = 0;  // unused
  } else if (from == to) {
    root = to.characteristic();  // the class of x itself
  } else {
    const auto& m = from.modulus();
    bool found = false;
    for (Elem r = 0; r < to.order() && !found; ++r) {
      Elem value = 0;
      for (std::size_t i = m.size(); i-- > 0;) value = to.add(to.mul(value, r), m[i]);
      if (value == 0) {
        root = r;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::FieldMismatch, "modulus has no root in target field");
  }
  generator_powers_.assign(k, 1);
  for (unsigned i = 1; i < k; ++i) generator_powers_[i] = to.mul(generator_powers_[i - 1], root);
}

Elem Embedding::operator()(Elem a) const {
  if (from_.degree() == 1) return a;
  Elem result = 0;
  const auto d = from_.digits(a);
  for (unsigned i = 0; i < d.size(); ++i)
    if (d[i]) result = to_.add(result, to_.mul(d[i], generator_powers_[i]));
  return result;
}

// --- Matrix -----------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void Matrix::append_row(std::span<const Elem> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Elem x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(l, j) != 0) c(i, j) = f.add(c(i, j), f.mul(x, b(l, j)));
    }
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

RowReduction row_reduce(const Field& f, Matrix m) {
  RowReduction out;
  const bool square = m.rows() == m.cols();
  Elem det = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) {
      det = 0;
      continue;
    }
    if (pivot != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
      det = f.neg(det);
    }
    const Elem lead = m(r, c);
    det = f.mul(det, lead);
    const Elem lead_inv = f.inv(lead);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), lead_inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Elem factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  if (square) out.determinant = (r == m.rows()) ? det : 0;
  out.reduced = std::move(m);
  return out;
}

Elem determinant(const Field& f, Matrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  // forward elimination only
  const std::size_t n = m.rows();
  Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(pivot, j), m(c, j));
      det = f.neg(det);
    }
    const Elem lead = m(c, c);
    det = f.mul(det, lead);
    const Elem lead_inv = f.inv(lead);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Elem factor = f.mul(m(i, c), lead_inv);
      for (std::size_t j = c; j < n; ++j)
        if (m(c, j) != 0) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

std::size_t rank(const Field& f, const Matrix& m) { return row_reduce(f, m).rank; }

Matrix nullspace(const Field& f, const Matrix& m) {
  const auto red = row_reduce(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivots) is_pivot[c] = true;
  Matrix basis(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = f.neg(red.reduced(i, free));
    basis.append_row(v);
  }
  return row_reduce(f, basis).reduced;
}

Matrix row_space(const Field& f, const Matrix& m) {
  auto red = row_reduce(f, m);
  Matrix out(0, m.cols());
  for (std::size_t i = 0; i < red.rank; ++i) out.append_row(red.reduced.row(i));
  return out;
}

std::optional<Matrix> inverse(const Field& f, const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto red = row_reduce(f, std::move(aug));
  if (red.rank < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.reduced(i, n + j);
  return inv;
}

DetRankSolve det_rank_solve(const Field& f, const Matrix& m, const std::optional<Matrix>& rhs) {
  DetRankSolve out;
  auto red = row_reduce(f, m);
  out.rank = red.rank;
  out.determinant = red.determinant;
  out.nullspace = nullspace(f, m);
  if (!rhs) return out;
  if (rhs->rows() != m.rows())
    throw Error(ErrorKind::DimensionMismatch, "right-hand side has " + std::to_string(rhs->rows()) +
                                                  " rows, matrix has " + std::to_string(m.rows()));
  const std::size_t n = m.cols(), k = rhs->cols();
  Matrix aug(m.rows(), n + k);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = (*rhs)(i, j);
  }
  auto full = row_reduce(f, std::move(aug));
  for (auto c : full.pivots)
    if (c >= n) {
      out.consistent = false;
      return out;
    }
  Matrix x(n, k);
  for (std::size_t i = 0; i < full.pivots.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) x(full.pivots[i], j) = full.reduced(i, n + j);
  out.particular = std::move(x);
  return out;
}

// --- SparseEchelon ------------------------------------------------------------

bool SparseEchelon::add(Row row) {
  std::sort(row.begin(), row.end());
  std::erase_if(row, [](const auto& e) { return e.second == 0; });
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      const Elem scale = field_.inv(row.front().second);
      for (auto& e : row) e.second = field_.mul(e.second, scale);
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    // row -= row[lead] * pivot (pivot is monic)
    const Elem factor = row.front().second;
    const Row& pivot = it->second;
    Row merged;
    merged.reserve(row.size() + pivot.size());
    std::size_t a = 0, b = 0;
    while (a < row.size() || b < pivot.size()) {
      if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
        merged.push_back(row[a++]);
      } else if (a == row.size() || pivot[b].first < row[a].first) {
        merged.emplace_back(pivot[b].first, field_.neg(field_.mul(factor, pivot[b].second)));
        ++b;
      } else {
        Elem v = field_.sub(row[a].second, field_.mul(factor, pivot[b].second));
        if (v != 0) merged.emplace_back(row[a].first, v);
        ++a;
        ++b;
      }
    }
    row = std::move(merged);
  }
  return false;
}

}  // namespace hsw::gf
