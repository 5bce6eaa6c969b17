#include "hsw/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "hsw/error.hpp"
#include "hsw/gfield.hpp"

namespace hsw::catalog {

namespace {

constexpr std::size_t kMaxDegree = 4096;

Permutation perm(std::vector<Point> images) { return Permutation::from_images(std::move(images)); }

Permutation cycle_on(std::size_t n, std::size_t first, std::size_t last) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t i = first; i < last; ++i) images[i] = static_cast<Point>(i + 1);
  images[last] = static_cast<Point>(first);
  return perm(std::move(images));
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::BadParameter, message);
}

gf::Field prime_power_field(std::uint32_t q, const char* family) {
  const auto factors = gf::prime_factors(q);
  require(q >= 2 && q <= 49 && factors.size() == 1,
          std::string(family) + " needs a prime power q <= 49, got " + std::to_string(q));
  const auto p = static_cast<std::uint32_t>(factors.front());
  unsigned k = 0;
  for (std::uint32_t x = q; x > 1; x /= p) ++k;
  return gf::Field::make(p, k);
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// --- GF(q)^3 for q prime, vectors as rows acting on the right

using Vec = std::vector<std::uint32_t>;

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t q) {
  for (std::uint32_t b = 1; b < q; ++b)
    if (a * b % q == 1) return b;
  return 0;
}

Vec normalise(Vec v, std::uint32_t q) {
  for (auto c : v)
    if (c != 0) {
      const auto s = inv_mod(c, q);
      for (auto& x : v) x = x * s % q;
      break;
    }
  return v;
}

// reduced echelon form of a 2 x 3 matrix of rank 2
Vec rref2(Vec m, std::uint32_t q) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < 3 && row < 2; ++col) {
    std::size_t piv = row;
    while (piv < 2 && m[piv * 3 + col] == 0) ++piv;
    if (piv == 2) continue;
    for (std::size_t c = 0; c < 3; ++c) std::swap(m[row * 3 + c], m[piv * 3 + c]);
    const auto s = inv_mod(m[row * 3 + col], q);
    for (std::size_t c = 0; c < 3; ++c) m[row * 3 + c] = m[row * 3 + c] * s % q;
    for (std::size_t r = 0; r < 2; ++r) {
      if (r == row || m[r * 3 + col] == 0) continue;
      const auto f = m[r * 3 + col];
      for (std::size_t c = 0; c < 3; ++c) m[r * 3 + c] = (m[r * 3 + c] + (q - f) * m[row * 3 + c]) % q;
    }
    ++row;
  }
  return m;
}

Vec times(const Vec& v, const Vec& mat, std::uint32_t q) {
  Vec out(3, 0);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) out[j] = (out[j] + v[i] * mat[i * 3 + j]) % q;
  return out;
}

}  // namespace

PermGroup dihedral(std::size_t n) {
  require(n >= 3 && n <= kMaxDegree, "dihedral needs 3 <= n");
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<Point>((n - i) % n);
  return PermGroup(n, {cycle_on(n, 0, n - 1), perm(std::move(reflection))});
}

PermGroup cyclic(std::size_t n) {
  require(n >= 2 && n <= kMaxDegree, "cyclic needs 2 <= n");
  return PermGroup(n, {cycle_on(n, 0, n - 1)});
}

PermGroup symmetric_natural(std::size_t n) {
  require(n >= 2 && n <= kMaxDegree, "sym needs 2 <= n");
  return PermGroup(n, {cycle_on(n, 0, n - 1), cycle_on(n, 0, 1)});
}

PermGroup alternating_natural(std::size_t n) {
  require(n >= 3 && n <= kMaxDegree, "alt needs 3 <= n");
  auto long_cycle = n % 2 == 1 ? cycle_on(n, 0, n - 1) : cycle_on(n, 1, n - 1);
  return PermGroup(n, {cycle_on(n, 0, 2), std::move(long_cycle)});
}

PermGroup sym_on_pairs(std::size_t n) {
  require(n >= 4 && n <= 90, "sympairs needs 4 <= n <= 90");
  std::vector<std::pair<Point, Point>> pairs;
  for (Point i = 0; i < n; ++i)
    for (Point j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  auto index = [&](Point a, Point b) {
    if (a > b) std::swap(a, b);
    return static_cast<Point>(std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, b)) - pairs.begin());
  };
  std::vector<Permutation> gens;
  for (const auto& g : {cycle_on(n, 0, n - 1), cycle_on(n, 0, 1)}) {
    std::vector<Point> images;
    for (auto [a, b] : pairs) images.push_back(index(g(a), g(b)));
    gens.push_back(perm(std::move(images)));
  }
  return PermGroup(pairs.size(), std::move(gens));
}

PermGroup agl1(std::uint32_t q) {
  const auto f = prime_power_field(q, "agl1");
  const auto g = f.primitive_element();
  std::vector<Point> shift(q), scale(q);
  for (gf::Elem x = 0; x < q; ++x) {
    shift[x] = static_cast<Point>(f.add(x, 1));
    scale[x] = static_cast<Point>(f.mul(g, x));
  }
  return PermGroup(q, {perm(std::move(shift)), perm(std::move(scale))});
}

PermGroup psl2_line(std::uint32_t q) {
  const auto f = prime_power_field(q, "psl2");
  const Point inf = q;
  std::vector<Point> shift(q + 1), invert(q + 1);
  shift[inf] = inf;
  invert[inf] = 0;
  invert[0] = inf;
  for (gf::Elem x = 0; x < q; ++x) {
    shift[x] = static_cast<Point>(f.add(x, 1));
    if (x != 0) invert[x] = static_cast<Point>(f.neg(f.inv(x)));
  }
  std::vector<Permutation> gens{perm(std::move(shift)), perm(std::move(invert))};
  if (!f.is_prime_field()) {
    // x+1 and -1/x only generate PSL(2,p) here
    const auto g2 = f.mul(f.primitive_element(), f.primitive_element());
    std::vector<Point> scale(q + 1);
    scale[inf] = inf;
    for (gf::Elem x = 0; x < q; ++x) scale[x] = static_cast<Point>(f.mul(g2, x));
    gens.push_back(perm(std::move(scale)));
  }
  return PermGroup(q + 1, std::move(gens));
}

std::vector<Flag> flags(std::uint32_t q) {
  require(q == 2 || q == 3, "gl3flags needs q in {2, 3}");
  std::vector<Vec> vectors;
  for (std::uint32_t code = 1; code < q * q * q; ++code) vectors.push_back({code / (q * q), code / q % q, code % q});
  std::set<Flag> out;
  for (const auto& v : vectors) {
    if (normalise(v, q) != v) continue;
    for (const auto& w : vectors) {
      Vec m{v[0], v[1], v[2], w[0], w[1], w[2]};
      auto plane = rref2(m, q);
      if (std::all_of(plane.begin() + 3, plane.end(), [](auto c) { return c == 0; })) continue;
      out.insert(Flag{v, std::move(plane)});
    }
  }
  return {out.begin(), out.end()};
}

PermGroup gl3_flags(std::uint32_t q) {
  const auto all = flags(q);
  const std::uint32_t omega = q == 2 ? 1 : 2;  // primitive element of GF(q)
  // transvection e1 -> e1 + e2, and e1 -> omega e3, e2 -> e1, e3 -> e2
  const std::vector<Vec> matrices{{1, 1, 0, 0, 1, 0, 0, 0, 1}, {0, 0, omega, 1, 0, 0, 0, 1, 0}};
  std::vector<Permutation> gens;
  for (const auto& mat : matrices) {
    std::vector<Point> images;
    for (const auto& fl : all) {
      Flag image;
      image.line = normalise(times(fl.line, mat, q), q);
      auto r0 = times(Vec(fl.plane.begin(), fl.plane.begin() + 3), mat, q);
      auto r1 = times(Vec(fl.plane.begin() + 3, fl.plane.end()), mat, q);
      r0.insert(r0.end(), r1.begin(), r1.end());
      image.plane = rref2(std::move(r0), q);
      images.push_back(static_cast<Point>(std::lower_bound(all.begin(), all.end(), image) - all.begin()));
    }
    gens.push_back(perm(std::move(images)));
  }
  return PermGroup(all.size(), std::move(gens));
}

CatalogEntry builtin(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::ParseError, "builtin group '" + std::string(spec) + "' should look like family:n");
  const auto family = spec.substr(0, colon);
  const auto digits = spec.substr(colon + 1);
  std::uint32_t n = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty())
    throw Error(ErrorKind::ParseError, "bad parameter in builtin group '" + std::string(spec) + "'");

  CatalogEntry e{std::string(spec), std::string(family), n, PermGroup(1, {}), std::nullopt};
  if (family == "dihedral") {
    e.group = dihedral(n);
    e.expected_order = 2ull * n;
  } else if (family == "cyclic") {
    e.group = cyclic(n);
    e.expected_order = n;
  } else if (family == "sym") {
    e.group = symmetric_natural(n);
    if (n <= 20) e.expected_order = factorial(n);
  } else if (family == "alt") {
    e.group = alternating_natural(n);
    if (n <= 20) e.expected_order = factorial(n) / 2;
  } else if (family == "sympairs") {
    e.group = sym_on_pairs(n);
    if (n <= 20) e.expected_order = factorial(n);
  } else if (family == "agl1") {
    e.group = agl1(n);
    e.expected_order = std::uint64_t{n} * (n - 1);
  } else if (family == "psl2") {
    e.group = psl2_line(n);
    e.expected_order = std::uint64_t{n} * (std::uint64_t{n} * n - 1) / (n % 2 == 1 ? 2 : 1);
  } else if (family == "gl3flags") {
    e.group = gl3_flags(n);
    e.expected_order = n == 2 ? 168 : 5616;
  } else {
    throw Error(ErrorKind::ParseError, "unknown builtin family '" + std::string(family) + "'");
  }
  return e;
}

std::vector<std::string> sweep_specs(std::size_t max_degree) {
  std::vector<std::string> out;
  auto add = [&](const std::string& family, std::uint32_t n, std::size_t degree) {
    if (degree <= max_degree) out.push_back(family + ":" + std::to_string(n));
  };
  for (std::uint32_t n = 2; n <= 16; ++n) add("cyclic", n, n);
  for (std::uint32_t n = 3; n <= 12; ++n) add("dihedral", n, n);
  for (std::uint32_t n = 3; n <= 7; ++n) add("sym", n, n);
  for (std::uint32_t n = 4; n <= 7; ++n) add("alt", n, n);
  for (std::uint32_t n = 4; n <= 8; ++n) add("sympairs", n, n * (n - 1) / 2);
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 17u, 19u, 23u, 25u, 27u, 29u}) add("agl1", q, q);
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 17u, 19u, 23u, 25u, 27u, 29u}) add("psl2", q, q + 1);
  add("gl3flags", 2, 21);
  return out;
}

std::vector<std::size_t> bruhat_word_orbitals(const CoherentConfig& config) {
  const std::size_t m = config.rank();
  if (m != 6) throw Error(ErrorKind::AxiomViolation, "flag configuration should have rank 6");
  std::uint64_t least = ~std::uint64_t{0};
  for (const auto& o : config.orbitals())
    if (!o.reflexive) least = std::min(least, o.valency);
  std::vector<std::size_t> letters;
  for (const auto& o : config.orbitals())
    if (!o.reflexive && o.valency == least) letters.push_back(o.id);
  if (letters.size() != 2)
    throw Error(ErrorKind::AxiomViolation, "expected two orbitals of least valency");

  auto product_of = [&](std::string_view word) -> std::size_t {
    std::vector<std::int64_t> v(m, 0);
    v[config.source_identity(0)] = 1;
    for (char c : word) {
      const std::size_t s = letters[c == 'x' ? 0 : 1];
      std::vector<std::int64_t> next(m, 0);
      for (std::size_t r = 0; r < m; ++r)
        if (v[r] != 0)
          for (std::size_t t = 0; t < m; ++t) next[t] += v[r] * config.c(t, r, s);
      v = std::move(next);
    }
    std::size_t hit = m, hits = 0;
    for (std::size_t t = 0; t < m; ++t)
      if (v[t] != 0) {
        ++hits;
        hit = t;
      }
    if (hits != 1 || v[hit] != 1)
      throw Error(ErrorKind::AxiomViolation, "word '" + std::string(word) + "' is not a single orbital");
    return hit;
  };
  std::vector<std::size_t> out;
  for (std::string_view w : {"", "x", "y", "xy", "yx", "xyx"}) out.push_back(product_of(w));
  return out;
}

}  // namespace hsw::catalog
