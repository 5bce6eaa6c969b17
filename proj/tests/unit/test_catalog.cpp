#include <gtest/gtest.h>

#include <set>

#include "hsw/catalog.hpp"
#include "hsw/coherent.hpp"
#include "hsw/error.hpp"
#include "hsw/presentations.hpp"

using namespace hsw;

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

std::uint64_t factorial(unsigned n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::vector<std::uint64_t> subdegrees_of(const char* spec) {
  return CoherentConfig::from_group(catalog::builtin(spec).group).subdegrees();
}

}  // namespace

TEST(Catalog, DihedralGenerators) {
  const auto g = catalog::dihedral(4);
  ASSERT_EQ(g.generators().size(), 2u);
  EXPECT_EQ(g.generators()[0], parse_permutation("(1 2 3 4)", 4));
  EXPECT_EQ(g.generators()[1], parse_permutation("(2 4)", 4));
}

TEST(Catalog, Orders) {
  for (std::size_t n = 3; n <= 12; ++n) EXPECT_EQ(catalog::dihedral(n).order(), 2 * n);
  for (std::size_t n = 2; n <= 16; ++n) EXPECT_EQ(catalog::cyclic(n).order(), n);
  for (unsigned n = 2; n <= 7; ++n) EXPECT_EQ(catalog::symmetric_natural(n).order(), factorial(n));
  for (unsigned n = 3; n <= 7; ++n) EXPECT_EQ(catalog::alternating_natural(n).order(), factorial(n) / 2);
  for (unsigned n = 4; n <= 7; ++n) EXPECT_EQ(catalog::sym_on_pairs(n).order(), factorial(n));
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u})
    EXPECT_EQ(catalog::agl1(q).order(), std::uint64_t(q) * (q - 1)) << q;
  // |PSL(2,q)| = q(q^2 - 1)/gcd(2, q - 1)
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u}) {
    const std::uint64_t d = q % 2 ? 2 : 1;
    EXPECT_EQ(catalog::psl2_line(q).order(), std::uint64_t(q) * (q * q - 1) / d) << q;
  }
  EXPECT_EQ(catalog::gl3_flags(2).order(), 168u);
  EXPECT_EQ(catalog::gl3_flags(3).order(), 11232u / 2);  // scalars act trivially
}

TEST(Catalog, Degrees) {
  EXPECT_EQ(catalog::sym_on_pairs(5).degree(), 10u);
  EXPECT_EQ(catalog::sym_on_pairs(7).degree(), 21u);
  EXPECT_EQ(catalog::agl1(8).degree(), 8u);
  EXPECT_EQ(catalog::psl2_line(9).degree(), 10u);
  EXPECT_EQ(catalog::gl3_flags(2).degree(), 21u);
  EXPECT_EQ(catalog::gl3_flags(3).degree(), 52u);
}

TEST(Catalog, Subdegrees) {
  EXPECT_EQ(subdegrees_of("sym:5"), (std::vector<std::uint64_t>{1, 4}));
  EXPECT_EQ(subdegrees_of("sympairs:5"), (std::vector<std::uint64_t>{1, 3, 6}));
  EXPECT_EQ(subdegrees_of("agl1:5"), (std::vector<std::uint64_t>{1, 4}));
  EXPECT_EQ(subdegrees_of("psl2:8"), (std::vector<std::uint64_t>{1, 8}));
  EXPECT_EQ(subdegrees_of("gl3flags:2"), (std::vector<std::uint64_t>{1, 2, 2, 4, 4, 8}));
  EXPECT_EQ(subdegrees_of("gl3flags:3"), (std::vector<std::uint64_t>{1, 3, 3, 9, 9, 27}));
  EXPECT_EQ(CoherentConfig::from_group(catalog::cyclic(6)).rank(), 6u);
}

TEST(Catalog, Flags) {
  for (std::uint32_t q : {2u, 3u}) {
    const auto fl = catalog::flags(q);
    EXPECT_EQ(fl.size(), std::size_t(q * q + q + 1) * (q + 1));
    EXPECT_EQ(std::set<catalog::Flag>(fl.begin(), fl.end()).size(), fl.size());
    for (const auto& f : fl) {
      // the line lies in the plane: line = a row0 + b row1 for some a, b
      bool inside = false;
      for (std::uint32_t a = 0; a < q && !inside; ++a)
        for (std::uint32_t b = 0; b < q && !inside; ++b) {
          bool eq = true;
          for (int i = 0; i < 3; ++i) eq = eq && (a * f.plane[i] + b * f.plane[3 + i]) % q == f.line[i];
          inside = eq;
        }
      EXPECT_TRUE(inside);
    }
  }
}

TEST(Catalog, BuiltinParsing) {
  const auto e = catalog::builtin("dihedral:4");
  EXPECT_EQ(e.family, "dihedral");
  EXPECT_EQ(e.parameter, 4u);
  EXPECT_EQ(e.expected_order, 8u);
  EXPECT_EQ(kind_of([] { catalog::builtin("foo:3"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { catalog::builtin("dihedral"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { catalog::builtin("dihedral:x"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { catalog::builtin("dihedral:2"); }), ErrorKind::BadParameter);
  EXPECT_EQ(kind_of([] { catalog::builtin("agl1:6"); }), ErrorKind::BadParameter);
  EXPECT_EQ(kind_of([] { catalog::builtin("gl3flags:4"); }), ErrorKind::BadParameter);
}

TEST(Catalog, SweepEntriesAreConsistent) {
  for (const auto& spec : catalog::sweep_specs(30)) {
    const auto e = catalog::builtin(spec);
    EXPECT_LE(e.group.degree(), 30u) << spec;
    EXPECT_TRUE(is_transitive(e.group)) << spec;
    if (e.expected_order) EXPECT_EQ(e.group.order(), e.expected_order) << spec;
  }
}

TEST(Catalog, BruhatMatching) {
  const auto c = CoherentConfig::from_group(catalog::gl3_flags(2));
  const auto match = catalog::bruhat_word_orbitals(c);
  ASSERT_EQ(match.size(), 6u);
  EXPECT_EQ(std::set<std::size_t>(match.begin(), match.end()).size(), 6u);
  const auto w = WordAlgebra::build(CoxeterType::A2, 2);
  const auto a = to_algebra(c, 2);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t l = 0; l < 6; ++l)
        EXPECT_EQ(a.c(match[i], match[j], match[l]), w.algebra().c(i, j, l));
}
