#include <gtest/gtest.h>

#include <map>

#include "hsw/algebra.hpp"
#include "hsw/catalog.hpp"
#include "hsw/coherent.hpp"
#include "hsw/error.hpp"

using namespace hsw;

namespace {

// Orbital labels by applying every group element to each unlabelled pair,
// scanning pairs lexicographically.
std::vector<std::uint32_t> brute_orbital_labels(const PermGroup& g) {
  const std::size_t n = g.degree();
  std::vector<std::uint32_t> label(n * n, UINT32_MAX);
  std::uint32_t next = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (label[a * n + b] != UINT32_MAX) continue;
      for (const auto& x : g.elements()) label[x(Point(a)) * n + x(Point(b))] = next;
      ++next;
    }
  return label;
}

void expect_matches_brute_force(const PermGroup& g) {
  const auto c = CoherentConfig::from_group(g);
  const std::size_t n = g.degree();
  ASSERT_EQ(c.pair_labels(), brute_orbital_labels(g));
  const std::size_t m = c.rank();
  // c^t_{rs} counted at every pair of t, not only the representative
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::int64_t> count(m * m, 0);
      for (std::size_t x = 0; x < n; ++x) ++count[c.relation_of(Point(a), Point(x)) * m + c.relation_of(Point(x), Point(b))];
      const auto t = c.relation_of(Point(a), Point(b));
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) ASSERT_EQ(c.c(t, r, s), count[r * m + s]);
    }
}

}  // namespace

TEST(Coherent, DihedralFour) {
  const auto g = catalog::dihedral(4);
  const auto c = CoherentConfig::from_group(g);
  EXPECT_EQ(c.rank(), 3u);
  EXPECT_TRUE(c.transitive());
  EXPECT_EQ(c.subdegrees(), (std::vector<std::uint64_t>{1, 1, 2}));
  // ids follow the first pair: (1,1), (1,2), (1,3)
  EXPECT_EQ(c.orbitals()[0].representative, (std::pair<Point, Point>{0, 0}));
  EXPECT_EQ(c.orbitals()[1].representative, (std::pair<Point, Point>{0, 1}));
  EXPECT_EQ(c.orbitals()[2].representative, (std::pair<Point, Point>{0, 2}));
  EXPECT_EQ(c.orbitals()[1].valency, 2u);
  EXPECT_EQ(c.orbitals()[2].valency, 1u);
  EXPECT_TRUE(c.orbitals()[0].reflexive);
  EXPECT_EQ(c.orbitals()[1].size, 8u);
  expect_matches_brute_force(g);
}

TEST(Coherent, MatchesBruteForceOnCatalog) {
  for (const char* spec : {"cyclic:6", "dihedral:5", "sym:4", "alt:5", "sympairs:5", "agl1:7", "psl2:5"})
    expect_matches_brute_force(catalog::builtin(spec).group);
}

TEST(Coherent, IntransitiveGroup) {
  PermGroup g(4, {parse_permutation("(1 2)", 4)});
  const auto c = CoherentConfig::from_group(g);
  EXPECT_FALSE(c.transitive());
  std::size_t reflexive = 0;
  for (const auto& o : c.orbitals()) reflexive += o.reflexive;
  EXPECT_EQ(reflexive, 3u);  // orbits {1,2}, {3}, {4}
  EXPECT_TRUE(verify_axioms(c).all_pass());
  expect_matches_brute_force(g);
  EXPECT_TRUE(matrix_model_holds(c));
}

TEST(Coherent, PairedRelations) {
  const auto c = CoherentConfig::from_group(catalog::cyclic(5));
  for (const auto& o : c.orbitals()) {
    const auto& q = c.orbitals()[o.paired];
    EXPECT_EQ(c.relation_of(o.representative.second, o.representative.first), q.id);
  }
}

TEST(Coherent, AxiomsOnCatalog) {
  for (const auto& spec : catalog::sweep_specs(21)) {
    const auto c = CoherentConfig::from_group(catalog::builtin(spec).group);
    auto report = verify_axioms(c);
    EXPECT_TRUE(report.all_pass()) << spec;
    EXPECT_EQ(intersection_numbers(c), c.tensor()) << spec;
  }
}

TEST(Coherent, NonCoherentPartition) {
  // C4 orbitals with one off-diagonal relation split arbitrarily
  const auto base = CoherentConfig::from_group(catalog::cyclic(4));
  auto labels = base.pair_labels();
  const auto fresh = static_cast<std::uint32_t>(base.rank());
  labels[0 * 4 + 1] = fresh;  // (1,2) alone
  const auto c = CoherentConfig::from_partition(4, labels);
  auto report = verify_axioms(c);
  EXPECT_FALSE(report.all_pass());
  EXPECT_FALSE(report.failures.empty());
  try {
    intersection_numbers(c);
    FAIL() << "expected AxiomViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AxiomViolation);
  }
}

TEST(Coherent, PartitionRoundTrip) {
  const auto a = CoherentConfig::from_group(catalog::dihedral(6));
  const auto b = CoherentConfig::from_partition(6, a.pair_labels());
  EXPECT_EQ(a.tensor(), b.tensor());
  EXPECT_TRUE(b.transitive());
  EXPECT_TRUE(verify_axioms(b).all_pass());
}

TEST(Coherent, PartitionLabelGap) {
  std::vector<std::uint32_t> labels(4, 0);
  labels[3] = 2;
  EXPECT_THROW(CoherentConfig::from_partition(2, labels), Error);
}

TEST(Coherent, AlgebraStructure) {
  const auto c = CoherentConfig::from_group(catalog::dihedral(4));
  for (std::uint32_t p : {2u, 3u}) {
    const auto a = to_algebra(c, p);
    EXPECT_EQ(a.dim(), 3u);
    EXPECT_EQ(a.unit(), (std::vector<gf::Elem>{1, 0, 0}));
    EXPECT_TRUE(a.is_commutative());
    for (std::size_t t = 0; t < 3; ++t)
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t s = 0; s < 3; ++s)
          EXPECT_EQ(a.c(r, s, t), static_cast<gf::Elem>(c.c(t, r, s) % p));
  }
}

TEST(Coherent, SymmetrizingForm) {
  // gram(k,l) = valency of k when l = k*, else 0
  const auto c = CoherentConfig::from_group(catalog::dihedral(4));
  const auto f2 = symmetrizing_form(c, 2);
  const auto f3 = symmetrizing_form(c, 3);
  for (const auto& o : c.orbitals())
    for (const auto& q : c.orbitals()) {
      const std::uint64_t expect = q.id == o.paired ? o.valency : 0;
      EXPECT_EQ(f3.gram(o.id, q.id), expect % 3);
      EXPECT_EQ(f2.gram(o.id, q.id), expect % 2);
    }
  EXPECT_TRUE(f3.symmetric);
  EXPECT_TRUE(f3.nondegenerate);
  EXPECT_FALSE(f2.nondegenerate);
}

TEST(Coherent, CentralizerOracle) {
  for (const char* spec : {"dihedral:4", "sym:5", "sympairs:5", "cyclic:7", "agl1:8"}) {
    const auto e = catalog::builtin(spec);
    const auto c = CoherentConfig::from_group(e.group);
    for (std::uint32_t p : {2u, 3u, 5u}) EXPECT_EQ(centralizer_dimension_oracle(e.group, p), c.rank()) << spec;
  }
  try {
    centralizer_dimension_oracle(catalog::cyclic(31), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeTooLarge);
  }
}

TEST(Coherent, MatrixModel) {
  for (const char* spec : {"dihedral:4", "sympairs:5", "gl3flags:2", "psl2:7"})
    EXPECT_TRUE(matrix_model_holds(CoherentConfig::from_group(catalog::builtin(spec).group))) << spec;
}
