#include <gtest/gtest.h>

#include <numeric>

#include "hsw/catalog.hpp"
#include "hsw/criteria.hpp"
#include "hsw/error.hpp"
#include "hsw/schur.hpp"

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

struct Params {
  std::uint64_t a, b, lambda;
};

// S_n on 2-subsets: relations "share one point" and "disjoint". Count
// valencies and lambda directly on the subsets.
Params pairs_oracle(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> pts;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) pts.emplace_back(i, j);
  auto meet = [](auto u, auto v) {
    return unsigned(u.first == v.first) + (u.first == v.second) + (u.second == v.first) + (u.second == v.second);
  };
  std::uint64_t share = 0, disjoint = 0;
  for (const auto& v : pts) {
    if (meet(pts[0], v) == 1) ++share;
    if (meet(pts[0], v) == 0) ++disjoint;
  }
  const unsigned d1 = share < disjoint ? 1 : 0;  // meet value of the smaller relation
  const unsigned d2 = 1 - d1;
  std::size_t beta = 0;
  while (meet(pts[0], pts[beta]) != d2 || beta == 0) ++beta;
  std::uint64_t lambda = 0;
  for (const auto& g : pts) lambda += meet(pts[0], g) == d1 && meet(g, pts[beta]) == d1;
  return {std::min(share, disjoint), std::max(share, disjoint), lambda};
}

}  // namespace

TEST(Rank3, DihedralFour) {
  const auto c = CoherentConfig::from_group(catalog::dihedral(4));
  const auto d = rank3_lambda(c);
  EXPECT_EQ(d.a, 1u);
  EXPECT_EQ(d.b, 2u);
  EXPECT_EQ(d.lambda, 0u);
  EXPECT_EQ(d.n, 4u);
  const auto t = rank3_s_test(d);
  EXPECT_EQ(t.gcd_value, 2u);  // gcd(4, 2, 0, 2)
  EXPECT_FALSE(t.is_s_permutation);
}

TEST(Rank3, PairsMatchSubsetCounting) {
  for (unsigned n : {4u, 5u, 6u, 8u}) {
    const auto c = CoherentConfig::from_group(catalog::sym_on_pairs(n));
    const auto d = rank3_lambda(c);
    const auto o = pairs_oracle(n);
    EXPECT_EQ(d.a, o.a) << n;
    EXPECT_EQ(d.b, o.b) << n;
    EXPECT_EQ(d.lambda, o.lambda) << n;
  }
}

TEST(Rank3, PetersenParameters) {
  // complement of the Petersen graph is D2 here; the Petersen graph itself
  // has mu = 1 common neighbours for non-adjacent vertices
  const auto d = rank3_lambda(CoherentConfig::from_group(catalog::sym_on_pairs(5)));
  EXPECT_EQ(d.a, 3u);
  EXPECT_EQ(d.b, 6u);
  EXPECT_EQ(d.lambda, 1u);
  const auto t = rank3_s_test(d);
  EXPECT_EQ(t.gcd_value, std::gcd(std::gcd(10, 18), std::gcd(1, 6 - 1 * 6 / 3)));
  EXPECT_EQ(t.gcd_value, 1u);
  EXPECT_TRUE(t.is_s_permutation);
}

TEST(Rank3, Errors) {
  EXPECT_EQ(kind_of([] { rank3_lambda(CoherentConfig::from_group(catalog::symmetric_natural(5))); }),
            ErrorKind::NotRankThree);
  EXPECT_EQ(kind_of([] { rank3_lambda(CoherentConfig::from_group(catalog::dihedral(5))); }),
            ErrorKind::EqualSubdegrees);
  EXPECT_EQ(kind_of([] { rank3_lambda(CoherentConfig::from_group(catalog::sym_on_pairs(7))); }),
            ErrorKind::EqualSubdegrees);
  PermGroup intrans(3, {parse_permutation("(1 2)", 3)});
  EXPECT_EQ(kind_of([&] { rank3_lambda(CoherentConfig::from_group(intrans)); }), ErrorKind::NotRankThree);
}

TEST(Rank3, GcdTestMatchesDirectVerdict) {
  for (const auto& spec : catalog::sweep_specs(30)) {
    const auto e = catalog::builtin(spec);
    const auto c = CoherentConfig::from_group(e.group);
    if (c.rank() != 3) continue;
    Rank3Data d;
    try {
      d = rank3_lambda(c);
    } catch (const Error& err) {
      EXPECT_EQ(err.kind(), ErrorKind::EqualSubdegrees) << spec;
      continue;
    }
    bool all = true;
    for (auto p : gf::primes_up_to(static_cast<std::uint32_t>(c.degree())))
      all = all && is_symmetric(to_algebra(c, p)).holds;
    EXPECT_EQ(rank3_s_test(d).is_s_permutation, all) << spec;
  }
}

TEST(Criteria, DihedralFour) {
  const auto g = catalog::dihedral(4);
  const auto c = CoherentConfig::from_group(g);
  const auto r3 = p_s_report(g, c, 3);
  EXPECT_EQ(r3.conditions[0].status, ConditionStatus::Fired);
  EXPECT_TRUE(r3.direct.holds);
  EXPECT_TRUE(r3.consistent);

  const auto r2 = p_s_report(g, c, 2);
  for (const auto& cond : r2.conditions) EXPECT_EQ(cond.status, ConditionStatus::NotFired);
  EXPECT_FALSE(r2.any_fired);
  EXPECT_FALSE(r2.direct.holds);
  EXPECT_TRUE(r2.consistent);
}

TEST(Criteria, IndexCondition) {
  // AGL(1,5): |G|/(n m) = 20/(5*4) = 1
  const auto g = catalog::agl1(5);
  const auto r = p_s_report(g, CoherentConfig::from_group(g), 2);
  EXPECT_EQ(r.conditions[0].status, ConditionStatus::NotFired);
  EXPECT_EQ(r.conditions[1].status, ConditionStatus::Fired);
  EXPECT_TRUE(r.direct.holds);
}

TEST(Criteria, LargePrimeFiresBound) {
  const auto g = catalog::sym_on_pairs(4);
  const auto c = CoherentConfig::from_group(g);
  for (std::uint32_t p : {5u, 7u, 11u}) {
    const auto r = p_s_report(g, c, p);
    EXPECT_EQ(r.conditions[3].status, ConditionStatus::Fired);
    EXPECT_TRUE(r.direct.holds);
  }
  EXPECT_EQ(p_s_report(g, c, 3).conditions[3].status, ConditionStatus::NotFired);  // 6 < 6 fails
}

TEST(Criteria, CandidateSubgroup) {
  const auto g = catalog::dihedral(4);
  const auto c = CoherentConfig::from_group(g);
  CriteriaOptions o;
  o.candidate_regular = std::vector<Permutation>{parse_permutation("(1 2 3 4)", 4)};
  EXPECT_EQ(p_s_report(g, c, 3, o).conditions[2].status, ConditionStatus::Fired);
  o.candidate_regular = std::vector<Permutation>{parse_permutation("(2 4)", 4)};
  EXPECT_EQ(p_s_report(g, c, 3, o).conditions[2].status, ConditionStatus::Unevaluated);

  // S3 acting regularly on itself inside S6: regular but not abelian
  const auto els = catalog::symmetric_natural(3).elements();
  const auto t = FiniteGroupTable::from_permutations(els);
  std::vector<Permutation> regular;
  for (std::uint32_t a = 0; a < 6; ++a) {
    std::vector<Point> img(6);
    for (std::uint32_t i = 0; i < 6; ++i) img[i] = t.mul(i, a);
    regular.push_back(Permutation::from_images(img));
  }
  const auto s6 = catalog::symmetric_natural(6);
  o.candidate_regular = regular;
  const auto r = p_s_report(s6, CoherentConfig::from_group(s6), 5, o);
  EXPECT_EQ(r.conditions[2].status, ConditionStatus::Unevaluated);
  EXPECT_NE(r.conditions[2].detail.find("abelian"), std::string::npos);
}

TEST(Criteria, PrimeDividingDegree) {
  const auto g = catalog::cyclic(6);
  const auto r = p_s_report(g, CoherentConfig::from_group(g), 3);
  EXPECT_EQ(r.conditions[2].status, ConditionStatus::NotFired);
  EXPECT_EQ(r.conditions[4].status, ConditionStatus::NotFired);
}

TEST(Criteria, Errors) {
  const auto g = catalog::dihedral(4);
  const auto c = CoherentConfig::from_group(g);
  EXPECT_EQ(kind_of([&] { p_s_report(g, c, 4); }), ErrorKind::NotPrime);
  PermGroup intrans(3, {parse_permutation("(1 2)", 3)});
  EXPECT_EQ(kind_of([&] { p_s_report(intrans, CoherentConfig::from_group(intrans), 2); }),
            ErrorKind::NotTransitive);
  EXPECT_EQ(kind_of([&] { s_report(intrans); }), ErrorKind::NotTransitive);
}

TEST(SReport, DihedralFour) {
  const auto s = s_report(catalog::dihedral(4));
  EXPECT_EQ(s.primes, (std::vector<std::uint32_t>{2, 3}));
  EXPECT_EQ(s.prime_bound, 4u);
  EXPECT_FALSE(s.symmetric_at_all_tested);
  ASSERT_TRUE(s.rank3.has_value());
  EXPECT_EQ(s.rank3_test->gcd_value, 2u);
  EXPECT_EQ(s.order, 8u);
}

TEST(SReport, Pairs5) {
  const auto s = s_report(catalog::sym_on_pairs(5));
  EXPECT_EQ(s.primes, (std::vector<std::uint32_t>{2, 3, 5, 7}));
  EXPECT_TRUE(s.symmetric_at_all_tested);
  for (const auto& r : s.per_prime) EXPECT_TRUE(r.consistent);
  ASSERT_TRUE(s.rank3.has_value());
  EXPECT_EQ(s.rank3->lambda, 1u);
  EXPECT_TRUE(s.rank3_test->is_s_permutation);
}

TEST(SReport, EqualSubdegreesNote) {
  const auto s = s_report(catalog::dihedral(5));
  EXPECT_FALSE(s.rank3.has_value());
  EXPECT_NE(s.rank3_note.find("EqualSubdegrees"), std::string::npos);
}

TEST(SReport, ExplicitPrimes) {
  const auto s = s_report(catalog::symmetric_natural(5), {2, 5});
  EXPECT_EQ(s.per_prime.size(), 2u);
  EXPECT_TRUE(s.symmetric_at_all_tested);
  EXPECT_EQ(s.rank, 2u);
}
