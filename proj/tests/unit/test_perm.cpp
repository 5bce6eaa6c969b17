#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hsw/error.hpp"
#include "hsw/perm.hpp"

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

PermGroup d8() {
  return PermGroup(4, {parse_permutation("(1 2 3 4)", 4), parse_permutation("(2 4)", 4)});
}

Permutation random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>(i);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation::from_images(v);
}

}  // namespace

TEST(Permutation, ParseCycleNotation) {
  EXPECT_EQ(parse_permutation("(1 2 3 4)", 4).images(), (std::vector<Point>{1, 2, 3, 0}));
  EXPECT_EQ(parse_permutation("(2 4)", 4).images_1based(), (std::vector<std::int64_t>{1, 4, 3, 2}));
  EXPECT_EQ(parse_permutation("(1,3)(2,4)", 4).images(), (std::vector<Point>{2, 3, 0, 1}));
  EXPECT_TRUE(parse_permutation("()", 5).is_identity());
  EXPECT_TRUE(parse_permutation(" ( 1 ) ", 3).is_identity());
}

TEST(Permutation, ParseErrors) {
  EXPECT_EQ(kind_of([] { parse_permutation("(1 2", 4); }), ErrorKind::MalformedCycle);
  EXPECT_EQ(kind_of([] { parse_permutation("1 2)", 4); }), ErrorKind::MalformedCycle);
  EXPECT_EQ(kind_of([] { parse_permutation("(1 a)", 4); }), ErrorKind::MalformedCycle);
  EXPECT_EQ(kind_of([] { parse_permutation("(1 5)", 4); }), ErrorKind::PointOutOfRange);
  EXPECT_EQ(kind_of([] { parse_permutation("(0 1)", 4); }), ErrorKind::PointOutOfRange);
  EXPECT_EQ(kind_of([] { parse_permutation("(1 2)(2 3)", 4); }), ErrorKind::RepeatedPoint);
  EXPECT_EQ(kind_of([] { Permutation::from_images({0, 0, 1}); }), ErrorKind::RepeatedPoint);
  EXPECT_EQ(kind_of([] { Permutation::from_images({0, 3, 1}); }), ErrorKind::PointOutOfRange);
}

TEST(Permutation, CycleStringRoundTrip) {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto p = random_perm(rng, 9);
    EXPECT_EQ(parse_permutation(p.to_cycle_string(), 9), p);
  }
  EXPECT_EQ(Permutation::identity(3).to_cycle_string(), "()");
  EXPECT_EQ(parse_permutation("(3 1 2)", 3).to_cycle_string(), "(1 2 3)");
}

TEST(Permutation, ComposeIsRightAction) {
  const auto p = parse_permutation("(1 2 3 4)", 4);
  const auto q = parse_permutation("(2 4)", 4);
  // chase 1 -> 2 -> 4, 2 -> 3 -> 3, 3 -> 4 -> 2, 4 -> 1 -> 1
  EXPECT_EQ(compose(p, q), parse_permutation("(1 4)(2 3)", 4));
  EXPECT_EQ(compose(q, p), parse_permutation("(1 2)(3 4)", 4));

  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto a = random_perm(rng, 7), b = random_perm(rng, 7), c = random_perm(rng, 7);
    auto ab = a * b;
    for (Point x = 0; x < 7; ++x) EXPECT_EQ(ab(x), b(a(x)));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_TRUE((a.inverse() * a).is_identity());
  }
}

TEST(Permutation, ComposeDegreeMismatch) {
  EXPECT_EQ(kind_of([] { compose(Permutation::identity(3), Permutation::identity(4)); }),
            ErrorKind::DegreeMismatch);
}

TEST(Permutation, CycleType) {
  auto p = parse_permutation("(1 2 3)(4 5)", 6);
  auto lengths = p.cycle_lengths();
  std::sort(lengths.begin(), lengths.end());
  EXPECT_EQ(lengths, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_TRUE(parse_permutation("(1 3 2 4)", 4).is_full_cycle());
  EXPECT_FALSE(parse_permutation("(1 3)(2 4)", 4).is_full_cycle());
}

TEST(PermGroup, DihedralOrderEight) {
  auto g = d8();
  const auto& els = g.elements();
  ASSERT_EQ(els.size(), 8u);
  EXPECT_TRUE(els.front().is_identity());
  std::set<Permutation> distinct(els.begin(), els.end());
  EXPECT_EQ(distinct.size(), 8u);
  // closure: products stay inside
  for (const auto& a : els)
    for (const auto& b : els) EXPECT_TRUE(distinct.count(a * b));
  EXPECT_EQ(g.order(), 8u);
  EXPECT_TRUE(g.contains(parse_permutation("(1 3)", 4)));
  EXPECT_FALSE(g.contains(parse_permutation("(1 2)", 4)));
}

TEST(PermGroup, SymmetricGroupOrders) {
  std::uint64_t fact = 1;
  for (std::size_t n = 2; n <= 7; ++n) {
    fact *= n;
    std::vector<Point> cyc(n);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
    PermGroup s(n, {Permutation::from_images(cyc), parse_permutation("(1 2)", n)});
    EXPECT_EQ(s.order(), fact) << n;
  }
}

TEST(PermGroup, CapExceeded) {
  PermGroup s6(6, {parse_permutation("(1 2 3 4 5 6)", 6), parse_permutation("(1 2)", 6)});
  try {
    s6.elements(100);
    FAIL();
  } catch (const CapExceeded& e) {
    EXPECT_GE(e.lower_bound(), 100u);
  }
  EXPECT_FALSE(s6.order(100).has_value());
  EXPECT_EQ(s6.order(1000), 720u);
}

TEST(PermGroup, GeneratorDegreeMismatch) {
  EXPECT_EQ(kind_of([] { PermGroup(4, {Permutation::identity(3)}); }), ErrorKind::DegreeMismatch);
}

TEST(PermGroup, OrbitsAndTransitivity) {
  PermGroup g(6, {parse_permutation("(1 3)", 6), parse_permutation("(2 5 6)", 6)});
  auto o = orbits(g);
  ASSERT_EQ(o.size(), 3u);
  EXPECT_EQ(o[0], (std::vector<Point>{0, 2}));
  EXPECT_EQ(o[1], (std::vector<Point>{1, 4, 5}));
  EXPECT_EQ(o[2], (std::vector<Point>{3}));
  EXPECT_FALSE(is_transitive(g));
  EXPECT_TRUE(is_transitive(d8()));
  EXPECT_EQ(kind_of([&] { is_primitive(g); }), ErrorKind::NotTransitive);
}

TEST(PermGroup, Primitivity) {
  EXPECT_FALSE(is_primitive(d8()));
  EXPECT_EQ(minimal_block(d8(), 0, 2), (std::vector<Point>{0, 2}));
  EXPECT_EQ(minimal_block(d8(), 0, 1), (std::vector<Point>{0, 1, 2, 3}));
  PermGroup s5(5, {parse_permutation("(1 2 3 4 5)", 5), parse_permutation("(1 2)", 5)});
  EXPECT_TRUE(is_primitive(s5));
  PermGroup c5(5, {parse_permutation("(1 2 3 4 5)", 5)});
  EXPECT_TRUE(is_primitive(c5));
  PermGroup c6(6, {parse_permutation("(1 2 3 4 5 6)", 6)});
  EXPECT_FALSE(is_primitive(c6));
}

TEST(PermGroup, RegularSubgroups) {
  auto g = d8();
  std::vector<Permutation> c4{parse_permutation("(1 2 3 4)", 4)};
  auto r = is_regular_subgroup(g, c4);
  EXPECT_TRUE(r.regular);
  EXPECT_TRUE(r.membership_verified);
  EXPECT_EQ(r.subgroup_order, 4u);

  std::vector<Permutation> klein{parse_permutation("(1 2)(3 4)", 4), parse_permutation("(1 3)(2 4)", 4)};
  EXPECT_TRUE(is_regular_subgroup(g, klein).regular);

  std::vector<Permutation> refl{parse_permutation("(2 4)", 4)};
  EXPECT_FALSE(is_regular_subgroup(g, refl).regular);

  std::vector<Permutation> outside{parse_permutation("(1 2)", 4)};
  EXPECT_EQ(kind_of([&] { is_regular_subgroup(g, outside); }), ErrorKind::NotMember);
}

TEST(PermGroup, CyclicRegular) {
  auto c = find_cyclic_regular(d8());
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(c->is_full_cycle());
  EXPECT_EQ(cyclic_powers(*c).size(), 4u);

  // Klein four-group acting regularly has no 4-cycle
  PermGroup v4(4, {parse_permutation("(1 2)(3 4)", 4), parse_permutation("(1 3)(2 4)", 4)});
  EXPECT_FALSE(find_cyclic_regular(v4).has_value());
}

TEST(PermGroup, Abelian) {
  std::vector<Permutation> v4{parse_permutation("(1 2)(3 4)", 4), parse_permutation("(1 3)(2 4)", 4)};
  EXPECT_TRUE(is_abelian(v4));
  EXPECT_FALSE(is_abelian(d8().generators()));
}
