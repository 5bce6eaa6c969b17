#include "hsw/criteria.hpp"

#include <numeric>

#include "hsw/error.hpp"
#include "hsw/gfield.hpp"

namespace hsw {

Rank3Data rank3_lambda(const CoherentConfig& config) {
  if (!config.transitive() || config.rank() != 3)
    throw Error(ErrorKind::NotRankThree, "configuration has rank " + std::to_string(config.rank()) +
                                             (config.transitive() ? "" : " and is not homogeneous"));
  std::vector<std::size_t> nontrivial;
  std::size_t h = 0;
  for (const auto& o : config.orbitals()) {
    if (o.reflexive)
      h = o.id;
    else
      nontrivial.push_back(o.id);
  }
  const auto& orb = config.orbitals();
  if (orb[nontrivial[0]].valency > orb[nontrivial[1]].valency) std::swap(nontrivial[0], nontrivial[1]);

  Rank3Data d;
  d.d1 = nontrivial[0];
  d.d2 = nontrivial[1];
  d.a = orb[d.d1].valency;
  d.b = orb[d.d2].valency;
  d.n = config.degree();
  if (d.a == d.b)
    throw Error(ErrorKind::EqualSubdegrees,
                "nontrivial subdegrees are equal (" + std::to_string(d.a) + "); lambda needs a < b");
  d.lambda = static_cast<std::uint64_t>(config.c(d.d2, d.d1, d.d1));

  const auto a = static_cast<std::int64_t>(d.a), b = static_cast<std::int64_t>(d.b),
             l = static_cast<std::int64_t>(d.lambda);
  if ((l * b) % a != 0) throw Error(ErrorKind::CoefficientMismatch, "a does not divide lambda * b");
  const std::int64_t lba = l * b / a;
  struct Expect {
    std::size_t t, r, s;
    std::int64_t value;
    const char* what;
  };
  const Expect expected[] = {
      {h, d.d1, d.d1, a, "H in D1 D1"},
      {d.d1, d.d1, d.d1, a - 1 - lba, "D1 in D1 D1"},
      {d.d2, d.d1, d.d1, l, "D2 in D1 D1"},
      {h, d.d2, d.d2, b, "H in D2 D2"},
      {d.d1, d.d2, d.d2, b - lba, "D1 in D2 D2"},
      {d.d2, d.d2, d.d2, b - a - 1 + l, "D2 in D2 D2"},
      {h, d.d1, d.d2, 0, "H in D1 D2"},
      {d.d1, d.d1, d.d2, lba, "D1 in D1 D2"},
      {d.d2, d.d1, d.d2, a - l, "D2 in D1 D2"},
      {h, d.d2, d.d1, 0, "H in D2 D1"},
      {d.d1, d.d2, d.d1, lba, "D1 in D2 D1"},
      {d.d2, d.d2, d.d1, a - l, "D2 in D2 D1"},
  };
  for (const auto& e : expected)
    if (config.c(e.t, e.r, e.s) != e.value)
      throw Error(ErrorKind::CoefficientMismatch, std::string("coefficient of ") + e.what + " is " +
                                                      std::to_string(config.c(e.t, e.r, e.s)) + ", expected " +
                                                      std::to_string(e.value));
  return d;
}

Rank3Test rank3_s_test(const Rank3Data& d) {
  const std::uint64_t lba = d.lambda * d.b / d.a;
  std::uint64_t g = std::gcd(d.a + d.b + 1, d.a * d.b);
  g = std::gcd(g, d.lambda);
  g = std::gcd(g, d.b - lba);
  return {g == 1, g};
}

std::string to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Fired: return "fired";
    case ConditionStatus::NotFired: return "not_fired";
    case ConditionStatus::Unevaluated: return "unevaluated";
  }
  return "unevaluated";
}

CriterionReport p_s_report(const PermGroup& g, const CoherentConfig& config, std::uint32_t p,
                           const CriteriaOptions& options) {
  if (!gf::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (!is_transitive(g)) throw Error(ErrorKind::NotTransitive, "group is not transitive");
  const std::uint64_t n = g.degree();
  const auto subdegrees = config.subdegrees();
  auto fired = [](bool yes, std::string detail) {
    return ConditionOutcome{yes ? ConditionStatus::Fired : ConditionStatus::NotFired, std::move(detail)};
  };

  CriterionReport r;
  r.p = p;

  {
    std::uint64_t bad = 0;
    for (auto m : subdegrees)
      if (m % p == 0) bad = m;
    r.conditions[0] = fired(bad == 0, bad ? "subdegree " + std::to_string(bad) + " divisible by p" : "");
  }

  if (const auto order = g.order(options.cap)) {
    std::string detail;
    bool ok = true;
    for (const auto& o : config.orbitals()) {
      if (o.reflexive) continue;
      const auto m = o.valency;
      const auto q = *order / (n * m);
      if (q % p == 0) {
        ok = false;
        detail = "|G|/(nm) = " + std::to_string(q) + " for m = " + std::to_string(m);
        break;
      }
    }
    r.conditions[1] = fired(ok, detail);
  } else {
    r.conditions[1] = {ConditionStatus::Unevaluated, "group order exceeds cap"};
  }

  if (n % p == 0) {
    r.conditions[2] = fired(false, "p divides n, so no regular subgroup is a p'-group");
  } else if (options.candidate_regular) {
    const auto& gens = *options.candidate_regular;
    const auto check = is_regular_subgroup(g, gens, options.cap);
    if (!check.regular)
      r.conditions[2] = {ConditionStatus::Unevaluated, "candidate is not a regular subgroup"};
    else if (!is_abelian(gens))
      r.conditions[2] = {ConditionStatus::Unevaluated, "candidate is not abelian"};
    else
      r.conditions[2] = fired(true, "supplied candidate");
  } else {
    std::optional<Permutation> c;
    try {
      c = find_cyclic_regular(g, options.cap);
    } catch (const CapExceeded&) {
    }
    if (c)
      r.conditions[2] = fired(true, "cyclic regular subgroup generated by " + c->to_cycle_string());
    else
      r.conditions[2] = {ConditionStatus::Unevaluated, "no candidate subgroup found"};
  }

  r.conditions[3] = fired(n < 2ull * p, "");
  r.conditions[4] = fired(n % p != 0 && config.rank() == 3, "");

  r.direct = is_symmetric(to_algebra(config, p), options.decision);
  for (const auto& c : r.conditions) r.any_fired = r.any_fired || c.status == ConditionStatus::Fired;
  r.consistent = !(r.any_fired && !r.direct.holds);
  return r;
}

SReport s_report(const PermGroup& g, std::vector<std::uint32_t> primes, const CriteriaOptions& options) {
  if (!is_transitive(g)) throw Error(ErrorKind::NotTransitive, "group is not transitive");
  const auto config = CoherentConfig::from_group(g);
  SReport s;
  s.degree = g.degree();
  s.rank = config.rank();
  s.subdegrees = config.subdegrees();
  s.order = g.order(options.cap);
  s.prime_bound = static_cast<std::uint32_t>(g.degree());
  if (primes.empty()) primes = gf::primes_up_to(static_cast<std::uint32_t>(g.degree()));
  s.primes = primes;
  s.symmetric_at_all_tested = true;
  for (auto p : primes) {
    s.per_prime.push_back(p_s_report(g, config, p, options));
    s.symmetric_at_all_tested = s.symmetric_at_all_tested && s.per_prime.back().direct.holds;
  }
  if (config.rank() == 3) {
    try {
      s.rank3 = rank3_lambda(config);
      s.rank3_test = rank3_s_test(*s.rank3);
    } catch (const Error& e) {
      s.rank3_note = std::string(to_string(e.kind())) + ": " + e.what();
    }
  }
  return s;
}

}  // namespace hsw
