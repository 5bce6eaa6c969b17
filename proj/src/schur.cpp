#include "hsw/schur.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "hsw/algebra.hpp"
#include "hsw/error.hpp"

namespace hsw {

namespace {

using Set = std::vector<std::uint32_t>;

std::string set_string(const Set& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

// union-find over 0..n-1 driven by a list of image arrays
std::vector<Set> orbit_partition(std::size_t n, const std::vector<std::vector<std::uint32_t>>& maps) {
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& m : maps)
    for (std::uint32_t i = 0; i < n; ++i) {
      auto a = find(i), b = find(m[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::uint32_t, Set> cells;
  for (std::uint32_t i = 0; i < n; ++i) cells[find(i)].push_back(i);
  std::vector<Set> out;
  for (auto& [root, cell] : cells) out.push_back(std::move(cell));
  return out;
}

bool is_union_of_sets(const SchurPartition& a, const Set& subset) {
  std::vector<bool> in(a.group().order(), false);
  for (auto x : subset) in[x] = true;
  for (const auto& s : a.sets()) {
    const bool first = in[s.front()];
    for (auto x : s)
      if (in[x] != first) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- tables

FiniteGroupTable FiniteGroupTable::create(std::size_t order, std::vector<std::uint32_t> table,
                                          std::vector<std::string> labels) {
  if (order == 0 || table.size() != order * order)
    throw Error(ErrorKind::BadParameter, "multiplication table must have order^2 entries");
  for (auto v : table)
    if (v >= order) throw Error(ErrorKind::BadParameter, "table entry out of range");

  FiniteGroupTable g;
  g.order_ = order;
  g.table_ = std::move(table);
  bool found = false;
  for (std::uint32_t e = 0; e < order && !found; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < order && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::BadParameter, "table has no identity");

  g.inverse_.assign(order, 0);
  for (std::uint32_t a = 0; a < order; ++a) {
    std::vector<bool> row(order, false), col(order, false);
    for (std::uint32_t b = 0; b < order; ++b) {
      row[g.mul(a, b)] = true;
      col[g.mul(b, a)] = true;
      if (g.mul(a, b) == g.identity_) g.inverse_[a] = b;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() ||
        std::find(col.begin(), col.end(), false) != col.end())
      throw Error(ErrorKind::BadParameter, "table is not a Latin square");
  }
  for (std::uint32_t a = 0; a < order; ++a)
    for (std::uint32_t b = 0; b < order; ++b) {
      const auto ab = g.mul(a, b);
      for (std::uint32_t c = 0; c < order; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          throw Error(ErrorKind::BadParameter, "table is not associative");
    }

  if (labels.empty())
    for (std::size_t i = 0; i < order; ++i) labels.push_back(std::to_string(i));
  if (labels.size() != order) throw Error(ErrorKind::BadParameter, "need one label per element");
  g.labels_ = std::move(labels);
  return g;
}

FiniteGroupTable FiniteGroupTable::cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadParameter, "cyclic group needs n >= 1");
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
  return create(n, std::move(table));
}

FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable& h, const FiniteGroupTable& g) {
  const std::size_t nh = h.order(), ng = g.order(), n = nh * ng;
  std::vector<std::uint32_t> table(n * n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back("(" + h.labels()[a / ng] + "," + g.labels()[a % ng] + ")");
    for (std::size_t b = 0; b < n; ++b) {
      const auto x = h.mul(static_cast<std::uint32_t>(a / ng), static_cast<std::uint32_t>(b / ng));
      const auto y = g.mul(static_cast<std::uint32_t>(a % ng), static_cast<std::uint32_t>(b % ng));
      table[a * n + b] = static_cast<std::uint32_t>(x * ng + y);
    }
  }
  return create(n, std::move(table), std::move(labels));
}

FiniteGroupTable FiniteGroupTable::from_permutations(const std::vector<Permutation>& elements) {
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<std::uint32_t>(i));
  if (index.size() != elements.size()) throw Error(ErrorKind::BadParameter, "repeated group element");
  const std::size_t n = elements.size();
  std::vector<std::uint32_t> table(n * n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(elements[a].to_cycle_string());
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(compose(elements[a], elements[b]));
      if (it == index.end()) throw Error(ErrorKind::BadParameter, "elements are not closed under composition");
      table[a * n + b] = it->second;
    }
  }
  return create(n, std::move(table), std::move(labels));
}

std::uint64_t FiniteGroupTable::element_order(std::uint32_t a) const {
  std::uint64_t k = 1;
  for (auto x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroupTable::is_abelian() const {
  for (std::uint32_t a = 0; a < order_; ++a)
    for (std::uint32_t b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<std::uint32_t> FiniteGroupTable::cyclic_generator() const {
  for (std::uint32_t a = 0; a < order_; ++a)
    if (element_order(a) == order_) return a;
  return std::nullopt;
}

bool is_subgroup(const FiniteGroupTable& g, const std::vector<std::uint32_t>& subset) {
  if (subset.empty()) return false;
  std::vector<bool> in(g.order(), false);
  for (auto x : subset) {
    if (x >= g.order()) return false;
    in[x] = true;
  }
  for (auto a : subset)
    for (auto b : subset)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

bool is_normal(const FiniteGroupTable& g, const std::vector<std::uint32_t>& subgroup) {
  std::vector<bool> in(g.order(), false);
  for (auto x : subgroup) in[x] = true;
  for (std::uint32_t a = 0; a < g.order(); ++a)
    for (auto u : subgroup)
      if (!in[g.mul(g.mul(g.inv(a), u), a)]) return false;
  return true;
}

std::vector<std::uint32_t> generated_subgroup(const FiniteGroupTable& g, const std::vector<std::uint32_t>& gens) {
  std::vector<bool> in(g.order(), false);
  Set out{g.identity()};
  in[g.identity()] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (auto s : gens) {
      const auto x = g.mul(out[head], s);
      if (!in[x]) {
        in[x] = true;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint32_t>> all_subgroups(const FiniteGroupTable& g) {
  std::set<Set> found;
  std::vector<Set> frontier;
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    auto s = generated_subgroup(g, {a});
    if (found.insert(s).second) frontier.push_back(s);
  }
  const std::vector<Set> cyclic(found.begin(), found.end());
  // join with cyclic subgroups until nothing new appears
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (const auto& s : frontier)
      for (const auto& c : cyclic) {
        Set gens = s;
        gens.insert(gens.end(), c.begin(), c.end());
        auto joined = generated_subgroup(g, gens);
        if (found.insert(joined).second) next.push_back(std::move(joined));
      }
    frontier = std::move(next);
  }
  std::vector<Set> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const Set& a, const Set& b) { return a.size() < b.size(); });
  return out;
}

FiniteGroupTable subgroup_table(const FiniteGroupTable& g, const std::vector<std::uint32_t>& elements) {
  std::vector<std::int64_t> pos(g.order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] >= g.order() || pos[elements[i]] != -1)
      throw Error(ErrorKind::BadParameter, "subgroup elements must be distinct elements of G");
    pos[elements[i]] = static_cast<std::int64_t>(i);
  }
  const std::size_t n = elements.size();
  std::vector<std::uint32_t> table(n * n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(g.labels()[elements[a]]);
    for (std::size_t b = 0; b < n; ++b) {
      const auto p = pos[g.mul(elements[a], elements[b])];
      if (p < 0) throw Error(ErrorKind::BadParameter, "subset is not closed under multiplication");
      table[a * n + b] = static_cast<std::uint32_t>(p);
    }
  }
  return FiniteGroupTable::create(n, std::move(table), std::move(labels));
}

Quotient quotient(const FiniteGroupTable& g, const std::vector<std::uint32_t>& u) {
  if (!is_subgroup(g, u)) throw Error(ErrorKind::IncompatibleInputs, "U is not a subgroup of G");
  if (!is_normal(g, u)) throw Error(ErrorKind::IncompatibleInputs, "U is not normal in G");
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> coset_of(g.order(), kNone);
  std::vector<Set> cosets;
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    if (coset_of[a] != kNone) continue;
    Set c;
    for (auto x : u) c.push_back(g.mul(a, x));
    std::sort(c.begin(), c.end());
    for (auto x : c) coset_of[x] = static_cast<std::uint32_t>(cosets.size());
    cosets.push_back(std::move(c));
  }
  const std::size_t m = cosets.size();
  std::vector<std::uint32_t> table(m * m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(g.labels()[cosets[i].front()] + "U");
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = coset_of[g.mul(cosets[i].front(), cosets[j].front())];
  }
  return Quotient{FiniteGroupTable::create(m, std::move(table), std::move(labels)), std::move(coset_of),
                  std::move(cosets)};
}

// ---------------------------------------------------------------- partitions

SchurPartition SchurPartition::make(GroupPtr group, std::vector<std::vector<std::uint32_t>> sets) {
  const std::size_t n = group->order();
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> owner(n, kNone);
  for (auto& s : sets) {
    if (s.empty()) throw Error(ErrorKind::InvalidPartition, "empty basic set");
    std::sort(s.begin(), s.end());
    for (auto x : s) {
      if (x >= n) throw Error(ErrorKind::InvalidPartition, "element " + std::to_string(x) + " is not in G");
      if (owner[x] != kNone) throw Error(ErrorKind::InvalidPartition, "element " + std::to_string(x) + " repeated");
      owner[x] = 0;
    }
  }
  if (std::find(owner.begin(), owner.end(), kNone) != owner.end())
    throw Error(ErrorKind::InvalidPartition, "basic sets do not cover G");

  const auto e = group->identity();
  std::sort(sets.begin(), sets.end(), [e](const Set& a, const Set& b) {
    const bool ea = std::binary_search(a.begin(), a.end(), e), eb = std::binary_search(b.begin(), b.end(), e);
    if (ea != eb) return ea;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  SchurPartition p;
  p.group_ = std::move(group);
  p.set_of_.assign(n, 0);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (auto x : sets[i]) p.set_of_[x] = static_cast<std::uint32_t>(i);
  p.sets_ = std::move(sets);
  return p;
}

SchurPartition SchurPartition::group_algebra(GroupPtr group) {
  std::vector<Set> sets;
  for (std::uint32_t i = 0; i < group->order(); ++i) sets.push_back({i});
  return make(std::move(group), std::move(sets));
}

SchurPartition SchurPartition::trivial(GroupPtr group) {
  Set rest;
  for (std::uint32_t i = 0; i < group->order(); ++i)
    if (i != group->identity()) rest.push_back(i);
  std::vector<Set> sets{{group->identity()}};
  if (!rest.empty()) sets.push_back(std::move(rest));
  return make(std::move(group), std::move(sets));
}

SchurValidation validate(const SchurPartition& partition) {
  SchurValidation out;
  const auto& g = partition.group();
  const auto& sets = partition.sets();
  const std::size_t r = sets.size(), n = g.order();

  if (sets.front() != Set{g.identity()}) {
    out.reason = "{e} is not a basic set";
    return out;
  }
  out.constants.assign(r * r * r, 0);
  std::vector<std::int64_t> counts(n);
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y) {
      std::fill(counts.begin(), counts.end(), 0);
      for (auto a : sets[x])
        for (auto b : sets[y]) ++counts[g.mul(a, b)];
      for (std::size_t z = 0; z < r; ++z) {
        const auto g0 = sets[z].front();
        for (auto h : sets[z])
          if (counts[h] != counts[g0]) {
            out.reason = "product of basic sets " + std::to_string(x) + " and " + std::to_string(y) +
                         " is not constant on basic set " + std::to_string(z);
            out.witness = InvalidWitness{x, y, g0, h, counts[g0], counts[h]};
            out.constants.clear();
            return out;
          }
        out.constants[(x * r + y) * r + z] = counts[g0];
      }
    }
  for (std::size_t x = 0; x < r; ++x) {
    Set inv;
    for (auto a : sets[x]) inv.push_back(g.inv(a));
    std::sort(inv.begin(), inv.end());
    if (sets[partition.set_of(inv.front())] != inv) {
      out.reason = "inverse of basic set " + std::to_string(x) + " is not a basic set";
      out.constants.clear();
      return out;
    }
  }
  out.valid = true;
  return out;
}

namespace {

bool is_valid_schur(const SchurPartition& p) { return validate(p).valid; }

SchurPartition require_valid(SchurPartition p, const char* what) {
  auto v = validate(p);
  if (!v.valid) throw Error(ErrorKind::InvalidPartition, std::string(what) + ": " + v.reason);
  return p;
}

}  // namespace

SchurPartition from_regular_action(const PermGroup& g, const std::vector<Permutation>& n_elements) {
  const std::size_t n = g.degree();
  if (!is_transitive(g)) throw Error(ErrorKind::NotTransitive, "group is not transitive");
  if (n_elements.size() != n)
    throw Error(ErrorKind::NotRegular, "a regular subgroup has exactly " + std::to_string(n) + " elements");

  std::vector<std::int64_t> pi_inv(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (n_elements[i].degree() != n) throw Error(ErrorKind::DegreeMismatch, "subgroup element has wrong degree");
    const auto beta = n_elements[i](0);
    if (pi_inv[beta] != -1) throw Error(ErrorKind::NotRegular, "subgroup is not transitive");
    pi_inv[beta] = static_cast<std::int64_t>(i);
  }
  for (const auto& x : n_elements)
    if (!g.contains(x)) throw Error(ErrorKind::NotRegular, "element " + x.to_cycle_string() + " is not in G");

  GroupPtr table;
  try {
    table = std::make_shared<const FiniteGroupTable>(FiniteGroupTable::from_permutations(n_elements));
  } catch (const Error&) {
    throw Error(ErrorKind::NotRegular, "elements do not form a subgroup");
  }

  std::vector<std::vector<std::uint32_t>> stabiliser_maps;
  for (const auto& x : g.elements())
    if (x(0) == 0 && !x.is_identity()) {
      std::vector<std::uint32_t> images(n);
      for (Point b = 0; b < n; ++b) images[b] = x(b);
      stabiliser_maps.push_back(std::move(images));
    }
  std::vector<Set> sets;
  for (const auto& orbit : orbit_partition(n, stabiliser_maps)) {
    Set s;
    for (auto beta : orbit) s.push_back(static_cast<std::uint32_t>(pi_inv[beta]));
    sets.push_back(std::move(s));
  }
  return require_valid(SchurPartition::make(std::move(table), std::move(sets)), "stabiliser orbits");
}

SchurPartition cyclotomic(GroupPtr group, const std::vector<std::vector<std::uint32_t>>& auts) {
  const auto& g = *group;
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < auts.size(); ++i) {
    const auto& f = auts[i];
    const std::string which = "map " + std::to_string(i);
    if (f.size() != n) throw Error(ErrorKind::NotAutomorphism, which + " has the wrong length");
    std::vector<bool> hit(n, false);
    for (auto v : f) {
      if (v >= n || hit[v]) throw Error(ErrorKind::NotAutomorphism, which + " is not a bijection");
      hit[v] = true;
    }
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        if (f[g.mul(a, b)] != g.mul(f[a], f[b]))
          throw Error(ErrorKind::NotAutomorphism, which + " does not respect multiplication");
  }
  return require_valid(SchurPartition::make(std::move(group), orbit_partition(n, auts)), "cyclotomic");
}

std::vector<std::uint32_t> unit_automorphism(std::size_t n, std::uint32_t u) {
  std::vector<std::uint32_t> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = static_cast<std::uint32_t>((i * u) % n);
  return f;
}

std::vector<std::vector<std::uint32_t>> unit_group_subgroups(std::size_t n) {
  if (n <= 2) return {{static_cast<std::uint32_t>(1 % n)}};
  Set units;
  for (std::uint32_t u = 1; u < n; ++u)
    if (std::gcd<std::size_t, std::size_t>(u, n) == 1) units.push_back(u);
  auto close = [n](Set gens) {
    std::set<std::uint32_t> s{1};
    std::vector<std::uint32_t> queue{1};
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (auto x : gens) {
        const auto y = static_cast<std::uint32_t>((std::uint64_t{queue[head]} * x) % n);
        if (s.insert(y).second) queue.push_back(y);
      }
    return Set(s.begin(), s.end());
  };
  std::set<Set> found;
  std::vector<Set> cyclic;
  for (auto u : units) {
    auto s = close({u});
    if (found.insert(s).second) cyclic.push_back(s);
  }
  std::vector<Set> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (const auto& s : frontier)
      for (const auto& c : cyclic) {
        Set gens = s;
        gens.insert(gens.end(), c.begin(), c.end());
        auto joined = close(gens);
        if (found.insert(joined).second) next.push_back(std::move(joined));
      }
    frontier = std::move(next);
  }
  std::vector<Set> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const Set& a, const Set& b) { return a.size() < b.size(); });
  return out;
}

SchurPartition cyclotomic_cyclic(std::size_t n, const std::vector<std::uint32_t>& units) {
  std::vector<std::vector<std::uint32_t>> auts;
  for (auto u : units) auts.push_back(unit_automorphism(n, u));
  return cyclotomic(std::make_shared<const FiniteGroupTable>(FiniteGroupTable::cyclic(n)), auts);
}

SchurPartition tensor(const SchurPartition& a, const SchurPartition& b) {
  auto product = std::make_shared<const FiniteGroupTable>(FiniteGroupTable::direct_product(a.group(), b.group()));
  const auto nb = static_cast<std::uint32_t>(b.group().order());
  std::vector<Set> sets;
  for (const auto& x : a.sets())
    for (const auto& y : b.sets()) {
      Set s;
      for (auto h : x)
        for (auto g : y) s.push_back(h * nb + g);
      sets.push_back(std::move(s));
    }
  return require_valid(SchurPartition::make(std::move(product), std::move(sets)), "tensor product");
}

SchurPartition wedge(GroupPtr gp, const std::vector<std::uint32_t>& h, const SchurPartition& a_h,
                     const std::vector<std::uint32_t>& u, const SchurPartition& a_q) {
  const auto& g = *gp;
  auto fail = [](const std::string& why) { throw Error(ErrorKind::IncompatibleInputs, why); };
  if (!is_subgroup(g, h)) fail("H is not a subgroup of G");
  if (!is_subgroup(g, u)) fail("U is not a subgroup of G");
  if (std::set<std::uint32_t>(h.begin(), h.end()).size() != h.size()) fail("H lists an element twice");
  if (h.size() >= g.order()) fail("H must be a proper subgroup of G");
  if (u.size() <= 1) fail("U must be a nontrivial subgroup");
  std::vector<std::int64_t> h_pos(g.order(), -1);
  for (std::size_t i = 0; i < h.size(); ++i) h_pos[h[i]] = static_cast<std::int64_t>(i);
  for (auto x : u)
    if (h_pos[x] < 0) fail("U is not contained in H");
  if (!is_normal(g, u)) fail("U is not normal in G");
  if (a_h.group().order() != h.size()) fail("A_H does not live on H");
  if (!is_valid_schur(a_h)) fail("A_H is not a Schur ring");
  if (!is_valid_schur(a_q)) fail("A_Q is not a Schur ring");

  Set u_in_h;
  for (auto x : u) u_in_h.push_back(static_cast<std::uint32_t>(h_pos[x]));
  if (!is_union_of_sets(a_h, u_in_h)) fail("U is not a union of A_H basic sets");

  const Quotient q = quotient(g, u);
  if (a_q.group().order() != q.cosets.size()) fail("A_Q does not live on G/U");
  std::vector<bool> in_hu(q.cosets.size(), false);
  for (auto x : h) in_hu[q.coset_of[x]] = true;
  for (const auto& s : a_q.sets()) {
    const bool inside = in_hu[s.front()];
    for (auto c : s)
      if (in_hu[c] != inside) fail("an A_Q basic set meets both H/U and its complement");
  }
  for (const auto& s : a_h.sets()) {
    Set image;
    for (auto i : s) image.push_back(q.coset_of[h[i]]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (a_q.sets()[a_q.set_of(image.front())] != image)
      fail("image of A_H basic set " + std::to_string(&s - a_h.sets().data()) + " in G/U is not an A_Q basic set");
  }

  std::vector<Set> sets;
  for (const auto& s : a_h.sets()) {
    Set mapped;
    for (auto i : s) mapped.push_back(h[i]);
    sets.push_back(std::move(mapped));
  }
  for (const auto& s : a_q.sets()) {
    if (in_hu[s.front()]) continue;
    Set pulled;
    for (auto c : s) pulled.insert(pulled.end(), q.cosets[c].begin(), q.cosets[c].end());
    sets.push_back(std::move(pulled));
  }
  auto result = SchurPartition::make(std::move(gp), std::move(sets));
  auto v = validate(result);
  if (!v.valid) fail("wedge partition is not a Schur ring: " + v.reason);
  return result;
}

// ---------------------------------------------------------------- enumeration

namespace {

class Enumerator {
 public:
  explicit Enumerator(GroupPtr group) : group_(std::move(group)), g_(*group_) {}

  std::vector<SchurPartition> run() {
    const std::size_t n = g_.order();
    owner_.assign(n, -1);
    place({g_.identity()});
    search();
    std::sort(found_.begin(), found_.end(),
              [](const SchurPartition& a, const SchurPartition& b) { return a.sets() < b.sets(); });
    return std::move(found_);
  }

 private:
  void place(const Set& s) {
    for (auto x : s) owner_[x] = static_cast<int>(sets_.size());
    sets_.push_back(s);
  }
  void unplace() {
    for (auto x : sets_.back()) owner_[x] = -1;
    sets_.pop_back();
  }

  // Products of placed sets must be constant on placed sets; returns the
  // coefficient signature of every element, or nullopt on a violation.
  std::optional<std::vector<std::vector<std::int64_t>>> signatures() const {
    const std::size_t n = g_.order(), r = sets_.size();
    std::vector<std::vector<std::int64_t>> sig(n);
    std::vector<std::int64_t> counts(n);
    for (std::size_t x = 1; x < r; ++x)
      for (std::size_t y = 1; y < r; ++y) {
        std::fill(counts.begin(), counts.end(), 0);
        for (auto a : sets_[x])
          for (auto b : sets_[y]) ++counts[g_.mul(a, b)];
        for (const auto& z : sets_)
          for (auto h : z)
            if (counts[h] != counts[z.front()]) return std::nullopt;
        for (std::size_t i = 0; i < n; ++i) sig[i].push_back(counts[i]);
      }
    return sig;
  }

  void search() {
    const auto sig = signatures();
    if (!sig) return;
    const std::size_t n = g_.order();
    std::size_t x = 0;
    while (x < n && owner_[x] != -1) ++x;
    if (x == n) {
      auto p = SchurPartition::make(group_, sets_);
      if (validate(p).valid) found_.push_back(std::move(p));
      return;
    }
    Set pool;
    for (std::size_t y = x + 1; y < n; ++y)
      if (owner_[y] == -1 && (*sig)[y] == (*sig)[x]) pool.push_back(static_cast<std::uint32_t>(y));

    const std::uint64_t subsets = std::uint64_t{1} << pool.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      Set s{static_cast<std::uint32_t>(x)};
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (mask >> i & 1) s.push_back(pool[i]);
      Set inv;
      for (auto a : s) inv.push_back(g_.inv(a));
      std::sort(inv.begin(), inv.end());
      if (inv == s) {
        place(s);
        search();
        unplace();
        continue;
      }
      bool ok = true;
      for (auto a : inv) {
        if (owner_[a] != -1 || std::binary_search(s.begin(), s.end(), a)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      place(s);
      place(inv);
      search();
      unplace();
      unplace();
    }
  }

  GroupPtr group_;
  const FiniteGroupTable& g_;
  std::vector<int> owner_;
  std::vector<Set> sets_;
  std::vector<SchurPartition> found_;
};

}  // namespace

std::vector<SchurPartition> enumerate_all(GroupPtr group) {
  if (group->order() > 16)
    throw Error(ErrorKind::GroupTooLarge, "enumeration is limited to groups of order at most 16");
  return Enumerator(std::move(group)).run();
}

std::vector<SchurPartition> enumerate_all_naive(GroupPtr group) {
  const std::size_t n = group->order();
  if (n > 10) throw Error(ErrorKind::GroupTooLarge, "naive enumeration is limited to order at most 10");
  std::vector<SchurPartition> out;
  // restricted growth strings
  std::vector<std::uint32_t> label(n, 0), prefix_max(n, 0);
  while (true) {
    std::vector<Set> sets(prefix_max[n - 1] + 1);
    for (std::uint32_t i = 0; i < n; ++i) sets[label[i]].push_back(i);
    auto p = SchurPartition::make(group, std::move(sets));
    if (validate(p).valid) out.push_back(std::move(p));

    // last position that can still grow
    std::size_t i = n - 1;
    while (i > 0 && label[i] > prefix_max[i - 1]) --i;
    if (i == 0) break;
    ++label[i];
    prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      label[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SchurPartition& a, const SchurPartition& b) { return a.sets() < b.sets(); });
  return out;
}

// ---------------------------------------------------------------- classification

std::string to_string(SchurClass c) {
  switch (c) {
    case SchurClass::Trivial: return "trivial";
    case SchurClass::Cyclotomic: return "cyclotomic";
    case SchurClass::Tensor: return "tensor";
    case SchurClass::Wedge: return "wedge";
    case SchurClass::Unclassified: return "unclassified";
  }
  return "unclassified";
}

Classification classify_cyclic(const SchurPartition& a) {
  const auto& g = a.group();
  const auto gen = g.cyclic_generator();
  if (!gen) throw Error(ErrorKind::NotCyclic, "group is not cyclic");
  const std::size_t n = g.order();

  if (a.rank() <= 2 || a.rank() == n)
    return {SchurClass::Trivial, a.rank() == n ? "group algebra" : "rank 2"};

  // element <-> exponent of the generator
  std::vector<std::uint32_t> elem_of(n), exp_of(n);
  for (std::uint32_t i = 0, x = g.identity(); i < n; ++i, x = g.mul(x, *gen)) {
    elem_of[i] = x;
    exp_of[x] = i;
  }
  auto group = a.group_ptr();

  for (const auto& units : unit_group_subgroups(n)) {
    std::vector<std::vector<std::uint32_t>> maps;
    for (auto u : units) {
      std::vector<std::uint32_t> f(n);
      for (std::uint32_t x = 0; x < n; ++x) f[x] = elem_of[(std::uint64_t{exp_of[x]} * u) % n];
      maps.push_back(std::move(f));
    }
    if (SchurPartition::make(group, orbit_partition(n, maps)) == a)
      return {SchurClass::Cyclotomic, "units " + set_string(units)};
  }

  // subgroup of order d is generated by g^(n/d)
  auto subgroup_of_order = [&](std::size_t d) {
    Set s;
    for (std::size_t i = 0; i < n; i += n / d) s.push_back(elem_of[i]);
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<std::size_t> a_orders;  // orders of A-subgroups
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0 && is_union_of_sets(a, subgroup_of_order(d))) a_orders.push_back(d);

  for (auto d : a_orders) {
    const std::size_t e = n / d;
    if (d == 1 || e == 1 || std::gcd(d, e) != 1) continue;
    if (std::find(a_orders.begin(), a_orders.end(), e) == a_orders.end()) continue;
    const Set hs = subgroup_of_order(d), ks = subgroup_of_order(e);
    std::vector<Set> in_h, in_k;
    for (const auto& s : a.sets()) {
      if (std::includes(hs.begin(), hs.end(), s.begin(), s.end())) in_h.push_back(s);
      if (std::includes(ks.begin(), ks.end(), s.begin(), s.end())) in_k.push_back(s);
    }
    std::vector<Set> products;
    for (const auto& x : in_h)
      for (const auto& y : in_k) {
        Set s;
        for (auto p : x)
          for (auto q : y) s.push_back(g.mul(p, q));
        products.push_back(std::move(s));
      }
    try {
      if (SchurPartition::make(group, products) == a)
        return {SchurClass::Tensor, "H order " + std::to_string(d) + ", K order " + std::to_string(e)};
    } catch (const Error&) {
    }
  }

  for (auto hd : a_orders) {
    if (hd == n) continue;
    const Set hs = subgroup_of_order(hd);
    for (auto ud : a_orders) {
      if (ud == 1 || hd % ud != 0) continue;
      const Set us = subgroup_of_order(ud);
      bool ok = true;
      for (const auto& s : a.sets()) {
        if (std::binary_search(hs.begin(), hs.end(), s.front())) continue;
        for (auto x : s) {
          for (auto y : us)
            if (!std::binary_search(s.begin(), s.end(), g.mul(x, y))) {
              ok = false;
              break;
            }
          if (!ok) break;
        }
        if (!ok) break;
      }
      if (ok) return {SchurClass::Wedge, "U order " + std::to_string(ud) + ", H order " + std::to_string(hd)};
    }
  }
  return {SchurClass::Unclassified, ""};
}

Algebra to_algebra(const SchurPartition& a, std::uint32_t p, unsigned k) {
  const auto v = validate(a);
  if (!v.valid) throw Error(ErrorKind::InvalidPartition, v.reason);
  const std::size_t r = a.rank();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) labels.push_back("X" + std::to_string(i));
  std::vector<std::int64_t> unit(r, 0);
  unit[0] = 1;
  return Algebra::from_integers(gf::Field::make(p, k), std::move(labels), v.constants, unit);
}

}  // namespace hsw
