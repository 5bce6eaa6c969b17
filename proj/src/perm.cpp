#include "hsw/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "hsw/error.hpp"

namespace hsw {

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size())
      throw Error(ErrorKind::PointOutOfRange,
                  "image " + std::to_string(x + 1) + " outside 1.." + std::to_string(images.size()));
    if (seen[x])
      throw Error(ErrorKind::RepeatedPoint, "image " + std::to_string(x + 1) + " repeated");
    seen[x] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_images_1based(std::span<const std::int64_t> images) {
  std::vector<Point> zero_based;
  zero_based.reserve(images.size());
  for (std::int64_t x : images) {
    if (x < 1 || static_cast<std::uint64_t>(x) > images.size())
      throw Error(ErrorKind::PointOutOfRange,
                  "image " + std::to_string(x) + " outside 1.." + std::to_string(images.size()));
    zero_based.push_back(static_cast<Point>(x - 1));
  }
  return from_images(std::move(zero_based));
}

std::vector<std::int64_t> Permutation::images_1based() const {
  std::vector<std::int64_t> out(images_.begin(), images_.end());
  for (auto& x : out) ++x;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::size_t> Permutation::cycle_lengths() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

bool Permutation::is_full_cycle() const {
  if (images_.empty()) return false;
  std::size_t len = 0;
  Point j = 0;
  do {
    j = images_[j];
    ++len;
  } while (j != 0);
  return len == images_.size();
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw Error(ErrorKind::DegreeMismatch, "cannot compose permutations of degree " +
                                               std::to_string(p.degree()) + " and " +
                                               std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q(p(static_cast<Point>(i)));
  return Permutation::from_images(std::move(images));
}

Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto malformed = [&](const std::string& what) {
    return Error(ErrorKind::MalformedCycle,
                 what + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
  };

  skip_space();
  if (pos == text.size()) throw malformed("empty cycle string");
  while (pos < text.size()) {
    if (text[pos] != '(') throw malformed("expected '('");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        if (cycle.empty()) throw malformed("leading ','");
        ++pos;
        skip_space();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
          throw malformed("expected point after ','");
      }
      if (pos >= text.size()) throw malformed("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw malformed("unexpected character");
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > (1ULL << 32)) throw Error(ErrorKind::PointOutOfRange, "point too large");
        ++pos;
      }
      if (value < 1 || value > degree)
        throw Error(ErrorKind::PointOutOfRange,
                    "point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      const auto point = static_cast<Point>(value - 1);
      if (used[point])
        throw Error(ErrorKind::RepeatedPoint, "point " + std::to_string(value) + " repeated");
      used[point] = true;
      cycle.push_back(point);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return Permutation::from_images(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

struct PermGroup::Cache {
  std::mutex mutex;
  std::optional<std::vector<Permutation>> elements;
  std::uint64_t failed_cap = 0;
  std::uint64_t failed_lower_bound = 0;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (generators_.empty()) generators_.push_back(Permutation::identity(degree));
  for (const auto& g : generators_)
    if (g.degree() != degree)
      throw Error(ErrorKind::DegreeMismatch, "generator of degree " + std::to_string(g.degree()) +
                                                 " in a group of degree " + std::to_string(degree));
}

namespace {

std::vector<Permutation> closure(std::size_t degree, const std::vector<Permutation>& gens,
                                 std::uint64_t cap) {
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_set<Permutation, PermutationHash> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : gens) {
      Permutation next = elements[head] * s;
      if (seen.insert(next).second) {
        if (elements.size() >= cap) throw CapExceeded(elements.size() + 1, cap);
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

}  // namespace

const std::vector<Permutation>& PermGroup::elements(std::uint64_t cap) const {
  std::lock_guard lock(cache_->mutex);
  if (cache_->elements) {
    if (cache_->elements->size() > cap) throw CapExceeded(cache_->elements->size(), cap);
    return *cache_->elements;
  }
  if (cap <= cache_->failed_cap) throw CapExceeded(cache_->failed_lower_bound, cap);
  try {
    cache_->elements = closure(degree_, generators_, cap);
  } catch (const CapExceeded& e) {
    cache_->failed_cap = cap;
    cache_->failed_lower_bound = e.lower_bound();
    throw;
  }
  return *cache_->elements;
}

std::optional<std::uint64_t> PermGroup::order(std::uint64_t cap) const {
  try {
    return elements(cap).size();
  } catch (const CapExceeded&) {
    return std::nullopt;
  }
}

bool PermGroup::contains(const Permutation& g, std::uint64_t cap) const {
  const auto& all = elements(cap);
  return std::find(all.begin(), all.end(), g) != all.end();
}

std::vector<Permutation> enumerate_elements(const PermGroup& group, std::uint64_t cap) {
  return group.elements(cap);
}

std::vector<std::vector<Point>> orbits(const PermGroup& group) {
  const std::size_t n = group.degree();
  std::vector<int> cell(n, -1);
  std::vector<std::vector<Point>> result;
  for (Point start = 0; start < n; ++start) {
    if (cell[start] >= 0) continue;
    const int id = static_cast<int>(result.size());
    std::vector<Point> orbit{start};
    cell[start] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& s : group.generators()) {
        Point y = s(orbit[head]);
        if (cell[y] < 0) {
          cell[y] = id;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

bool is_transitive(const PermGroup& group) { return orbits(group).size() == 1; }

std::vector<Point> minimal_block(const PermGroup& group, Point a, Point b) {
  const std::size_t n = group.degree();
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::deque<std::pair<Point, Point>> pending;
  auto unite = [&](Point x, Point y) {
    Point rx = find(x), ry = find(y);
    if (rx == ry) return;
    parent[std::max(rx, ry)] = std::min(rx, ry);
    pending.emplace_back(x, y);
  };
  unite(a, b);
  while (!pending.empty()) {
    auto [x, y] = pending.front();
    pending.pop_front();
    for (const auto& s : group.generators()) unite(s(x), s(y));
  }
  std::vector<Point> block;
  const Point root = find(a);
  for (Point x = 0; x < n; ++x)
    if (find(x) == root) block.push_back(x);
  return block;
}

bool is_primitive(const PermGroup& group) {
  if (!is_transitive(group)) throw Error(ErrorKind::NotTransitive, "primitivity needs a transitive group");
  const std::size_t n = group.degree();
  for (Point b = 1; b < n; ++b)
    if (minimal_block(group, 0, b).size() < n) return false;
  return true;
}

bool is_abelian(std::span<const Permutation> generators) {
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (generators[i] * generators[j] != generators[j] * generators[i]) return false;
  return true;
}

RegularityCheck is_regular_subgroup(const PermGroup& group,
                                    std::span<const Permutation> sub_generators,
                                    std::uint64_t cap) {
  RegularityCheck check;
  std::vector<Permutation> gens(sub_generators.begin(), sub_generators.end());
  for (const auto& g : gens)
    if (g.degree() != group.degree())
      throw Error(ErrorKind::DegreeMismatch, "subgroup generator has the wrong degree");

  try {
    const auto& ambient = group.elements(cap);
    std::unordered_set<Permutation, PermutationHash> members(ambient.begin(), ambient.end());
    for (const auto& g : gens)
      if (!members.contains(g))
        throw Error(ErrorKind::NotMember, g.to_cycle_string() + " is not an element of the group");
    check.membership_verified = true;
  } catch (const CapExceeded&) {
    check.membership_verified = false;
  }

  PermGroup sub(group.degree(), gens);
  check.subgroup_order = sub.elements(cap).size();
  check.regular = check.subgroup_order == group.degree() && is_transitive(sub);
  return check;
}

std::optional<Permutation> find_cyclic_regular(const PermGroup& group, std::uint64_t cap) {
  for (const auto& g : group.elements(cap))
    if (g.is_full_cycle()) return g;
  return std::nullopt;
}

std::vector<Permutation> cyclic_powers(const Permutation& c) {
  std::vector<Permutation> powers{Permutation::identity(c.degree())};
  for (Permutation x = c; !x.is_identity(); x = x * c) powers.push_back(x);
  return powers;
}

}  // namespace hsw
