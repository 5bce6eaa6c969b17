#include "hsw/coherent.hpp"

#include <algorithm>

#include "hsw/algebra.hpp"
#include "hsw/error.hpp"

namespace hsw {

CoherentConfig CoherentConfig::from_group(const PermGroup& group) {
  const std::size_t n = group.degree();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  CoherentConfig config;
  config.degree_ = n;
  config.pair_labels_.assign(n * n, kUnset);

  std::uint32_t next_id = 0;
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < n * n; ++start) {
    if (config.pair_labels_[start] != kUnset) continue;
    const std::uint32_t id = next_id++;
    config.pair_labels_[start] = id;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto a = static_cast<Point>(queue[head] / n), b = static_cast<Point>(queue[head] % n);
      for (const auto& s : group.generators()) {
        const std::size_t image = std::size_t{s(a)} * n + s(b);
        if (config.pair_labels_[image] == kUnset) {
          config.pair_labels_[image] = id;
          queue.push_back(image);
        }
      }
    }
  }
  config.finish(is_transitive(group));
  return config;
}

CoherentConfig CoherentConfig::from_partition(std::size_t degree, std::vector<std::uint32_t> pair_labels) {
  if (pair_labels.size() != degree * degree)
    throw Error(ErrorKind::DimensionMismatch, "pair labelling must have n^2 entries");
  std::uint32_t max_label = 0;
  for (auto l : pair_labels) max_label = std::max(max_label, l);
  std::vector<bool> used(std::size_t{max_label} + 1, false);
  for (auto l : pair_labels) used[l] = true;
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw Error(ErrorKind::BadParameter, "relation labels must be 0..m-1 without gaps");

  CoherentConfig config;
  config.degree_ = degree;
  config.pair_labels_ = std::move(pair_labels);
  std::size_t reflexive_relations = 0;
  std::vector<bool> seen(used.size(), false);
  for (std::size_t a = 0; a < degree; ++a) {
    const auto l = config.pair_labels_[a * degree + a];
    if (!seen[l]) ++reflexive_relations;
    seen[l] = true;
  }
  config.finish(reflexive_relations == 1);
  return config;
}

void CoherentConfig::finish(bool transitive) {
  transitive_ = transitive;
  const std::size_t n = degree_;
  std::uint32_t m = 0;
  for (auto l : pair_labels_) m = std::max(m, l + 1);

  orbitals_.assign(m, Orbital{});
  std::vector<bool> have_rep(m, false);
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    const auto l = pair_labels_[idx];
    auto& o = orbitals_[l];
    ++o.size;
    if (!have_rep[l]) {
      have_rep[l] = true;
      o.id = l;
      o.representative = {static_cast<Point>(idx / n), static_cast<Point>(idx % n)};
      o.reflexive = o.representative.first == o.representative.second;
    }
  }
  for (auto& o : orbitals_) {
    const Point a = o.representative.first;
    for (std::size_t b = 0; b < n; ++b)
      if (pair_labels_[a * n + b] == o.id) ++o.valency;
    o.paired = relation_of(o.representative.second, o.representative.first);
  }

  tensor_.assign(std::size_t{m} * m * m, 0);
  for (const auto& o : orbitals_) {
    const auto [a, b] = o.representative;
    for (std::size_t g = 0; g < n; ++g) {
      const auto r = pair_labels_[a * n + g], s = pair_labels_[g * n + b];
      ++tensor_[(o.id * m + r) * m + s];
    }
  }
}

std::vector<std::uint64_t> CoherentConfig::subdegrees() const {
  std::vector<std::uint64_t> counts(rank(), 0);
  for (std::size_t b = 0; b < degree_; ++b) ++counts[pair_labels_[b]];
  std::vector<std::uint64_t> out;
  for (auto c : counts)
    if (c > 0) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t CoherentConfig::source_identity(std::size_t r) const {
  const Point a = orbitals_[r].representative.first;
  return relation_of(a, a);
}

CoherentConfig orbitals(const PermGroup& group) { return CoherentConfig::from_group(group); }

std::vector<std::int64_t> intersection_numbers(const CoherentConfig& config) {
  const std::size_t n = config.degree(), m = config.rank();
  std::vector<std::int64_t> tensor(m * m * m, 0);
  std::vector<std::int64_t> check(m * m);
  for (const auto& o : config.orbitals()) {
    const auto [a, b] = o.representative;
    for (std::size_t g = 0; g < n; ++g)
      ++tensor[(o.id * m + config.relation_of(a, g)) * m + config.relation_of(g, b)];
    if (o.size < 2) continue;
    // second pair of t in scan order
    std::size_t second = a * n + b + 1;
    while (config.pair_labels()[second] != o.id) ++second;
    const auto a2 = static_cast<Point>(second / n), b2 = static_cast<Point>(second % n);
    std::fill(check.begin(), check.end(), 0);
    for (std::size_t g = 0; g < n; ++g) ++check[config.relation_of(a2, g) * m + config.relation_of(g, b2)];
    if (!std::equal(check.begin(), check.end(), tensor.begin() + o.id * m * m))
      throw Error(ErrorKind::AxiomViolation, "intersection numbers of relation " + std::to_string(o.id) +
                                                 " differ between pairs (" + std::to_string(a + 1) + "," +
                                                 std::to_string(b + 1) + ") and (" + std::to_string(a2 + 1) +
                                                 "," + std::to_string(b2 + 1) + ")");
  }
  return tensor;
}

AxiomReport verify_axioms(const CoherentConfig& config) {
  AxiomReport report;
  const std::size_t n = config.degree(), m = config.rank();
  const auto& labels = config.pair_labels();

  for (const auto& o : config.orbitals())
    if (o.size == 0) {
      report.partition = false;
      report.failures.push_back("relation " + std::to_string(o.id) + " is empty");
    }

  for (std::size_t idx = 0; idx < n * n; ++idx) {
    const auto& o = config.orbitals()[labels[idx]];
    const bool diagonal = idx / n == idx % n;
    if (diagonal != o.reflexive) {
      report.diagonal_union = false;
      report.failures.push_back("relation " + std::to_string(o.id) + " mixes diagonal and off-diagonal pairs");
      break;
    }
  }

  for (std::size_t a = 0; a < n && report.closed_under_star; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto r = labels[a * n + b];
      if (labels[b * n + a] != config.orbitals()[r].paired) {
        report.closed_under_star = false;
        report.failures.push_back("transpose of relation " + std::to_string(r) + " is not a relation");
        break;
      }
    }

  std::vector<std::int64_t> counts(m * m, 0);
  for (std::size_t a = 0; a < n && report.constant_intersections; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t g = 0; g < n; ++g) ++counts[labels[a * n + g] * m + labels[g * n + b]];
      const auto t = labels[a * n + b];
      if (!std::equal(counts.begin(), counts.end(), config.tensor().begin() + t * m * m)) {
        report.constant_intersections = false;
        report.failures.push_back("intersection numbers not constant on relation " + std::to_string(t) +
                                  " (pair " + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
        break;
      }
    }

  auto size = [&](std::size_t r) { return static_cast<std::int64_t>(config.orbitals()[r].size); };
  auto star = [&](std::size_t r) { return config.orbitals()[r].paired; };
  for (std::size_t r = 0; r < m && report.triple_identity; ++r)
    for (std::size_t s = 0; s < m && report.triple_identity; ++s)
      for (std::size_t t = 0; t < m; ++t) {
        const auto x = size(t) * config.c(star(t), r, s);
        const auto y = size(r) * config.c(star(r), s, t);
        const auto z = size(s) * config.c(star(s), t, r);
        if (x != y || y != z) {
          report.triple_identity = false;
          report.failures.push_back("triple identity fails for (" + std::to_string(r) + "," +
                                    std::to_string(s) + "," + std::to_string(t) + ")");
          break;
        }
      }
  return report;
}

Algebra to_algebra(const CoherentConfig& config, std::uint32_t p, unsigned k) {
  const std::size_t m = config.rank();
  std::vector<std::int64_t> constants(m * m * m), unit(m, 0);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = 0; t < m; ++t) constants[(r * m + s) * m + t] = config.c(t, r, s);
  std::vector<std::string> labels;
  for (const auto& o : config.orbitals()) {
    labels.push_back("R" + std::to_string(o.id));
    if (o.reflexive) unit[o.id] = 1;
  }
  return Algebra::from_integers(gf::Field::make(p, k), std::move(labels), constants, unit);
}

SymmetrizingForm symmetrizing_form(const CoherentConfig& config, std::uint32_t p, unsigned k) {
  const gf::Field f = gf::Field::make(p, k);
  const std::size_t m = config.rank();
  SymmetrizingForm form;
  form.gram = gf::Matrix(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) form.gram(a, b) = f.from_int(config.c(config.source_identity(a), a, b));
  form.nondegenerate = gf::determinant(f, form.gram) != 0;
  form.symmetric = form.gram == gf::transpose(form.gram);
  return form;
}

std::size_t centralizer_dimension_oracle(const PermGroup& group, std::uint32_t p, unsigned k,
                                         std::size_t max_degree) {
  const std::size_t n = group.degree();
  if (n > max_degree)
    throw Error(ErrorKind::DegreeTooLarge,
                "degree " + std::to_string(n) + " exceeds oracle limit " + std::to_string(max_degree));
  const gf::Field f = gf::Field::make(p, k);
  gf::SparseEchelon echelon(f, n * n);

  for (const auto& s : group.generators()) {
    // permutation matrix P with P(i, s(i)) = 1, stored by rows and by columns
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> by_row(n), by_col(n);
    for (std::size_t i = 0; i < n; ++i) {
      by_row[i].emplace_back(s(static_cast<Point>(i)), 1);
      by_col[s(static_cast<Point>(i))].emplace_back(i, 1);
    }
    // (P X - X P)(i, j) = sum_l P(i,l) X(l,j) - sum_l X(i,l) P(l,j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::pair<std::size_t, std::int64_t>> terms;
        for (auto [l, v] : by_row[i]) terms.emplace_back(l * n + j, v);
        for (auto [l, v] : by_col[j]) terms.emplace_back(i * n + l, -v);
        std::sort(terms.begin(), terms.end());
        gf::SparseEchelon::Row row;
        for (auto [col, v] : terms) {
          if (!row.empty() && row.back().first == col)
            row.back().second = f.add(row.back().second, f.from_int(v));
          else
            row.emplace_back(col, f.from_int(v));
        }
        echelon.add(std::move(row));
      }
  }
  return n * n - echelon.rank();
}

bool matrix_model_holds(const CoherentConfig& config) {
  const std::size_t n = config.degree(), m = config.rank();
  std::vector<std::vector<std::int64_t>> adjacency(m, std::vector<std::int64_t>(n * n, 0));
  for (std::size_t idx = 0; idx < n * n; ++idx) adjacency[config.pair_labels()[idx]][idx] = 1;

  std::vector<std::int64_t> product(n * n), expected(n * n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s) {
      std::fill(product.begin(), product.end(), 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
          if (adjacency[r][i * n + l] == 0) continue;
          for (std::size_t j = 0; j < n; ++j) product[i * n + j] += adjacency[s][l * n + j];
        }
      std::fill(expected.begin(), expected.end(), 0);
      for (std::size_t t = 0; t < m; ++t) {
        const auto c = config.c(t, r, s);
        if (c == 0) continue;
        for (std::size_t idx = 0; idx < n * n; ++idx) expected[idx] += c * adjacency[t][idx];
      }
      if (product != expected) return false;
    }
  return true;
}

}  // namespace hsw
