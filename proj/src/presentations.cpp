#include "hsw/presentations.hpp"

#include <map>
#include <optional>
#include <set>

#include "hsw/error.hpp"

namespace hsw {

namespace {

std::string alternating(char first, unsigned length) {
  std::string w;
  for (unsigned i = 0; i < length; ++i) w += (i % 2 == 0) == (first == 'x') ? 'x' : 'y';
  return w;
}

// One rewriting step at position i, if a rule applies there.
std::optional<SignedWord> step_at(const std::string& w, std::size_t i, const std::string& braid_lhs,
                                  const std::string& braid_rhs) {
  if (i + 1 < w.size() && w[i] == w[i + 1]) return SignedWord{-1, w.substr(0, i) + w.substr(i + 1)};
  if (i + braid_lhs.size() <= w.size() && w.compare(i, braid_lhs.size(), braid_lhs) == 0)
    return SignedWord{1, w.substr(0, i) + braid_rhs + w.substr(i + braid_lhs.size())};
  return std::nullopt;
}

}  // namespace

unsigned braid_length(CoxeterType t) {
  switch (t) {
    case CoxeterType::D2: return 2;
    case CoxeterType::A2: return 3;
    case CoxeterType::B2: return 4;
    case CoxeterType::G2: return 6;
  }
  return 0;
}

std::string to_string(CoxeterType t) {
  switch (t) {
    case CoxeterType::D2: return "D2";
    case CoxeterType::A2: return "A2";
    case CoxeterType::B2: return "B2";
    case CoxeterType::G2: return "G2";
  }
  return "?";
}

CoxeterType parse_coxeter_type(std::string_view name) {
  for (auto t : {CoxeterType::D2, CoxeterType::A2, CoxeterType::B2, CoxeterType::G2})
    if (to_string(t) == name) return t;
  throw Error(ErrorKind::BadParameter, "unknown Coxeter type '" + std::string(name) + "' (D2, A2, B2, G2)");
}

SignedWord normal_form(CoxeterType t, std::string_view word) {
  for (char c : word)
    if (c != 'x' && c != 'y') throw Error(ErrorKind::BadParameter, "words use only the letters x and y");
  const unsigned m = braid_length(t);
  const std::string lhs = alternating('y', m), rhs = alternating('x', m);
  SignedWord w{1, std::string(word)};
  // leftmost redex first; each step shortens the word or makes it
  // lexicographically smaller, so this terminates
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < w.word.size(); ++i)
      if (auto next = step_at(w.word, i, lhs, rhs)) {
        w = {w.sign * next->sign, std::move(next->word)};
        changed = true;
        break;
      }
  }
  return w;
}

bool verify_confluence(CoxeterType t) {
  const unsigned m = braid_length(t);
  const std::string lhs = alternating('y', m), rhs = alternating('x', m);
  std::map<std::string, std::set<std::pair<int, std::string>>> memo;

  // every signed normal form reachable from w by any sequence of steps
  auto reachable = [&](auto&& self, const std::string& w) -> const std::set<std::pair<int, std::string>>& {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    std::set<std::pair<int, std::string>> out;
    bool reducible = false;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (auto next = step_at(w, i, lhs, rhs)) {
        reducible = true;
        for (const auto& [sign, nf] : self(self, next->word)) out.emplace(sign * next->sign, nf);
      }
    if (!reducible) out.emplace(1, w);
    return memo.emplace(w, std::move(out)).first->second;
  };

  for (unsigned len = 0; len <= 2 * m; ++len)
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      std::string w;
      for (unsigned i = 0; i < len; ++i) w += (bits >> i & 1) ? 'y' : 'x';
      if (reachable(reachable, w).size() != 1) return false;
    }
  return true;
}

WordAlgebra WordAlgebra::build(CoxeterType t, std::uint32_t p, unsigned k) {
  const unsigned m = hsw::braid_length(t);
  std::vector<std::string> basis{""};
  for (unsigned len = 1; len < m; ++len) {
    basis.push_back(alternating('x', len));
    basis.push_back(alternating('y', len));
  }
  basis.push_back(alternating('x', m));
  const std::size_t d = basis.size();

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < d; ++i) index[basis[i]] = i;

  std::vector<std::int64_t> constants(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto nf = normal_form(t, basis[i] + basis[j]);
      auto it = index.find(nf.word);
      if (it == index.end())
        throw Error(ErrorKind::AxiomViolation, "normal form '" + nf.word + "' is not a basis word");
      constants[(i * d + j) * d + it->second] = nf.sign;
    }
  std::vector<std::int64_t> unit(d, 0);
  unit[0] = 1;

  std::vector<std::string> labels;
  for (const auto& w : basis) labels.push_back(w.empty() ? "1" : w);
  auto algebra = Algebra::from_integers(gf::Field::make(p, k), std::move(labels), constants, unit);
  return WordAlgebra(t, m, std::move(algebra), verify_confluence(t));
}

std::size_t WordAlgebra::index_of(std::string_view word) const {
  const std::string_view key = word.empty() ? std::string_view("1") : word;
  for (std::size_t i = 0; i < basis().size(); ++i)
    if (basis()[i] == key) return i;
  throw Error(ErrorKind::BadParameter, "'" + std::string(word) + "' is not a basis word");
}

FormT form_t(const WordAlgebra& w) {
  const Algebra& a = w.algebra();
  const gf::Field& f = a.field();
  const std::size_t d = a.dim(), top = d - 1;  // the longest word is last

  FormT out;
  out.gram = gf::Matrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out.gram(i, j) = a.c(i, j, top);
  out.nondegenerate = gf::determinant(f, out.gram) != 0;
  out.symmetric = out.gram == gf::transpose(out.gram);

  out.associative = true;
  for (std::size_t i = 0; i < d && out.associative; ++i)
    for (std::size_t j = 0; j < d && out.associative; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        gf::Elem left = 0, right = 0;  // t(b_i b_j, b_l) and t(b_i, b_j b_l)
        for (std::size_t s = 0; s < d; ++s) {
          left = f.add(left, f.mul(a.c(i, j, s), out.gram(s, l)));
          right = f.add(right, f.mul(a.c(j, l, s), out.gram(i, s)));
        }
        if (left != right) {
          out.associative = false;
          break;
        }
      }
  return out;
}

}  // namespace hsw
