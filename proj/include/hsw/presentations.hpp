#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hsw/algebra.hpp"
#include "hsw/gfield.hpp"

namespace hsw {

/// Rank-2 Coxeter types; the braid relation identifies the two alternating
/// words of length m.
enum class CoxeterType { D2, A2, B2, G2 };

unsigned braid_length(CoxeterType t);  // 2, 3, 4, 6
std::string to_string(CoxeterType t);
/// Throws BadParameter.
CoxeterType parse_coxeter_type(std::string_view name);

/// A word with a sign: the reduced form of a monomial in x, y.
struct SignedWord {
  int sign = 1;
  std::string word;

  bool operator==(const SignedWord&) const = default;
};

/// Reduces a word over {x, y} with xx -> -x, yy -> -y and the y-leading
/// alternating word of length m -> the x-leading one. Throws BadParameter on
/// other letters.
SignedWord normal_form(CoxeterType t, std::string_view word);

/// Checks that every word of length <= 2m has a single normal form whatever
/// order the rules are applied in.
bool verify_confluence(CoxeterType t);

/// The 0-Hecke word algebra K<x,y>/(braid, x^2 + x, y^2 + y) over GF(p^k).
/// Basis: "1", "x", "y", "xy", "yx", ... (alternating words by length,
/// x-leading first), ending with the single x-leading word of length m.
class WordAlgebra {
 public:
  static WordAlgebra build(CoxeterType t, std::uint32_t p, unsigned k = 1);

  CoxeterType type() const noexcept { return type_; }
  unsigned braid_length() const noexcept { return m_; }
  const std::vector<std::string>& basis() const noexcept { return algebra_.labels(); }
  const Algebra& algebra() const noexcept { return algebra_; }
  bool confluent() const noexcept { return confluent_; }

  std::size_t index_of(std::string_view word) const;

 private:
  WordAlgebra(CoxeterType t, unsigned m, Algebra a, bool confluent)
      : type_(t), m_(m), algebra_(std::move(a)), confluent_(confluent) {}

  CoxeterType type_;
  unsigned m_;
  Algebra algebra_;
  bool confluent_;
};

/// t(u, v) = coefficient of the longest word in uv.
struct FormT {
  gf::Matrix gram;
  bool nondegenerate = false;
  bool symmetric = false;
  bool associative = false;
};

FormT form_t(const WordAlgebra& a);

}  // namespace hsw
