#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hsw/coherent.hpp"
#include "hsw/perm.hpp"

namespace hsw::catalog {

/// <(1 2 ... n), reflection fixing 1>, order 2n. n >= 3.
PermGroup dihedral(std::size_t n);
/// Regular C_n, n >= 2.
PermGroup cyclic(std::size_t n);
/// <(1 ... n), (1 2)>, n >= 2.
PermGroup symmetric_natural(std::size_t n);
/// <(1 2 3), (1 ... n)> for odd n, <(1 2 3), (2 ... n)> for even n. n >= 3.
PermGroup alternating_natural(std::size_t n);
/// S_n on 2-subsets in lexicographic order, n >= 4.
PermGroup sym_on_pairs(std::size_t n);
/// x -> x + 1 and x -> g x on GF(q), point i + 1 is the field element with
/// encoding i. q a prime power <= 49.
PermGroup agl1(std::uint32_t q);
/// PSL(2,q) on the projective line: GF(q) as above, infinity = q + 1.
/// Generators x -> x + 1, x -> -1/x, and x -> g^2 x when q is not prime.
PermGroup psl2_line(std::uint32_t q);
/// GL(3,q) on complete flags, q in {2,3}; see flags() for the point order.
PermGroup gl3_flags(std::uint32_t q);

/// A complete flag: the normalised spanning vector of V1 and the reduced
/// echelon basis of V2, coordinates in 0..q-1.
struct Flag {
  std::vector<std::uint32_t> line;
  std::vector<std::uint32_t> plane;  // 2 x 3, row-major

  auto operator<=>(const Flag&) const = default;
};

/// Point i + 1 of gl3_flags(q) is flags(q)[i].
std::vector<Flag> flags(std::uint32_t q);

struct CatalogEntry {
  std::string spec;   // e.g. "dihedral:4"
  std::string family;
  std::uint32_t parameter = 0;
  PermGroup group;
  std::optional<std::uint64_t> expected_order;
};

/// Parses "family:n" (dihedral, cyclic, sym, alt, sympairs, agl1, psl2,
/// gl3flags). Throws ParseError on bad syntax or unknown family and
/// BadParameter on an unsupported parameter.
CatalogEntry builtin(std::string_view spec);

/// Builtins of degree <= max_degree used by the property sweeps.
std::vector<std::string> sweep_specs(std::size_t max_degree = 30);

/// For the flag configuration at q = 2 (rank 6): the orbital matching each
/// basis word 1, x, y, xy, yx, xyx of the A2 word algebra. x and y are the
/// two orbitals of valency q (smaller id first); longer words are the
/// orbital occurring in the product of their letters. Throws AxiomViolation
/// if a product is not a single orbital.
std::vector<std::size_t> bruhat_word_orbitals(const CoherentConfig& config);

}  // namespace hsw::catalog
