#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smith.hpp"

namespace curveclass::gmodule {

using smith::Matrix;

/// Free Z-module Z^m with an integral action of a finite group given by generators.
struct GModule {
  std::size_t rank = 0;
  std::vector<Matrix> generators;
  std::string label;
  std::vector<Matrix> elements;  // filled by make_module

  std::size_t group_order() const noexcept { return elements.size(); }
};

/// All products of the generators. NotInvertible unless det = +-1,
/// NotFinite once more than `cap` elements appear.
std::vector<Matrix> closure(std::size_t rank, const std::vector<Matrix>& generators, std::size_t cap = 10'000);

/// Checks shapes and computes the group.
GModule make_module(std::size_t rank, std::vector<Matrix> generators, std::string label = {});

/// Z^m / <(g-1)v>: torsion invariant factors (> 1) and free rank.
struct Coinvariants {
  std::vector<std::int64_t> invariant_factors;
  std::size_t free_rank = 0;
};

Coinvariants coinvariants(const GModule& module);

/// Rank of the fixed submodule, i.e. m - rank of the stacked (g - 1).
std::size_t invariants_rank(const GModule& module);

struct Lemma51 {
  bool lhs = false;  // coinvariants infinite after completing at p
  bool rhs = false;  // coinvariants mod p nonzero
  bool equal = false;
  bool p_divides_order = false;
};

Lemma51 lemma51_check(const GModule& module, std::uint32_t p);

/// (dim ker, dim coker) of 1 - phi over F_p, from separate reductions.
struct KerCoker {
  std::size_t dim_ker = 0;
  std::size_t dim_coker = 0;
};

KerCoker invcoinv_dims(const Matrix& phi, std::uint32_t p);

/// Seeded random module: a subgroup of S_n (n <= 5) acting through a direct
/// sum of natural, sign-twisted natural, trivial and sign blocks, rank <= 8.
/// The same (seed, index) always gives the same module.
GModule random_module(std::uint64_t seed, std::uint64_t index);

}  // namespace curveclass::gmodule
