#pragma once

#include <cstdint>
#include <vector>

#include "gassmann/group.hpp"
#include "gassmann/matrix.hpp"

namespace gassmann {

// Basis of Hom_G(Q[G/H1], Q[G/H2]): one 0/1 indicator matrix per G-orbit on
// (G/H2) x (G/H1). Orbits are in bijection with the double cosets H2\G/H1
// via (y, x) -> H2 rep2[y]^-1 rep1[x] H1.
struct IntertwinerBasis {
  std::vector<Mat<std::int64_t>> matrices;       // each [G:H2] x [G:H1]
  std::vector<std::uint32_t> orbit_to_double_coset;
  CosetSpace x1, x2;
  DoubleCosetPartition dcs;  // H2\G/H1

  std::uint32_t count() const { return static_cast<std::uint32_t>(matrices.size()); }
};

IntertwinerBasis intertwiner_basis(const GroupTable& g, const CosetSpace& x1,
                                   const CosetSpace& x2);

// An integer intertwiner S = sum_d phi[d] M_d with its exact determinant.
struct Intertwiner {
  std::vector<BigInt> phi;  // indexed by double-coset id
  Mat<BigInt> matrix;       // [G:H2] x [G:H1]
  BigInt det;               // 0 when the matrix is not square or singular
};

Intertwiner make_intertwiner(const IntertwinerBasis& basis, std::vector<BigInt> phi);

// Exact equivariance check: matrix[g.y][g.x] == matrix[y][x] for all
// generators g of the group.
bool is_equivariant(const GroupTable& g, const IntertwinerBasis& basis, const Mat<BigInt>& m);

struct ScanOptions {
  // Lexicographic scan of phi vectors with max-norm c = 1, 2, ...; a level is
  // only entered if it fits in the remaining budget.
  std::uint64_t scan_budget = 200'000;
  std::uint32_t max_norm_cap = 64;
  // Seeded pseudo-random fallback after the scan.
  std::uint64_t random_budget = 20'000;
  std::uint64_t seed = 1;
  int random_entry_bound = 8;
};

// Smallest-max-norm integer phi with det != 0, found by the deterministic
// scan (then the seeded random fallback). Throws NoInvertibleFound; the
// exception's `proven` flag is set when the completed scan grid is wide
// enough (side > matrix dimension) to certify that no invertible intertwiner
// exists over Q at all.
Intertwiner find_invertible_intertwiner(const IntertwinerBasis& basis,
                                        const ScanOptions& options = {});

}  // namespace gassmann
