#include "gassmann/intertwiner.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <random>
#include <string>

#include "gassmann/errors.hpp"

namespace gassmann {

IntertwinerBasis intertwiner_basis(const GroupTable& g, const CosetSpace& x1,
                                   const CosetSpace& x2) {
  const std::uint32_t n1 = x1.count(), n2 = x2.count();
  IntertwinerBasis basis;
  basis.x1 = x1;
  basis.x2 = x2;
  basis.dcs = double_cosets(g, x2.subgroup, x1.subgroup);

  constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> orbit_of(static_cast<std::size_t>(n1) * n2, kUnassigned);
  // scan pairs (y, x) row-major; each unassigned pair seeds the next orbit
  for (std::uint32_t y = 0; y < n2; ++y)
    for (std::uint32_t x = 0; x < n1; ++x) {
      std::size_t p = static_cast<std::size_t>(y) * n1 + x;
      if (orbit_of[p] != kUnassigned) continue;
      std::uint32_t id = basis.count();
      Mat<std::int64_t> indicator(n2, n1);
      for (std::uint32_t e = 0; e < g.size(); ++e) {
        std::uint32_t gy = x2.apply(e, y), gx = x1.apply(e, x);
        orbit_of[static_cast<std::size_t>(gy) * n1 + gx] = id;
        indicator(gy, gx) = 1;
      }
      basis.matrices.push_back(std::move(indicator));
      std::uint32_t u = g.product(g.inverse_of(x2.reps[y]), x1.reps[x]);
      basis.orbit_to_double_coset.push_back(basis.dcs.class_of[u]);
    }
  return basis;
}

Intertwiner make_intertwiner(const IntertwinerBasis& basis, std::vector<BigInt> phi) {
  if (phi.size() != basis.dcs.count())
    throw BasisMismatch("make_intertwiner: phi length " + std::to_string(phi.size()) +
                        " != double coset count " + std::to_string(basis.dcs.count()));
  Intertwiner s;
  s.phi = std::move(phi);
  s.matrix = Mat<BigInt>(basis.x2.count(), basis.x1.count());
  for (std::uint32_t d = 0; d < basis.count(); ++d) {
    const BigInt& value = s.phi[basis.orbit_to_double_coset[d]];
    if (value == 0) continue;
    const auto& m = basis.matrices[d];
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j)) s.matrix(i, j) += value;
  }
  s.det = s.matrix.rows() == s.matrix.cols() ? det_bareiss(s.matrix) : BigInt(0);
  return s;
}

bool is_equivariant(const GroupTable& g, const IntertwinerBasis& basis, const Mat<BigInt>& m) {
  for (auto e : g.generator_indices)
    for (std::uint32_t y = 0; y < basis.x2.count(); ++y)
      for (std::uint32_t x = 0; x < basis.x1.count(); ++x)
        if (m(basis.x2.apply(e, y), basis.x1.apply(e, x)) != m(y, x)) return false;
  return true;
}

namespace {

// Advance v through [-c, c]^k in lexicographic order with components ordered
// c > c-1 > ... > -c (positive weights are tried first); false past the end.
bool next_vector(std::vector<int>& v, int c) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] > -c) {
      --v[i];
      for (std::size_t j = i + 1; j < v.size(); ++j) v[j] = c;
      return true;
    }
  }
  return false;
}

int max_norm(const std::vector<int>& v) {
  int m = 0;
  for (int x : v) m = std::max(m, std::abs(x));
  return m;
}

std::uint64_t power_count(int side, std::size_t k) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (p > (1ull << 62) / static_cast<std::uint64_t>(side)) return 1ull << 62;
    p *= static_cast<std::uint64_t>(side);
  }
  return p;
}

}  // namespace

Intertwiner find_invertible_intertwiner(const IntertwinerBasis& basis,
                                        const ScanOptions& options) {
  const std::size_t k = basis.dcs.count();
  if (k == 0) throw NoInvertibleFound("empty intertwiner basis", true);
  const std::size_t nrows = basis.x2.count();

  auto try_phi = [&](const std::vector<int>& v) -> std::optional<Intertwiner> {
    std::vector<BigInt> phi(k);
    for (std::size_t i = 0; i < k; ++i) phi[i] = v[i];
    Intertwiner s = make_intertwiner(basis, std::move(phi));
    if (s.det != 0) return s;
    return std::nullopt;
  };

  // A determinant that vanishes on a full grid of side > per-variable degree
  // (each variable has degree <= nrows in det) vanishes identically, so
  // once such a grid is fully scanned the failure is a proof, not an
  // exhausted budget, and scanning can stop.
  const bool square = basis.x1.count() == basis.x2.count();
  auto grid_proves = [&](std::uint32_t c) { return square && 2ull * c + 1 > nrows; };

  std::uint64_t used = 0;
  std::uint32_t completed_norm = 0;
  for (std::uint32_t c = 1; c <= options.max_norm_cap; ++c) {
    std::uint64_t level_size = power_count(2 * static_cast<int>(c) + 1, k);
    if (used + level_size > options.scan_budget) break;
    std::vector<int> v(k, static_cast<int>(c));
    do {
      ++used;
      if (max_norm(v) != static_cast<int>(c)) continue;  // inner cube already scanned
      if (auto s = try_phi(v)) return *s;
    } while (next_vector(v, static_cast<int>(c)));
    completed_norm = c;
    if (grid_proves(c)) break;
  }

  if (grid_proves(completed_norm))
    throw NoInvertibleFound(
        "no invertible intertwiner exists: determinant vanishes identically "
        "(grid of side " + std::to_string(2 * completed_norm + 1) +
        " exceeds degree " + std::to_string(nrows) + ")",
        true);

  std::mt19937_64 rng(options.seed);
  const int bound = options.random_entry_bound;
  std::vector<int> v(k);
  for (std::uint64_t t = 0; t < options.random_budget; ++t) {
    for (std::size_t i = 0; i < k; ++i)
      v[i] = static_cast<int>(rng() % (2ull * bound + 1)) - bound;
    if (max_norm(v) == 0) continue;
    if (auto s = try_phi(v)) return *s;
  }
  throw NoInvertibleFound("no invertible intertwiner found within scan norm " +
                              std::to_string(completed_norm) + " and " +
                              std::to_string(options.random_budget) + " random draws",
                          false);
}

}  // namespace gassmann
