#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gassmann/group.hpp"
#include "gassmann/intertwiner.hpp"
#include "gassmann/matrix.hpp"

namespace gassmann {

// Multigraph with integer edge counts. adj[i][j] = number of generator-labeled
// edges i -> j; symmetric when the generating set is closed under inverse.
// Every row sums to generator_count (loops counted once per fixing generator).
struct LabeledGraph {
  std::uint32_t n = 0;
  Mat<std::int64_t> adj;
  std::uint32_t generator_count = 0;
};

// Sort, deduplicate, adjoin inverses; throws IdentityInGeneratingSet.
std::vector<std::uint32_t> symmetrize_generating_set(const GroupTable& g,
                                                     std::vector<std::uint32_t> s);

// Vertices = elements of G, adj[x][y] = |{s in S : x s = y}|. Left
// multiplication acts freely by automorphisms. Throws
// IdentityInGeneratingSet / NotSymmetric on a bad S.
LabeledGraph cayley_graph(const GroupTable& g, const std::vector<std::uint32_t>& s);

// Quotient of the Cayley graph by the free left H-action: vertices are right
// cosets Hx (minimal-member order), adj[Hx][Hy] = |{s in S : Hxs = Hy}|.
LabeledGraph schreier_quotient(const GroupTable& g, const SubgroupRef& h,
                               const std::vector<std::uint32_t>& s);

// The same quotient written on the left cosets of a CosetSpace (vertex x is
// the coset x of X): adj[y][x] = |{s in S : s.x = y}|. Used where the vertex
// order must match an intertwiner's row/column indexing.
LabeledGraph coset_action_graph(const GroupTable& g, const CosetSpace& x,
                                const std::vector<std::uint32_t>& s);

// Exact characteristic polynomial of L = |S| I - adj, ascending coefficients,
// monic of degree n; computed by evaluation at integer points and exact
// interpolation with Bareiss determinants.
std::vector<BigInt> laplacian_charpoly(const LabeledGraph& g);

struct SpectralReport {
  std::vector<BigInt> charpoly1, charpoly2;
  bool equal = false;
  std::vector<double> spectrum1, spectrum2;  // display only, never the verdict
};

// Coefficientwise comparison of the exact Laplacian characteristic
// polynomials. Throws RegularityMismatch when generator counts differ.
SpectralReport isospectral_verdict(const LabeledGraph& g1, const LabeledGraph& g2);

// Exact coefficients of det(I - adj u + (D - I) u^2), D = diag(row sums).
std::vector<BigInt> ihara_zeta_poly(const LabeledGraph& g);

struct ZetaReport {
  std::vector<BigInt> poly1, poly2;
  bool equal = false;
};

ZetaReport zeta_verdict(const LabeledGraph& g1, const LabeledGraph& g2);

// Exact integer identity S L1 = L2 S on the left-coset quotient Laplacians,
// in the bases fixed by the intertwiner's coset spaces.
bool verify_transplantation_on_graphs(const GroupTable& g, const IntertwinerBasis& basis,
                                      const Intertwiner& s, const std::vector<std::uint32_t>& gens);

// Exhaustive isomorphism scan (first witness in lexicographic order).
// Throws TooLarge above the cap.
std::optional<std::vector<std::uint32_t>> graphs_isomorphic(const LabeledGraph& g1,
                                                            const LabeledGraph& g2,
                                                            std::uint32_t cap = 12);

std::uint32_t component_count(const LabeledGraph& g);
bool is_connected(const LabeledGraph& g);

// DOT text with multiplicity labels; vertices and edges in index order.
std::string to_dot(const LabeledGraph& g, const std::string& name = "quotient");

// Random symmetric identity-free generating set with at least min_size
// elements (inverses adjoined), drawn with the given engine.
std::vector<std::uint32_t> random_symmetric_set(const GroupTable& g, std::mt19937_64& rng,
                                                std::uint32_t min_size);

}  // namespace gassmann
