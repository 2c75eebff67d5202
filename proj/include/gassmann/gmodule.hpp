#pragma once

#include <cstdint>
#include <vector>

#include "gassmann/group.hpp"
#include "gassmann/intertwiner.hpp"
#include "gassmann/matrix.hpp"

namespace gassmann {

// A finite-dimensional G-module over Q: rho(identity) = I and
// rho(gh) = rho(g) rho(h) exactly. Permutation-type modules keep a sparse
// index action; matrix modules store the full dense table.
class GModule {
 public:
  static GModule regular(const GroupTable& g);
  static GModule on_cosets(const GroupTable& g, const CosetSpace& x);
  static GModule trivial(const GroupTable& g);
  // Dense module from images of the group generators (in the order of
  // generator_indices); the full table is built by walking the closure.
  static GModule from_generator_images(const GroupTable& g,
                                       const std::vector<Mat<BigRat>>& images);

  std::uint32_t dim() const { return dim_; }
  const GroupTable& group() const { return *group_; }

  // out = rho(g) . in  (out must not alias in)
  void apply(std::uint32_t g, const BigRat* in, BigRat* out) const;
  std::vector<BigRat> apply(std::uint32_t g, const std::vector<BigRat>& in) const;
  Mat<BigRat> matrix(std::uint32_t g) const;

  // exact homomorphism check over all pairs (intended for tests)
  bool check_homomorphism() const;

 private:
  const GroupTable* group_ = nullptr;
  std::uint32_t dim_ = 0;
  std::vector<std::vector<std::uint32_t>> perm_;  // perm_[g][j] = image of basis vector j
  std::vector<Mat<BigRat>> dense_;                // used when perm_ is empty
};

// P_H = (1/|H|) sum_h rho(h); exact, idempotent, image = V^H.
Mat<BigRat> invariant_projector(const GModule& v, const SubgroupRef& h);

// P_H applied to a single vector (no dim x dim matrix built).
std::vector<BigRat> project_invariant(const GModule& v, const SubgroupRef& h,
                                      const std::vector<BigRat>& vec);

bool is_invariant_vector(const GModule& v, const SubgroupRef& h, const std::vector<BigRat>& vec);

// v in V^H  ->  sum over coset reps r of rho(r) v (x) e_{rH}, a G-invariant
// tensor in V (x) Q[G/H]. Component (i, coset x) sits at index i*count + x.
// Throws NotInvariant when vec is not H-fixed.
std::vector<BigRat> frobenius_embed(const GModule& v, const CosetSpace& x,
                                    const std::vector<BigRat>& vec);

// True when rho(g) (x) perm(g) fixes the tensor for every generator g.
bool is_invariant_tensor(const GModule& v, const CosetSpace& x, const std::vector<BigRat>& tensor);

// The transplantation V^{H1} -> V^{H2} induced by an intertwiner S, in two
// algebraically independent forms that must agree:
//   operator form    (1/|H1|) P_{H2} sum_g phi[dc(g)] rho(g)
//   composite form   Frobenius embed, apply id (x) S, read the H2-coset-0 block
std::vector<BigRat> transplant_operator(const GModule& v, const IntertwinerBasis& basis,
                                        const Intertwiner& s, const std::vector<BigRat>& vec);
std::vector<BigRat> transplant_composite(const GModule& v, const IntertwinerBasis& basis,
                                         const Intertwiner& s, const std::vector<BigRat>& vec);

struct Transplantation {
  Mat<BigRat> on_bases;  // rank2 x rank1, in the canonical invariant bases
  ColumnBasis basis1, basis2;
};

// Restrict the operator form to the canonical bases of V^{H1} and V^{H2}.
// Throws RankDeficient unless the restriction is a bijection.
Transplantation transplantation(const GModule& v, const IntertwinerBasis& basis,
                                const Intertwiner& s);

// Exact commutation T Delta|_{V^{H1}} == Delta|_{V^{H2}} T, after checking
// that Delta commutes with rho(g) for all generators (DeltaNotEquivariant).
bool verify_commutation(const GModule& v, const Mat<BigRat>& delta, const Transplantation& t);

// sum of rho(g) over one conjugacy class; commutes with every rho(g).
Mat<BigRat> class_sum(const GModule& v, const std::vector<std::uint32_t>& class_members);

// Polar (unitary) factor of an invertible intertwiner by the Newton
// iteration U <- (U + U^-T)/2; stops when ||U^T U - I||_inf < tol.
// Throws NoConvergence after 100 iterations.
Mat<double> orthogonalize(const Intertwiner& s, double tol = 1e-13);

}  // namespace gassmann
