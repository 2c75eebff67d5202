#include "gassmann/gmodule.hpp"

#include <string>

#include "gassmann/errors.hpp"

namespace gassmann {

GModule GModule::regular(const GroupTable& g) {
  GModule m;
  m.group_ = &g;
  m.dim_ = g.size();
  m.perm_.resize(g.size());
  for (std::uint32_t e = 0; e < g.size(); ++e) {
    m.perm_[e].resize(g.size());
    for (std::uint32_t j = 0; j < g.size(); ++j) m.perm_[e][j] = g.product(e, j);
  }
  return m;
}

GModule GModule::on_cosets(const GroupTable& g, const CosetSpace& x) {
  GModule m;
  m.group_ = &g;
  m.dim_ = x.count();
  m.perm_.resize(g.size());
  for (std::uint32_t e = 0; e < g.size(); ++e) {
    m.perm_[e].resize(x.count());
    for (std::uint32_t c = 0; c < x.count(); ++c) m.perm_[e][c] = x.apply(e, c);
  }
  return m;
}

GModule GModule::trivial(const GroupTable& g) {
  GModule m;
  m.group_ = &g;
  m.dim_ = 1;
  m.perm_.assign(g.size(), {0});
  return m;
}

GModule GModule::from_generator_images(const GroupTable& g,
                                       const std::vector<Mat<BigRat>>& images) {
  if (images.size() != g.generator_indices.size())
    throw DegreeMismatch("from_generator_images: one matrix per generator required");
  GModule m;
  m.group_ = &g;
  m.dim_ = images.empty() ? 0 : static_cast<std::uint32_t>(images.front().rows());
  m.dense_.resize(g.size());
  std::vector<bool> known(g.size(), false);
  m.dense_[0] = Mat<BigRat>::identity(m.dim_);
  known[0] = true;
  // walk products x*gen until the table closes
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::uint32_t x = 0; x < g.size(); ++x) {
      if (!known[x]) continue;
      for (std::size_t k = 0; k < images.size(); ++k) {
        std::uint32_t y = g.product(x, g.generator_indices[k]);
        if (known[y]) continue;
        m.dense_[y] = m.dense_[x] * images[k];
        known[y] = true;
        progress = true;
      }
    }
  }
  for (std::uint32_t x = 0; x < g.size(); ++x)
    if (!known[x]) throw IndexOutOfRange("from_generator_images: generators do not generate");
  return m;
}

void GModule::apply(std::uint32_t g, const BigRat* in, BigRat* out) const {
  if (!perm_.empty()) {
    const auto& p = perm_[g];
    for (std::uint32_t j = 0; j < dim_; ++j) out[p[j]] = in[j];
    return;
  }
  const Mat<BigRat>& rho = dense_[g];
  for (std::uint32_t i = 0; i < dim_; ++i) {
    BigRat s = 0;
    for (std::uint32_t j = 0; j < dim_; ++j)
      if (rho(i, j) != 0) s += rho(i, j) * in[j];
    out[i] = s;
  }
}

std::vector<BigRat> GModule::apply(std::uint32_t g, const std::vector<BigRat>& in) const {
  std::vector<BigRat> out(dim_);
  apply(g, in.data(), out.data());
  return out;
}

Mat<BigRat> GModule::matrix(std::uint32_t g) const {
  if (!perm_.empty()) {
    Mat<BigRat> m(dim_, dim_);
    for (std::uint32_t j = 0; j < dim_; ++j) m(perm_[g][j], j) = 1;
    return m;
  }
  return dense_[g];
}

bool GModule::check_homomorphism() const {
  const GroupTable& g = *group_;
  if (matrix(0) != Mat<BigRat>::identity(dim_)) return false;
  for (std::uint32_t a = 0; a < g.size(); ++a)
    for (std::uint32_t b = 0; b < g.size(); ++b)
      if (matrix(g.product(a, b)) != matrix(a) * matrix(b)) return false;
  return true;
}

Mat<BigRat> invariant_projector(const GModule& v, const SubgroupRef& h) {
  const std::uint32_t dim = v.dim();
  Mat<BigRat> p(dim, dim);
  std::vector<BigRat> e(dim), out(dim);
  for (std::uint32_t j = 0; j < dim; ++j) {
    if (j > 0) e[j - 1] = 0;
    e[j] = 1;
    for (auto m : h.member_indices) {
      std::fill(out.begin(), out.end(), BigRat(0));
      v.apply(m, e.data(), out.data());
      for (std::uint32_t i = 0; i < dim; ++i)
        if (out[i] != 0) p(i, j) += out[i];
    }
  }
  const BigRat scale(1, h.order());
  for (std::uint32_t i = 0; i < dim; ++i)
    for (std::uint32_t j = 0; j < dim; ++j)
      if (p(i, j) != 0) p(i, j) *= scale;
  return p;
}

std::vector<BigRat> project_invariant(const GModule& v, const SubgroupRef& h,
                                      const std::vector<BigRat>& vec) {
  std::vector<BigRat> acc(v.dim(), BigRat(0)), out(v.dim());
  for (auto m : h.member_indices) {
    std::fill(out.begin(), out.end(), BigRat(0));
    v.apply(m, vec.data(), out.data());
    for (std::uint32_t i = 0; i < v.dim(); ++i) acc[i] += out[i];
  }
  const BigRat scale(1, h.order());
  for (auto& x : acc) x *= scale;
  return acc;
}

bool is_invariant_vector(const GModule& v, const SubgroupRef& h, const std::vector<BigRat>& vec) {
  for (auto m : h.member_indices)
    if (v.apply(m, vec) != vec) return false;
  return true;
}

std::vector<BigRat> frobenius_embed(const GModule& v, const CosetSpace& x,
                                    const std::vector<BigRat>& vec) {
  if (!is_invariant_vector(v, x.subgroup, vec))
    throw NotInvariant("frobenius_embed: vector is not fixed by the subgroup");
  const std::uint32_t dim = v.dim(), ncos = x.count();
  std::vector<BigRat> tensor(static_cast<std::size_t>(dim) * ncos, BigRat(0));
  for (std::uint32_t c = 0; c < ncos; ++c) {
    std::vector<BigRat> moved = v.apply(x.reps[c], vec);
    for (std::uint32_t i = 0; i < dim; ++i) tensor[static_cast<std::size_t>(i) * ncos + c] = moved[i];
  }
  return tensor;
}

bool is_invariant_tensor(const GModule& v, const CosetSpace& x,
                         const std::vector<BigRat>& tensor) {
  const std::uint32_t dim = v.dim(), ncos = x.count();
  std::vector<BigRat> block(dim), moved(dim);
  for (auto e : v.group().generator_indices) {
    for (std::uint32_t c = 0; c < ncos; ++c) {
      for (std::uint32_t i = 0; i < dim; ++i)
        block[i] = tensor[static_cast<std::size_t>(i) * ncos + c];
      std::fill(moved.begin(), moved.end(), BigRat(0));
      v.apply(e, block.data(), moved.data());
      std::uint32_t target = x.apply(e, c);
      for (std::uint32_t i = 0; i < dim; ++i)
        if (moved[i] != tensor[static_cast<std::size_t>(i) * ncos + target]) return false;
    }
  }
  return true;
}

std::vector<BigRat> transplant_operator(const GModule& v, const IntertwinerBasis& basis,
                                        const Intertwiner& s, const std::vector<BigRat>& vec) {
  const GroupTable& g = v.group();
  std::vector<BigRat> acc(v.dim(), BigRat(0)), out(v.dim());
  for (std::uint32_t e = 0; e < g.size(); ++e) {
    const BigInt& weight = s.phi[basis.dcs.class_of[e]];
    if (weight == 0) continue;
    std::fill(out.begin(), out.end(), BigRat(0));
    v.apply(e, vec.data(), out.data());
    for (std::uint32_t i = 0; i < v.dim(); ++i)
      if (out[i] != 0) acc[i] += BigRat(weight) * out[i];
  }
  const BigRat scale(1, basis.x1.subgroup.order());
  for (auto& entry : acc) entry *= scale;
  return project_invariant(v, basis.x2.subgroup, acc);
}

std::vector<BigRat> transplant_composite(const GModule& v, const IntertwinerBasis& basis,
                                         const Intertwiner& s, const std::vector<BigRat>& vec) {
  const std::uint32_t dim = v.dim(), n1 = basis.x1.count();
  std::vector<BigRat> tensor = frobenius_embed(v, basis.x1, vec);
  // apply id (x) S blockwise and read off the block of the H2-identity coset
  // (coset 0 has representative identity), which inverts the H2 embedding
  std::vector<BigRat> out(dim, BigRat(0));
  for (std::uint32_t x = 0; x < n1; ++x) {
    BigRat coeff(s.matrix(0, x));
    if (coeff == 0) continue;
    for (std::uint32_t i = 0; i < dim; ++i)
      out[i] += coeff * tensor[static_cast<std::size_t>(i) * n1 + x];
  }
  return out;
}

Transplantation transplantation(const GModule& v, const IntertwinerBasis& basis,
                                const Intertwiner& s) {
  Transplantation t;
  t.basis1 = column_space(invariant_projector(v, basis.x1.subgroup));
  t.basis2 = column_space(invariant_projector(v, basis.x2.subgroup));
  const std::size_t r1 = t.basis1.rank(), r2 = t.basis2.rank();
  t.on_bases = Mat<BigRat>(r2, r1);
  std::vector<BigRat> column(v.dim());
  for (std::size_t j = 0; j < r1; ++j) {
    for (std::uint32_t i = 0; i < v.dim(); ++i) column[i] = t.basis1.vectors(i, j);
    std::vector<BigRat> image = transplant_operator(v, basis, s, column);
    std::vector<BigRat> coords = coordinates(t.basis2, image);
    for (std::size_t i = 0; i < r2; ++i) t.on_bases(i, j) = coords[i];
  }
  if (r1 != r2 || rank_rational(t.on_bases) != r1)
    throw RankDeficient("transplantation: restriction is not a bijection (rank " +
                        std::to_string(rank_rational(t.on_bases)) + " of " +
                        std::to_string(r1) + "x" + std::to_string(r2) + ")");
  return t;
}

namespace {

Mat<BigRat> restrict_to_basis(const GModule& v, const Mat<BigRat>& delta, const ColumnBasis& b) {
  const std::size_t r = b.rank();
  Mat<BigRat> out(r, r);
  std::vector<BigRat> image(v.dim());
  for (std::size_t j = 0; j < r; ++j) {
    for (std::uint32_t i = 0; i < v.dim(); ++i) {
      BigRat s = 0;
      for (std::uint32_t k = 0; k < v.dim(); ++k)
        if (delta(i, k) != 0 && b.vectors(k, j) != 0) s += delta(i, k) * b.vectors(k, j);
      image[i] = s;
    }
    std::vector<BigRat> coords = coordinates(b, image);
    for (std::size_t i = 0; i < r; ++i) out(i, j) = coords[i];
  }
  return out;
}

}  // namespace

bool verify_commutation(const GModule& v, const Mat<BigRat>& delta, const Transplantation& t) {
  for (auto e : v.group().generator_indices) {
    Mat<BigRat> rho = v.matrix(e);
    if (rho * delta != delta * rho)
      throw DeltaNotEquivariant("verify_commutation: Delta does not commute with generator " +
                                cycle_string(v.group().elements[e]));
  }
  Mat<BigRat> d1 = restrict_to_basis(v, delta, t.basis1);
  Mat<BigRat> d2 = restrict_to_basis(v, delta, t.basis2);
  return t.on_bases * d1 == d2 * t.on_bases;
}

Mat<BigRat> class_sum(const GModule& v, const std::vector<std::uint32_t>& class_members) {
  Mat<BigRat> sum(v.dim(), v.dim());
  for (auto e : class_members) sum = sum + v.matrix(e);
  return sum;
}

Mat<double> orthogonalize(const Intertwiner& s, double tol) {
  if (s.det == 0 || s.matrix.rows() != s.matrix.cols())
    throw RankDeficient("orthogonalize: invertible square intertwiner required");
  Mat<double> u = to_double(s.matrix);
  const std::size_t n = u.rows();
  for (int iter = 0; iter <= 100; ++iter) {
    Mat<double> gram = u.transpose() * u;
    for (std::size_t i = 0; i < n; ++i) gram(i, i) -= 1.0;
    if (max_abs(gram) < tol) return u;
    Mat<double> ut = inverse_double(u).transpose();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) u(i, j) = 0.5 * (u(i, j) + ut(i, j));
  }
  throw NoConvergence("orthogonalize: polar iteration did not reach tolerance");
}

}  // namespace gassmann
