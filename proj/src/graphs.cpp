#include "gassmann/graphs.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "gassmann/errors.hpp"

namespace gassmann {

std::vector<std::uint32_t> symmetrize_generating_set(const GroupTable& g,
                                                     std::vector<std::uint32_t> s) {
  std::vector<std::uint32_t> out = std::move(s);
  const std::size_t given = out.size();
  for (std::size_t i = 0; i < given; ++i) out.push_back(g.inverse_of(out[i]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.front() == 0)
    throw IdentityInGeneratingSet("generating set contains the identity");
  return out;
}

namespace {

void validate_generating_set(const GroupTable& g, const std::vector<std::uint32_t>& s) {
  for (auto e : s) {
    if (e >= g.size()) throw IndexOutOfRange("generating set element out of range");
    if (e == 0) throw IdentityInGeneratingSet("generating set contains the identity");
    if (std::find(s.begin(), s.end(), g.inverse_of(e)) == s.end())
      throw NotSymmetric("generating set not closed under inverse");
  }
}

}  // namespace

LabeledGraph cayley_graph(const GroupTable& g, const std::vector<std::uint32_t>& s) {
  validate_generating_set(g, s);
  LabeledGraph graph;
  graph.n = g.size();
  graph.generator_count = static_cast<std::uint32_t>(s.size());
  graph.adj = Mat<std::int64_t>(graph.n, graph.n);
  for (std::uint32_t x = 0; x < graph.n; ++x)
    for (auto e : s) ++graph.adj(x, g.product(x, e));
  return graph;
}

LabeledGraph schreier_quotient(const GroupTable& g, const SubgroupRef& h,
                               const std::vector<std::uint32_t>& s) {
  validate_generating_set(g, s);
  const std::uint32_t n = g.size();
  // right cosets Hx = orbits of the left H-action, minimal member first
  std::vector<std::uint32_t> coset_of(n, n);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t e = 0; e < n; ++e) {
    if (coset_of[e] != n) continue;
    std::uint32_t id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(e);
    for (auto m : h.member_indices) coset_of[g.product(m, e)] = id;
  }
  LabeledGraph graph;
  graph.n = static_cast<std::uint32_t>(reps.size());
  graph.generator_count = static_cast<std::uint32_t>(s.size());
  graph.adj = Mat<std::int64_t>(graph.n, graph.n);
  for (std::uint32_t c = 0; c < graph.n; ++c)
    for (auto e : s) ++graph.adj(c, coset_of[g.product(reps[c], e)]);
  return graph;
}

LabeledGraph coset_action_graph(const GroupTable& g, const CosetSpace& x,
                                const std::vector<std::uint32_t>& s) {
  validate_generating_set(g, s);
  LabeledGraph graph;
  graph.n = x.count();
  graph.generator_count = static_cast<std::uint32_t>(s.size());
  graph.adj = Mat<std::int64_t>(graph.n, graph.n);
  for (std::uint32_t c = 0; c < graph.n; ++c)
    for (auto e : s) ++graph.adj(x.apply(e, c), c);
  return graph;
}

std::vector<BigInt> laplacian_charpoly(const LabeledGraph& g) {
  const std::uint32_t n = g.n;
  std::vector<long long> xs(n + 1);
  std::vector<BigInt> ys(n + 1);
  for (std::uint32_t t = 0; t <= n; ++t) {
    xs[t] = t;
    Mat<BigInt> m(n, n);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) m(i, j) = BigInt(g.adj(i, j));
      m(i, i) -= g.generator_count;
    }
    // xI - L = xI - (|S| I - adj) = (x - |S|) I + adj
    for (std::uint32_t i = 0; i < n; ++i) m(i, i) += static_cast<long long>(t);
    ys[t] = det_bareiss(std::move(m));
  }
  std::vector<BigInt> coeffs = interpolate_integer_poly(xs, ys);
  coeffs.resize(n + 1, BigInt(0));
  return coeffs;
}

SpectralReport isospectral_verdict(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (g1.generator_count != g2.generator_count)
    throw RegularityMismatch("isospectral_verdict: generator counts differ");
  SpectralReport report;
  report.charpoly1 = laplacian_charpoly(g1);
  report.charpoly2 = laplacian_charpoly(g2);
  report.equal = report.charpoly1 == report.charpoly2;
  Mat<double> l1(g1.n, g1.n), l2(g2.n, g2.n);
  for (std::uint32_t i = 0; i < g1.n; ++i)
    for (std::uint32_t j = 0; j < g1.n; ++j)
      l1(i, j) = (i == j ? g1.generator_count : 0.0) - static_cast<double>(g1.adj(i, j));
  for (std::uint32_t i = 0; i < g2.n; ++i)
    for (std::uint32_t j = 0; j < g2.n; ++j)
      l2(i, j) = (i == j ? g2.generator_count : 0.0) - static_cast<double>(g2.adj(i, j));
  report.spectrum1 = symmetric_eigenvalues(std::move(l1));
  report.spectrum2 = symmetric_eigenvalues(std::move(l2));
  return report;
}

std::vector<BigInt> ihara_zeta_poly(const LabeledGraph& g) {
  const std::uint32_t n = g.n;
  std::vector<std::int64_t> degree(n, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) degree[i] += g.adj(i, j);
  const std::size_t points = 2 * static_cast<std::size_t>(n) + 1;
  std::vector<long long> xs(points);
  std::vector<BigInt> ys(points);
  for (std::size_t t = 0; t < points; ++t) {
    long long u = static_cast<long long>(t) - n;
    xs[t] = u;
    Mat<BigInt> m(n, n);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) m(i, j) = -BigInt(g.adj(i, j)) * u;
      m(i, i) += 1 + BigInt(degree[i] - 1) * u * u;
    }
    ys[t] = det_bareiss(std::move(m));
  }
  return interpolate_integer_poly(xs, ys);
}

ZetaReport zeta_verdict(const LabeledGraph& g1, const LabeledGraph& g2) {
  ZetaReport report;
  report.poly1 = ihara_zeta_poly(g1);
  report.poly2 = ihara_zeta_poly(g2);
  report.equal = report.poly1 == report.poly2;
  return report;
}

bool verify_transplantation_on_graphs(const GroupTable& g, const IntertwinerBasis& basis,
                                      const Intertwiner& s,
                                      const std::vector<std::uint32_t>& gens) {
  if (s.matrix.rows() != basis.x2.count() || s.matrix.cols() != basis.x1.count())
    throw BasisMismatch("verify_transplantation_on_graphs: intertwiner shape does not match");
  LabeledGraph q1 = coset_action_graph(g, basis.x1, gens);
  LabeledGraph q2 = coset_action_graph(g, basis.x2, gens);
  // S L1 = L2 S  <=>  S A1 = A2 S  (the |S| I terms cancel)
  Mat<BigInt> a1 = q1.adj.cast<BigInt>(), a2 = q2.adj.cast<BigInt>();
  return s.matrix * a1 == a2 * s.matrix;
}

std::optional<std::vector<std::uint32_t>> graphs_isomorphic(const LabeledGraph& g1,
                                                            const LabeledGraph& g2,
                                                            std::uint32_t cap) {
  if (g1.n > cap || g2.n > cap)
    throw TooLarge("graphs_isomorphic: more than " + std::to_string(cap) + " vertices");
  if (g1.n != g2.n) return std::nullopt;
  const std::uint32_t n = g1.n;
  // degree-multiset precheck
  auto degrees = [](const LabeledGraph& g) {
    std::vector<std::int64_t> d(g.n, 0);
    for (std::uint32_t i = 0; i < g.n; ++i)
      for (std::uint32_t j = 0; j < g.n; ++j) d[i] += g.adj(i, j);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(g1) != degrees(g2)) return std::nullopt;
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::uint32_t i = 0; i < n && ok; ++i)
      for (std::uint32_t j = 0; j < n && ok; ++j)
        if (g2.adj(p[i], p[j]) != g1.adj(i, j)) ok = false;
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

std::uint32_t component_count(const LabeledGraph& g) {
  std::vector<bool> seen(g.n, false);
  std::uint32_t components = 0;
  for (std::uint32_t start = 0; start < g.n; ++start) {
    if (seen[start]) continue;
    ++components;
    std::vector<std::uint32_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      for (std::uint32_t w = 0; w < g.n; ++w)
        if (g.adj(v, w) > 0 && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return components;
}

bool is_connected(const LabeledGraph& g) { return component_count(g) <= 1; }

std::string to_dot(const LabeledGraph& g, const std::string& name) {
  std::string out = "graph " + name + " {\n";
  for (std::uint32_t i = 0; i < g.n; ++i) out += "  v" + std::to_string(i) + ";\n";
  for (std::uint32_t i = 0; i < g.n; ++i)
    for (std::uint32_t j = i; j < g.n; ++j)
      if (g.adj(i, j) > 0)
        out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + " [label=\"" +
               std::to_string(g.adj(i, j)) + "\"];\n";
  out += "}\n";
  return out;
}

std::vector<std::uint32_t> random_symmetric_set(const GroupTable& g, std::mt19937_64& rng,
                                                std::uint32_t min_size) {
  if (g.size() <= 1 && min_size > 0)
    throw IdentityInGeneratingSet("trivial group has no identity-free generating set");
  std::vector<std::uint32_t> s;
  // rejection sampling keeps the draw uniform and portable
  auto draw = [&] {
    const std::uint64_t n = g.size();
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
    std::uint64_t r;
    do {
      r = rng();
    } while (r >= limit);
    return static_cast<std::uint32_t>(r % n);
  };
  while (s.size() < min_size) {
    std::uint32_t e = draw();
    if (e == 0) continue;
    s.push_back(e);
    s.push_back(g.inverse_of(e));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return s;
}

}  // namespace gassmann
