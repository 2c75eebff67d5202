#include "gassmann/group.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "gassmann/errors.hpp"

namespace gassmann {

std::uint32_t GroupTable::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || *it != p)
    throw IndexOutOfRange("element " + cycle_string(p) + " not in group");
  return static_cast<std::uint32_t>(it - elements.begin());
}

GroupTable closure(const std::vector<Permutation>& generators, std::uint32_t cap) {
  if (generators.empty()) throw DegreeMismatch("closure: empty generator list");
  const std::uint32_t degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree) throw DegreeMismatch("closure: generators of unequal degree");

  std::map<Permutation, std::uint32_t> seen;
  std::vector<Permutation> order;
  order.push_back(identity_perm(degree));
  seen.emplace(order.front(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Permutation current = order[i];  // copy: order may reallocate
    for (const auto& g : generators) {
      Permutation next = compose(current, g);
      if (seen.emplace(next, 0).second) {
        order.push_back(std::move(next));
        if (order.size() > cap)
          throw CapExceeded("closure passed cap of " + std::to_string(cap) + " elements");
      }
    }
  }

  GroupTable table;
  table.degree = degree;
  table.elements = std::move(order);
  std::sort(table.elements.begin(), table.elements.end());
  for (std::uint32_t i = 0; i < table.size(); ++i) seen[table.elements[i]] = i;

  const std::uint32_t n = table.size();
  table.mul.resize(static_cast<std::size_t>(n) * n);
  table.inv.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b)
      table.mul[static_cast<std::size_t>(a) * n + b] =
          seen.at(compose(table.elements[a], table.elements[b]));
    table.inv[a] = seen.at(inverse(table.elements[a]));
  }
  for (const auto& g : generators) table.generator_indices.push_back(seen.at(g));
  return table;
}

bool SubgroupRef::contains(std::uint32_t e) const {
  return std::binary_search(member_indices.begin(), member_indices.end(), e);
}

SubgroupRef subgroup_from_generators(const GroupTable& g, const std::vector<std::uint32_t>& gens) {
  for (auto e : gens)
    if (e >= g.size()) throw IndexOutOfRange("subgroup generator index " + std::to_string(e));
  std::vector<bool> member(g.size(), false);
  std::vector<std::uint32_t> frontier{0};
  member[0] = true;
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto x : frontier)
      for (auto s : gens) {
        std::uint32_t y = g.product(x, s);
        if (!member[y]) {
          member[y] = true;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  SubgroupRef h;
  h.parent = &g;
  for (std::uint32_t e = 0; e < g.size(); ++e)
    if (member[e]) h.member_indices.push_back(e);
  return h;
}

SubgroupRef whole_group(const GroupTable& g) {
  SubgroupRef h;
  h.parent = &g;
  h.member_indices.resize(g.size());
  for (std::uint32_t e = 0; e < g.size(); ++e) h.member_indices[e] = e;
  return h;
}

SubgroupRef trivial_subgroup(const GroupTable& g) {
  SubgroupRef h;
  h.parent = &g;
  h.member_indices = {0};
  return h;
}

ClassPartition conjugacy_classes(const GroupTable& g) {
  const std::uint32_t n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::uint32_t>> classes;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<std::uint32_t> orbit;
    for (std::uint32_t c = 0; c < n; ++c) {
      std::uint32_t y = g.conjugate(c, x);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  ClassPartition part;
  part.class_of.resize(n);
  for (std::uint32_t c = 0; c < classes.size(); ++c)
    for (auto e : classes[c]) part.class_of[e] = c;
  part.classes = std::move(classes);
  return part;
}

namespace {

void require_subgroup(const GroupTable& g, const SubgroupRef& h, const char* where) {
  if (h.parent != &g || h.member_indices.empty() || h.member_indices.front() != 0)
    throw NotASubgroup(std::string(where) + ": not a subgroup of this group");
  for (auto a : h.member_indices) {
    if (a >= g.size() || !h.contains(g.inverse_of(a)))
      throw NotASubgroup(std::string(where) + ": member set not closed under inverse");
    for (auto b : h.member_indices)
      if (!h.contains(g.product(a, b)))
        throw NotASubgroup(std::string(where) + ": member set not closed under product");
  }
}

}  // namespace

CosetSpace left_cosets(const GroupTable& g, const SubgroupRef& h) {
  require_subgroup(g, h, "left_cosets");
  const std::uint32_t n = g.size();
  CosetSpace x;
  x.subgroup = h;
  x.coset_of.assign(n, n);
  for (std::uint32_t e = 0; e < n; ++e) {
    if (x.coset_of[e] != n) continue;
    std::uint32_t id = static_cast<std::uint32_t>(x.reps.size());
    x.reps.push_back(e);
    for (auto m : h.member_indices) x.coset_of[g.product(e, m)] = id;
  }
  const std::uint32_t ncos = x.count();
  x.act.resize(static_cast<std::size_t>(n) * ncos);
  for (std::uint32_t e = 0; e < n; ++e)
    for (std::uint32_t c = 0; c < ncos; ++c)
      x.act[static_cast<std::size_t>(e) * ncos + c] = x.coset_of[g.product(e, x.reps[c])];
  return x;
}

DoubleCosetPartition double_cosets(const GroupTable& g, const SubgroupRef& h2,
                                   const SubgroupRef& h1) {
  require_subgroup(g, h2, "double_cosets");
  require_subgroup(g, h1, "double_cosets");
  const std::uint32_t n = g.size();
  DoubleCosetPartition part;
  part.class_of.assign(n, n);
  for (std::uint32_t e = 0; e < n; ++e) {
    if (part.class_of[e] != n) continue;
    std::uint32_t id = static_cast<std::uint32_t>(part.classes.size());
    std::vector<std::uint32_t> members;
    for (auto a : h2.member_indices) {
      std::uint32_t ae = g.product(a, e);
      for (auto b : h1.member_indices) {
        std::uint32_t y = g.product(ae, b);
        if (part.class_of[y] == n) {
          part.class_of[y] = id;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    part.classes.push_back(std::move(members));
  }
  return part;
}

std::optional<std::uint32_t> are_conjugate_subgroups(const GroupTable& g, const SubgroupRef& h1,
                                                     const SubgroupRef& h2) {
  if (h1.parent != &g || h2.parent != &g) throw NotASubgroup("are_conjugate_subgroups");
  if (h1.order() != h2.order()) return std::nullopt;
  std::vector<std::uint32_t> image(h1.order());
  for (std::uint32_t c = 0; c < g.size(); ++c) {
    for (std::size_t k = 0; k < h1.member_indices.size(); ++k)
      image[k] = g.conjugate(c, h1.member_indices[k]);
    std::sort(image.begin(), image.end());
    if (image == h2.member_indices) return c;
  }
  return std::nullopt;
}

std::uint64_t fixed_point_count(const GroupTable& g, const CosetSpace& x, std::uint32_t elem) {
  if (elem >= g.size()) throw IndexOutOfRange("fixed_point_count: element index");
  std::uint64_t count = 0;
  for (std::uint32_t c = 0; c < x.count(); ++c)
    if (x.apply(elem, c) == c) ++count;
  return count;
}

}  // namespace gassmann
