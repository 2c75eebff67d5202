#include "gassmann/gassmann.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "gassmann/errors.hpp"

namespace gassmann {

ClassProfile class_profile(const GroupTable& g, const ClassPartition& classes,
                           const SubgroupRef& h) {
  if (h.parent != &g) throw NotASubgroup("class_profile");
  ClassProfile counts(classes.count(), 0);
  for (auto m : h.member_indices) ++counts[classes.class_of[m]];
  return counts;
}

GassmannCertificate gassmann_certificate(const GroupTable& g, const ClassPartition& classes,
                                         const SubgroupRef& h1, const SubgroupRef& h2) {
  GassmannCertificate cert;
  cert.profile1 = class_profile(g, classes, h1);
  cert.profile2 = class_profile(g, classes, h2);
  cert.is_gassmann = cert.profile1 == cert.profile2;
  cert.group_order = g.size();
  cert.order1 = h1.order();
  cert.order2 = h2.order();
  cert.index = g.size() / h1.order();

  CosetSpace x1 = left_cosets(g, h1);
  CosetSpace x2 = left_cosets(g, h2);
  cert.char_check = true;
  for (const auto& cls : classes.classes) {
    std::uint32_t rep = cls.front();
    if (fixed_point_count(g, x1, rep) != fixed_point_count(g, x2, rep)) {
      cert.char_check = false;
      break;
    }
  }
  cert.conjugacy_witness = are_conjugate_subgroups(g, h1, h2);
  return cert;
}

namespace {

// Lexicographically minimal conjugate of the member set: a canonical label
// for the conjugacy class of the subgroup.
std::vector<std::uint32_t> min_conjugate(const GroupTable& g,
                                         const std::vector<std::uint32_t>& members) {
  std::vector<std::uint32_t> best = members;
  std::vector<std::uint32_t> image(members.size());
  for (std::uint32_t c = 0; c < g.size(); ++c) {
    for (std::size_t k = 0; k < members.size(); ++k) image[k] = g.conjugate(c, members[k]);
    std::sort(image.begin(), image.end());
    if (image < best) best = image;
  }
  return best;
}

}  // namespace

std::vector<SearchHit> search_pairs(const GroupTable& g, const ClassPartition& classes,
                                    std::optional<std::uint64_t> order_filter,
                                    const SearchOptions& options) {
  std::uint32_t max_gens = options.max_generators;
  if (options.exhaustive_small && g.size() <= 48) {
    max_gens = 1;
    while ((1u << max_gens) < g.size()) ++max_gens;  // every subgroup is log2-generated
  }

  const std::uint32_t n = g.size();
  std::uint64_t tried = 0;
  std::set<std::vector<std::uint32_t>> seen_subgroups;
  std::set<std::vector<std::uint32_t>> canonical_sets;

  // closures of all subsets of non-identity elements, sizes 1..max_gens
  std::vector<std::uint32_t> subset;
  auto consider = [&](const std::vector<std::uint32_t>& gens) {
    if (++tried > options.subset_budget)
      throw SearchBudgetExceeded("subgroup enumeration passed budget of " +
                                 std::to_string(options.subset_budget) + " subsets");
    SubgroupRef h = subgroup_from_generators(g, gens);
    if (order_filter && h.order() != *order_filter) return;
    if (!seen_subgroups.insert(h.member_indices).second) return;
    canonical_sets.insert(min_conjugate(g, h.member_indices));
  };

  if (!order_filter || *order_filter == 1)
    canonical_sets.insert(trivial_subgroup(g).member_indices);
  // depth-first subset enumeration in index order
  auto recurse = [&](auto&& self, std::uint32_t start) -> void {
    for (std::uint32_t e = start; e < n; ++e) {
      subset.push_back(e);
      consider(subset);
      if (subset.size() < max_gens) self(self, e + 1);
      subset.pop_back();
    }
  };
  recurse(recurse, 1);

  // bucket the deduplicated class representatives by profile
  std::map<ClassProfile, std::vector<SubgroupRef>> buckets;
  for (const auto& members : canonical_sets) {
    SubgroupRef h;
    h.parent = &g;
    h.member_indices = members;
    buckets[class_profile(g, classes, h)].push_back(std::move(h));
  }

  std::vector<SearchHit> hits;
  for (auto& [profile, subs] : buckets) {
    std::sort(subs.begin(), subs.end(), [](const SubgroupRef& a, const SubgroupRef& b) {
      if (a.order() != b.order()) return a.order() < b.order();
      return a.member_indices < b.member_indices;
    });
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = i + 1; j < subs.size(); ++j) {
        SearchHit hit;
        hit.h1 = subs[i];
        hit.h2 = subs[j];
        hit.cert = gassmann_certificate(g, classes, hit.h1, hit.h2);
        if (hit.cert.is_gassmann && !hit.cert.conjugacy_witness) hits.push_back(std::move(hit));
      }
  }
  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
    if (a.h1.order() != b.h1.order()) return a.h1.order() < b.h1.order();
    if (a.h1.member_indices != b.h1.member_indices)
      return a.h1.member_indices < b.h1.member_indices;
    return a.h2.member_indices < b.h2.member_indices;
  });
  return hits;
}

}  // namespace gassmann
