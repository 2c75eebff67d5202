#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gassmann/group.hpp"

namespace gassmann {

// counts[c] = |C_c intersect H| for each conjugacy class c.
using ClassProfile = std::vector<std::uint64_t>;

ClassProfile class_profile(const GroupTable& g, const ClassPartition& classes,
                           const SubgroupRef& h);

struct GassmannCertificate {
  ClassProfile profile1, profile2;
  bool is_gassmann = false;
  // Permutation-character equality, verified through the independent
  // fixed-point-count path (one representative per class).
  bool char_check = false;
  std::optional<std::uint32_t> conjugacy_witness;
  std::uint64_t group_order = 0, order1 = 0, order2 = 0, index = 0;
};

// Decide almost-conjugacy of (h1, h2) in g and cross-validate via the
// permutation characters on G/H1 and G/H2.
GassmannCertificate gassmann_certificate(const GroupTable& g, const ClassPartition& classes,
                                         const SubgroupRef& h1, const SubgroupRef& h2);

struct SearchOptions {
  std::uint32_t max_generators = 3;      // subgroup closures of subsets up to this size
  std::uint64_t subset_budget = 5'000'000;
  bool exhaustive_small = false;         // raise max_generators to log2(|G|) when |G| <= 48
};

struct SearchHit {
  SubgroupRef h1, h2;  // ordered: (|H|, member set) lexicographic, h1 < h2
  GassmannCertificate cert;
};

// Non-conjugate almost-conjugate pairs among subgroups generated by element
// subsets of bounded size. Conjugate copies are deduplicated by keeping the
// lexicographically minimal conjugate member set per class of subgroups.
// Throws SearchBudgetExceeded when the subset enumeration passes the budget.
std::vector<SearchHit> search_pairs(const GroupTable& g, const ClassPartition& classes,
                                    std::optional<std::uint64_t> order_filter,
                                    const SearchOptions& options = {});

}  // namespace gassmann
