#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gassmann/permutation.hpp"

namespace gassmann {

inline constexpr std::uint32_t kDefaultGroupCap = 100'000;

// A fully enumerated finite permutation group. Elements are stored in
// canonical order (lexicographic on image arrays), so index 0 is the
// identity and all downstream ids are reproducible across runs.
struct GroupTable {
  std::uint32_t degree = 0;
  std::vector<Permutation> elements;
  std::vector<std::uint32_t> mul;  // size() x size(), row-major
  std::vector<std::uint32_t> inv;
  std::vector<std::uint32_t> generator_indices;

  std::uint32_t size() const { return static_cast<std::uint32_t>(elements.size()); }
  std::uint32_t product(std::uint32_t a, std::uint32_t b) const { return mul[a * size() + b]; }
  std::uint32_t inverse_of(std::uint32_t a) const { return inv[a]; }
  // g x g^-1
  std::uint32_t conjugate(std::uint32_t g, std::uint32_t x) const {
    return product(product(g, x), inv[g]);
  }
  std::uint32_t index_of(const Permutation& p) const;  // throws IndexOutOfRange if absent
};

// Breadth-first product closure of the generators, re-sorted into canonical
// order. Output is independent of generator order. Throws CapExceeded if the
// closure passes `cap` elements before closing, DegreeMismatch on ragged input.
GroupTable closure(const std::vector<Permutation>& generators,
                   std::uint32_t cap = kDefaultGroupCap);

struct SubgroupRef {
  const GroupTable* parent = nullptr;
  std::vector<std::uint32_t> member_indices;  // sorted, contains 0

  std::uint32_t order() const { return static_cast<std::uint32_t>(member_indices.size()); }
  bool contains(std::uint32_t e) const;
};

SubgroupRef subgroup_from_generators(const GroupTable& g, const std::vector<std::uint32_t>& gens);
SubgroupRef whole_group(const GroupTable& g);
SubgroupRef trivial_subgroup(const GroupTable& g);

struct ClassPartition {
  std::vector<std::uint32_t> class_of;               // element index -> class id
  std::vector<std::vector<std::uint32_t>> classes;   // ordered by (size, min member)

  std::uint32_t count() const { return static_cast<std::uint32_t>(classes.size()); }
};

ClassPartition conjugacy_classes(const GroupTable& g);

// The left coset space G/H with the left action g.(xH) = (gx)H.
// Representatives are the minimal element index in each coset, listed in
// increasing order; coset 0 is H itself.
struct CosetSpace {
  SubgroupRef subgroup;
  std::vector<std::uint32_t> reps;
  std::vector<std::uint32_t> coset_of;  // element index -> coset id
  std::vector<std::uint32_t> act;       // |G| x count(), row-major

  std::uint32_t count() const { return static_cast<std::uint32_t>(reps.size()); }
  std::uint32_t apply(std::uint32_t g, std::uint32_t coset) const {
    return act[g * count() + coset];
  }
};

CosetSpace left_cosets(const GroupTable& g, const SubgroupRef& h);

// Partition of G into double cosets H2 g H1, ordered by minimal member.
struct DoubleCosetPartition {
  std::vector<std::uint32_t> class_of;
  std::vector<std::vector<std::uint32_t>> classes;

  std::uint32_t count() const { return static_cast<std::uint32_t>(classes.size()); }
};

DoubleCosetPartition double_cosets(const GroupTable& g, const SubgroupRef& h2,
                                   const SubgroupRef& h1);

// First g (in canonical order) with g H1 g^-1 = H2, if any.
std::optional<std::uint32_t> are_conjugate_subgroups(const GroupTable& g, const SubgroupRef& h1,
                                                     const SubgroupRef& h2);

// |{x in G/H : g.x = x}|, the permutation character of G/H at g.
std::uint64_t fixed_point_count(const GroupTable& g, const CosetSpace& x, std::uint32_t elem);

}  // namespace gassmann
