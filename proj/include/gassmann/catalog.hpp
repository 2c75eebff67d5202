#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gassmann {

// A bundled example: a group given by generators, a labeled pair of
// subgroups, a default generating set for the graph constructions, and the
// expected verdicts. Every entry is re-verified from scratch by the tests.
struct CatalogEntry {
  std::string name;
  std::string description;
  std::uint32_t degree = 0;
  std::vector<std::string> generators;
  std::vector<std::pair<std::string, std::vector<std::string>>> subgroups;
  std::string h1_label, h2_label;
  std::vector<std::string> default_gens;
  bool expect_gassmann = false;
  bool expect_conjugate = false;
};

const std::vector<CatalogEntry>& builtin_catalog();
const CatalogEntry* find_catalog_entry(std::string_view name);

// The entry rendered as a group-input JSON document:
// { "name", "degree", "generators": [...], "subgroups": { label: [...] } }
std::string group_json(const CatalogEntry& entry);

}  // namespace gassmann
