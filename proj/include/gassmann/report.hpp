#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gassmann/gassmann.hpp"
#include "gassmann/graphs.hpp"
#include "gassmann/group.hpp"
#include "gassmann/intertwiner.hpp"

namespace gassmann {

// Parsed group-input file: 1-indexed cycle notation outside, 0-indexed inside.
struct GroupFile {
  std::string name;
  std::uint32_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<std::pair<std::string, std::vector<Permutation>>> subgroups;

  const std::vector<Permutation>* find_subgroup(const std::string& label) const;
};

GroupFile parse_group_file(const std::string& json_text);
GroupFile load_group_file(const std::string& path);  // throws Error on I/O problems

nlohmann::json certificate_json(const GroupTable& g, const ClassPartition& classes,
                                const GassmannCertificate& cert);
nlohmann::json intertwiner_json(const IntertwinerBasis& basis, const Intertwiner& s);
nlohmann::json spectral_json(const SpectralReport& report);
nlohmann::json zeta_json(const ZetaReport& report);

std::string decimal(const BigInt& value);
std::vector<std::string> decimal_vector(const std::vector<BigInt>& values);

}  // namespace gassmann
