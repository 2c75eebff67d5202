#include "gassmann/report.hpp"

#include <fstream>
#include <sstream>

#include "gassmann/errors.hpp"

namespace gassmann {

const std::vector<Permutation>* GroupFile::find_subgroup(const std::string& label) const {
  for (const auto& [name_, gens] : subgroups)
    if (name_ == label) return &gens;
  return nullptr;
}

GroupFile parse_group_file(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("group file is not valid JSON: ") + e.what());
  }
  GroupFile file;
  try {
    file.name = j.value("name", "unnamed");
    file.degree = j.at("degree").get<std::uint32_t>();
    if (file.degree == 0) throw Error("group file: degree must be positive");
    for (const auto& text : j.at("generators"))
      file.generators.push_back(parse_cycles(text.get<std::string>(), file.degree));
    if (j.contains("subgroups")) {
      // nlohmann objects iterate in sorted key order, keeping labels stable
      for (const auto& [label, gens] : j.at("subgroups").items()) {
        std::vector<Permutation> parsed;
        for (const auto& text : gens) parsed.push_back(parse_cycles(text.get<std::string>(), file.degree));
        file.subgroups.emplace_back(label, std::move(parsed));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("group file: missing or malformed field: ") + e.what());
  }
  if (file.generators.empty()) throw Error("group file: at least one generator required");
  return file;
}

GroupFile load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_group_file(buffer.str());
}

std::string decimal(const BigInt& value) { return value.str(); }

std::vector<std::string> decimal_vector(const std::vector<BigInt>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

nlohmann::json certificate_json(const GroupTable& g, const ClassPartition& classes,
                                const GassmannCertificate& cert) {
  nlohmann::json j;
  j["schema_version"] = "1";
  j["orders"] = {{"group", cert.group_order},
                 {"h1", cert.order1},
                 {"h2", cert.order2},
                 {"index", cert.index}};
  std::vector<std::size_t> class_sizes;
  for (const auto& c : classes.classes) class_sizes.push_back(c.size());
  j["class_sizes"] = class_sizes;
  j["profile_h1"] = cert.profile1;
  j["profile_h2"] = cert.profile2;
  j["is_gassmann"] = cert.is_gassmann;
  j["char_check"] = cert.char_check;
  if (cert.conjugacy_witness)
    j["conjugacy_witness"] = cycle_string(g.elements[*cert.conjugacy_witness]);
  else
    j["conjugacy_witness"] = nullptr;
  return j;
}

nlohmann::json intertwiner_json(const IntertwinerBasis& basis, const Intertwiner& s) {
  nlohmann::json j;
  j["double_cosets"] = basis.dcs.count();
  j["phi"] = decimal_vector(s.phi);
  j["shape"] = {s.matrix.rows(), s.matrix.cols()};
  std::vector<long long> flat;
  flat.reserve(s.matrix.rows() * s.matrix.cols());
  for (std::size_t i = 0; i < s.matrix.rows(); ++i)
    for (std::size_t k = 0; k < s.matrix.cols(); ++k)
      flat.push_back(static_cast<long long>(s.matrix(i, k)));
  j["matrix"] = flat;
  j["det"] = decimal(s.det);
  return j;
}

nlohmann::json spectral_json(const SpectralReport& report) {
  nlohmann::json j;
  j["charpoly_h1"] = decimal_vector(report.charpoly1);
  j["charpoly_h2"] = decimal_vector(report.charpoly2);
  j["equal"] = report.equal;
  j["spectrum_h1"] = report.spectrum1;
  j["spectrum_h2"] = report.spectrum2;
  return j;
}

nlohmann::json zeta_json(const ZetaReport& report) {
  nlohmann::json j;
  j["poly_h1"] = decimal_vector(report.poly1);
  j["poly_h2"] = decimal_vector(report.poly2);
  j["equal"] = report.equal;
  return j;
}

}  // namespace gassmann
