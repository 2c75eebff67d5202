#include "gassmann/catalog.hpp"

#include <json.hpp>

namespace gassmann {

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> c;

    // GL(3,2) on the 7 nonzero vectors of F2^3 (point i = vector with binary
    // value i). The stabilizer of a point and the setwise stabilizer of a
    // plane are the classical non-conjugate almost-conjugate pair of index 7.
    CatalogEntry gl32;
    gl32.name = "gl32";
    gl32.description = "GL(3,2) on 7 points; point stabilizer vs plane stabilizer (order 24)";
    gl32.degree = 7;
    gl32.generators = {"(1 2 4 3 6 7 5)", "(2 3)(4 6 5 7)"};
    gl32.subgroups = {
        {"point", {"(4 6)(5 7)", "(2 4 3 5)(6 7)"}},
        {"plane", {"(2 3)(6 7)", "(1 2)(4 5 7 6)"}},
    };
    gl32.h1_label = "point";
    gl32.h2_label = "plane";
    gl32.default_gens = {"(1 2 4 3 6 7 5)", "(2 3)(4 6 5 7)"};
    gl32.expect_gassmann = true;
    gl32.expect_conjugate = false;
    c.push_back(std::move(gl32));

    // Affine maps x -> ax+b mod 8 with a odd (order 32, on points 1..8 with
    // point i = residue i-1). H1 is the multiplicative subgroup {x -> ax},
    // H2 the twisted copy {1, 3x+4, 5x+4, 7x}; almost conjugate but not
    // conjugate.
    CatalogEntry aff8;
    aff8.name = "aff8";
    aff8.description = "affine group mod 8 (order 32); straight vs twisted multiplicative four-group";
    aff8.degree = 8;
    aff8.generators = {"(1 2 3 4 5 6 7 8)", "(2 4)(3 7)(6 8)", "(2 6)(4 8)"};
    aff8.subgroups = {
        {"mult", {"(2 4)(3 7)(6 8)", "(2 6)(4 8)"}},
        {"twisted", {"(1 5)(2 8)(4 6)", "(2 8)(3 7)(4 6)"}},
    };
    aff8.h1_label = "mult";
    aff8.h2_label = "twisted";
    aff8.default_gens = {"(1 2 3 4 5 6 7 8)", "(1 2 5 6)(3 8 7 4)", "(1 2 7 8 5 6 3 4)"};
    aff8.expect_gassmann = true;
    aff8.expect_conjugate = false;
    c.push_back(std::move(aff8));

    // Negative control: conjugate subgroups (trivially almost conjugate).
    CatalogEntry s3;
    s3.name = "s3";
    s3.description = "S3; two conjugate reflections (almost conjugate but conjugate)";
    s3.degree = 3;
    s3.generators = {"(1 2)", "(1 2 3)"};
    s3.subgroups = {
        {"t12", {"(1 2)"}},
        {"t13", {"(1 3)"}},
    };
    s3.h1_label = "t12";
    s3.h2_label = "t13";
    s3.default_gens = {"(1 2)", "(1 3)"};
    s3.expect_gassmann = true;
    s3.expect_conjugate = true;
    c.push_back(std::move(s3));

    // Negative control: equal order but different class profiles.
    CatalogEntry s4;
    s4.name = "s4";
    s4.description = "S4; cyclic four-group vs normal Klein four-group (not almost conjugate)";
    s4.degree = 4;
    s4.generators = {"(1 2)", "(1 2 3 4)"};
    s4.subgroups = {
        {"c4", {"(1 2 3 4)"}},
        {"v4", {"(1 2)(3 4)", "(1 3)(2 4)"}},
    };
    s4.h1_label = "c4";
    s4.h2_label = "v4";
    s4.default_gens = {"(1 2)", "(1 2 3)"};
    s4.expect_gassmann = false;
    s4.expect_conjugate = false;
    c.push_back(std::move(s4));

    return c;
  }();
  return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
  for (const auto& entry : builtin_catalog())
    if (entry.name == name) return &entry;
  return nullptr;
}

std::string group_json(const CatalogEntry& entry) {
  nlohmann::json j;
  j["name"] = entry.name;
  j["degree"] = entry.degree;
  j["generators"] = entry.generators;
  nlohmann::json subs = nlohmann::json::object();
  for (const auto& [label, gens] : entry.subgroups) subs[label] = gens;
  j["subgroups"] = subs;
  return j.dump(2) + "\n";
}

}  // namespace gassmann
