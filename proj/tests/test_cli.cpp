#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gassmann/catalog.hpp"
#include "gassmann/errors.hpp"
#include "gassmann/cli.hpp"
#include "gassmann/report.hpp"

using namespace gassmann;

namespace {

// write a catalog entry's group JSON to a temp file, removed on destruction
struct TempGroupFile {
  std::string path;
  explicit TempGroupFile(const char* name) {
    const CatalogEntry* entry = find_catalog_entry(name);
    REQUIRE(entry != nullptr);
    path = std::string("/tmp/gassmann_test_") + name + ".json";
    std::ofstream f(path);
    f << group_json(*entry);
  }
  ~TempGroupFile() { std::remove(path.c_str()); }
};

struct RunResult {
  int code;
  std::string out, err;
};

template <typename F>
RunResult run(F&& f, const CliArgs& args) {
  std::ostringstream out, err;
  int code = f(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("group file parsing errors") {
  CHECK_THROWS_AS(parse_group_file("not json"), Error);
  CHECK_THROWS_AS(parse_group_file("{}"), Error);
  CHECK_THROWS_AS(parse_group_file(R"x({"degree": 3, "generators": []})x"), Error);
  CHECK_THROWS_AS(parse_group_file(R"x({"degree": 3, "generators": ["(1 4)"]})x"), Error);
  GroupFile file = parse_group_file(
      R"x({"name": "x", "degree": 3, "generators": ["(1 2)"], "subgroups": {"a": ["(1 2)"]}})x");
  CHECK(file.name == "x");
  CHECK(file.generators.size() == 1);
  REQUIRE(file.find_subgroup("a") != nullptr);
  CHECK(file.find_subgroup("b") == nullptr);
}

TEST_CASE("catalog entries parse and reproduce their expected flags") {
  for (const auto& entry : builtin_catalog()) {
    GroupFile file = parse_group_file(group_json(entry));
    CHECK(file.name == entry.name);
    CHECK(file.degree == entry.degree);
    CHECK(file.subgroups.size() == entry.subgroups.size());
  }
}

TEST_CASE("cmd_verify on the catalog") {
  struct Expect {
    const char* name;
    int code;
  };
  // gl32/aff8 verified; s3 conjugate -> refuted; s4 profiles differ -> refuted
  for (Expect e : {Expect{"gl32", 0}, Expect{"aff8", 0}, Expect{"s3", 1}, Expect{"s4", 1}}) {
    TempGroupFile file(e.name);
    const CatalogEntry* entry = find_catalog_entry(e.name);
    CliArgs args;
    args.group_file = file.path;
    args.h1_label = entry->h1_label;
    args.h2_label = entry->h2_label;
    RunResult r = run(run_verify, args);
    CHECK(r.code == e.code);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["schema_version"] == "1");
    CHECK(j["certificate"]["is_gassmann"] == entry->expect_gassmann);
    CHECK(j["certificate"]["conjugacy_witness"].is_null() != entry->expect_conjugate);
  }
}

TEST_CASE("cmd_verify distinguishes refutation reasons") {
  TempGroupFile s3("s3");
  const CatalogEntry* entry = find_catalog_entry("s3");
  CliArgs args;
  args.group_file = s3.path;
  args.h1_label = entry->h1_label;
  args.h2_label = entry->h2_label;
  RunResult r = run(run_verify, args);
  CHECK(r.code == kExitRefuted);
  CHECK(r.err.find("conjugate") != std::string::npos);

  TempGroupFile s4("s4");
  const CatalogEntry* neg = find_catalog_entry("s4");
  args.group_file = s4.path;
  args.h1_label = neg->h1_label;
  args.h2_label = neg->h2_label;
  r = run(run_verify, args);
  CHECK(r.code == kExitRefuted);
  CHECK(r.err.find("profiles differ") != std::string::npos);
}

TEST_CASE("cmd_verify error paths exit 2") {
  CliArgs args;
  args.group_file = "/nonexistent/nope.json";
  args.h1_label = "a";
  args.h2_label = "b";
  CHECK(run(run_verify, args).code == kExitError);

  TempGroupFile file("s3");
  args.group_file = file.path;
  args.h1_label = "missing_label";
  args.h2_label = "t13";
  RunResult r = run(run_verify, args);
  CHECK(r.code == kExitError);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.contains("error"));
}

TEST_CASE("cmd_full on positive catalog entries: all verdicts hold") {
  for (const char* name : {"gl32", "aff8"}) {
    TempGroupFile file(name);
    const CatalogEntry* entry = find_catalog_entry(name);
    CliArgs args;
    args.group_file = file.path;
    args.h1_label = entry->h1_label;
    args.h2_label = entry->h2_label;
    std::string gens;
    for (const auto& g : entry->default_gens) {
      if (!gens.empty()) gens += ",";
      gens += g;
    }
    args.gens = gens;
    RunResult r = run(run_full, args);
    CHECK(r.code == kExitVerified);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["certificate"]["is_gassmann"] == true);
    CHECK(j["intertwiner"]["det"] != "0");
    CHECK(j["spectral"]["equal"] == true);
    CHECK(j["zeta"]["equal"] == true);
    CHECK(j["commutation"]["graph_laplacian"] == true);
    CHECK(j["unitary"]["orthogonality_residual"].get<double>() < 1e-12);
    CHECK(j["unitary"]["equivariance_residual"].get<double>() < 1e-11);
    CHECK(!j.contains("timings_ms"));
  }
}

TEST_CASE("cmd_full stops at the intertwiner stage for the S4 pair") {
  TempGroupFile file("s4");
  const CatalogEntry* entry = find_catalog_entry("s4");
  CliArgs args;
  args.group_file = file.path;
  args.h1_label = entry->h1_label;
  args.h2_label = entry->h2_label;
  RunResult r = run(run_full, args);
  CHECK(r.code == kExitRefuted);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.contains("intertwiner"));
  CHECK(j["intertwiner"].contains("error"));
  CHECK(j["intertwiner"]["proven_impossible"] == true);
  CHECK(!j.contains("spectral"));
}

TEST_CASE("cmd_full --timings adds the run-dependent block") {
  TempGroupFile file("s3");
  const CatalogEntry* entry = find_catalog_entry("s3");
  CliArgs args;
  args.group_file = file.path;
  args.h1_label = entry->h1_label;
  args.h2_label = entry->h2_label;
  args.timings = true;
  RunResult r = run(run_full, args);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.contains("timings_ms"));
}

TEST_CASE("cmd_full reports are byte-identical across runs") {
  TempGroupFile file("gl32");
  const CatalogEntry* entry = find_catalog_entry("gl32");
  CliArgs args;
  args.group_file = file.path;
  args.h1_label = entry->h1_label;
  args.h2_label = entry->h2_label;
  args.seed = 7;
  RunResult a = run(run_full, args);
  RunResult b = run(run_full, args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
}

TEST_CASE("cmd_search on catalog groups") {
  TempGroupFile aff("aff8");
  CliArgs args;
  args.group_file = aff.path;
  args.order = 4;
  RunResult r = run(run_search, args);
  CHECK(r.code == kExitVerified);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["pairs"].size() >= 1);

  TempGroupFile s3("s3");
  args.group_file = s3.path;
  args.order.reset();
  r = run(run_search, args);
  CHECK(r.code == kExitRefuted);
  nlohmann::json empty = nlohmann::json::parse(r.out);
  CHECK(empty["pairs"].empty());

  // cap exceeded -> error
  args.group_file = aff.path;
  args.cap = 5;
  CHECK(run(run_search, args).code == kExitError);
}

TEST_CASE("cmd_export_dot writes deterministic DOT") {
  TempGroupFile file("gl32");
  const CatalogEntry* entry = find_catalog_entry("gl32");
  CliArgs args;
  args.group_file = file.path;
  args.subgroup_label = entry->h1_label;
  std::string gens;
  for (const auto& g : entry->default_gens) {
    if (!gens.empty()) gens += ",";
    gens += g;
  }
  args.gens = gens;
  args.out_path = "/tmp/gassmann_test_quotient.dot";
  RunResult r = run(run_export_dot, args);
  CHECK(r.code == kExitVerified);
  std::ifstream in(args.out_path);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string dot = buffer.str();
  // 7 nodes and one record per adjacency-distinct edge
  std::size_t nodes = 0, edges = 0, pos = 0;
  while ((pos = dot.find(";\n", pos)) != std::string::npos) {
    ++pos;
    ++nodes;
  }
  pos = 0;
  while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
    ++edges;
    pos += 4;
  }
  CHECK(nodes - edges == 7);  // node statements
  // one record per distinct pair or loop, derived from the adjacency matrix
  {
    GroupFile parsed = load_group_file(file.path);
    GroupTable g = closure(parsed.generators);
    SubgroupRef h = subgroup_from_generators(
        g, {g.index_of(parsed.find_subgroup(entry->h1_label)->at(0)),
            g.index_of(parsed.find_subgroup(entry->h1_label)->at(1))});
    std::vector<std::uint32_t> raw;
    for (const auto& text : entry->default_gens)
      raw.push_back(g.index_of(parse_cycles(text, entry->degree)));
    LabeledGraph q = schreier_quotient(g, h, symmetrize_generating_set(g, raw));
    std::size_t expected = 0;
    for (std::uint32_t i = 0; i < q.n; ++i)
      for (std::uint32_t j = i; j < q.n; ++j)
        if (q.adj(i, j) > 0) ++expected;
    CHECK(edges == expected);
    CHECK(expected == 12);  // frozen: 11 simple pairs + 1 loop for this S
  }
  std::remove(args.out_path.c_str());

  args.out_path = "/nonexistent_dir/x.dot";
  CHECK(run(run_export_dot, args).code == kExitError);
}

TEST_CASE("cmd_catalog lists entries and emits group files") {
  CliArgs args;
  RunResult r = run(run_catalog, args);
  CHECK(r.code == kExitVerified);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.size() == builtin_catalog().size());

  args.emit = "gl32";
  RunResult emitted = run(run_catalog, args);
  CHECK(emitted.code == kExitVerified);
  GroupFile file = parse_group_file(emitted.out);
  CHECK(file.name == "gl32");

  args.emit = "nope";
  CHECK(run(run_catalog, args).code == kExitError);
}
