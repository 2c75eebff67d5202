#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "gassmann/group.hpp"

namespace gassmann {

// Exit codes shared by all subcommands: 0 verified, 1 refuted, 2 error.
inline constexpr int kExitVerified = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitError = 2;

struct CliArgs {
  std::string group_file;
  std::string h1_label, h2_label;
  std::string gens;           // comma-separated cycle expressions; "" = group generators
  std::string subgroup_label; // export-dot
  std::string out_path;       // export-dot / catalog --emit
  std::string emit;           // catalog entry to emit as a group file
  std::optional<std::uint64_t> order;  // search filter
  std::uint64_t seed = 1;
  std::uint32_t cap = kDefaultGroupCap;
  bool json_only = false;
  bool timings = false;
  bool exhaustive = false;  // search: lift the generator-subset bound for small groups
};

// Machine JSON goes to `out`, the human summary to `err`.
int run_verify(const CliArgs& args, std::ostream& out, std::ostream& err);
int run_full(const CliArgs& args, std::ostream& out, std::ostream& err);
int run_search(const CliArgs& args, std::ostream& out, std::ostream& err);
int run_export_dot(const CliArgs& args, std::ostream& out, std::ostream& err);
int run_catalog(const CliArgs& args, std::ostream& out, std::ostream& err);

}  // namespace gassmann
