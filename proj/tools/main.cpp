#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "gassmann/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for almost-conjugate subgroup pairs, transplantation "
               "intertwiners, and isospectral Schreier graphs"};
  app.require_subcommand(1);

  gassmann::CliArgs args;
  std::uint64_t order_flag = 0;

  auto add_common = [&](CLI::App* cmd, bool needs_pair) {
    cmd->add_option("--group", args.group_file, "group input JSON file")->required();
    if (needs_pair) {
      cmd->add_option("--h1", args.h1_label, "first subgroup label")->required();
      cmd->add_option("--h2", args.h2_label, "second subgroup label")->required();
    }
    cmd->add_option("--seed", args.seed, "seed for randomized fallbacks");
    cmd->add_option("--cap", args.cap, "group enumeration cap");
    cmd->add_flag("--json-only", args.json_only, "suppress the human summary");
  };

  CLI::App* verify = app.add_subcommand("verify", "decide almost-conjugacy and nontriviality");
  add_common(verify, true);

  CLI::App* full = app.add_subcommand(
      "full", "certificate, intertwiner, quotient graphs, spectra, zeta, commutation");
  add_common(full, true);
  full->add_option("--gens", args.gens,
                   "comma-separated cycle expressions for the generating set "
                   "(auto-symmetrized; default: the group generators)");
  full->add_flag("--timings", args.timings, "include timings in the JSON report");

  CLI::App* search = app.add_subcommand("search", "find non-conjugate almost-conjugate pairs");
  search->add_option("--group", args.group_file, "group input JSON file")->required();
  search->add_option("--order", order_flag, "restrict to subgroups of this order");
  search->add_flag("--exhaustive", args.exhaustive,
                   "cover every subgroup (groups of order <= 48 only)");
  search->add_option("--seed", args.seed, "seed for randomized fallbacks");
  search->add_option("--cap", args.cap, "group enumeration cap");
  search->add_flag("--json-only", args.json_only, "suppress the human summary");

  CLI::App* export_dot = app.add_subcommand("export-dot", "write a Schreier quotient as DOT");
  export_dot->add_option("--group", args.group_file, "group input JSON file")->required();
  export_dot->add_option("--subgroup", args.subgroup_label, "subgroup label")->required();
  export_dot->add_option("--gens", args.gens, "generating set (auto-symmetrized)");
  export_dot->add_option("--out", args.out_path, "output path ('-' = stdout)");
  export_dot->add_option("--cap", args.cap, "group enumeration cap");

  CLI::App* catalog = app.add_subcommand("catalog", "list bundled example groups");
  catalog->add_option("--emit", args.emit, "write this entry as a group JSON file");
  catalog->add_option("--out", args.out_path, "output path ('-' = stdout)");

  CLI11_PARSE(app, argc, argv);

  if (search->parsed() && search->count("--order") > 0) args.order = order_flag;

  int code = gassmann::kExitError;
  if (verify->parsed()) code = gassmann::run_verify(args, std::cout, std::cerr);
  if (full->parsed()) code = gassmann::run_full(args, std::cout, std::cerr);
  if (search->parsed()) code = gassmann::run_search(args, std::cout, std::cerr);
  if (export_dot->parsed()) code = gassmann::run_export_dot(args, std::cout, std::cerr);
  if (catalog->parsed()) code = gassmann::run_catalog(args, std::cout, std::cerr);
  return code;
}
