#include "gassmann/cli.hpp"

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <ostream>

#include "gassmann/catalog.hpp"
#include "gassmann/errors.hpp"
#include "gassmann/gassmann.hpp"
#include "gassmann/gmodule.hpp"
#include "gassmann/graphs.hpp"
#include "gassmann/intertwiner.hpp"
#include "gassmann/report.hpp"

namespace gassmann {

namespace {

bool color_enabled(const std::ostream& err) {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  return &err == &std::cerr && isatty(fileno(stderr));
}

std::string tag(const std::ostream& err, bool good) {
  if (!color_enabled(err)) return good ? "[ok] " : "[!!] ";
  return good ? "\x1b[32m[ok]\x1b[0m " : "\x1b[31m[!!]\x1b[0m ";
}

struct LoadedPair {
  GroupFile file;
  GroupTable group;
  SubgroupRef h1, h2;
  ClassPartition classes;
};

SubgroupRef subgroup_from_labels(const GroupTable& g, const GroupFile& file,
                                 const std::string& label) {
  const auto* gens = file.find_subgroup(label);
  if (!gens) throw Error("subgroup label '" + label + "' not present in group file");
  std::vector<std::uint32_t> indices;
  for (const auto& p : *gens) indices.push_back(g.index_of(p));
  return subgroup_from_generators(g, indices);
}

LoadedPair load_pair(const CliArgs& args) {
  LoadedPair loaded;
  loaded.file = load_group_file(args.group_file);
  loaded.group = closure(loaded.file.generators, args.cap);
  loaded.h1 = subgroup_from_labels(loaded.group, loaded.file, args.h1_label);
  loaded.h2 = subgroup_from_labels(loaded.group, loaded.file, args.h2_label);
  loaded.classes = conjugacy_classes(loaded.group);
  return loaded;
}

std::vector<std::uint32_t> resolve_generating_set(const GroupTable& g, const GroupFile& file,
                                                  const std::string& gens_text) {
  std::vector<Permutation> perms =
      gens_text.empty() ? file.generators : parse_cycle_list(gens_text, file.degree);
  if (perms.empty()) throw Error("empty generating set");
  std::vector<std::uint32_t> indices;
  for (const auto& p : perms) indices.push_back(g.index_of(p));
  return symmetrize_generating_set(g, indices);
}

nlohmann::json command_echo(const char* sub, const CliArgs& args) {
  nlohmann::json j;
  j["subcommand"] = sub;
  j["group"] = args.group_file;
  if (!args.h1_label.empty()) j["h1"] = args.h1_label;
  if (!args.h2_label.empty()) j["h2"] = args.h2_label;
  if (!args.gens.empty()) j["gens"] = args.gens;
  if (args.order) j["order"] = *args.order;
  j["seed"] = args.seed;
  j["cap"] = args.cap;
  return j;
}

nlohmann::json group_summary(const GroupFile& file, const GroupTable& g) {
  return {{"name", file.name}, {"degree", file.degree}, {"order", g.size()}};
}

int error_exit(const char* sub, const CliArgs& args, const std::exception& e, std::ostream& out,
               std::ostream& err) {
  nlohmann::json j;
  j["schema_version"] = "1";
  j["command"] = command_echo(sub, args);
  j["error"] = e.what();
  out << j.dump(2) << "\n";
  err << tag(err, false) << "error: " << e.what() << "\n";
  return kExitError;
}

}  // namespace

int run_verify(const CliArgs& args, std::ostream& out, std::ostream& err) {
  try {
    LoadedPair loaded = load_pair(args);
    GassmannCertificate cert =
        gassmann_certificate(loaded.group, loaded.classes, loaded.h1, loaded.h2);

    nlohmann::json j;
    j["schema_version"] = "1";
    j["command"] = command_echo("verify", args);
    j["group"] = group_summary(loaded.file, loaded.group);
    j["certificate"] = certificate_json(loaded.group, loaded.classes, cert);
    out << j.dump(2) << "\n";

    if (!args.json_only) {
      err << tag(err, cert.is_gassmann) << loaded.file.name << ": |G|=" << cert.group_order
          << " |H1|=" << cert.order1 << " |H2|=" << cert.order2 << " index=" << cert.index
          << "\n";
      if (!cert.is_gassmann)
        err << tag(err, false) << "profiles differ: not almost conjugate\n";
      else if (cert.conjugacy_witness)
        err << tag(err, false) << "almost conjugate but conjugate (witness "
            << cycle_string(loaded.group.elements[*cert.conjugacy_witness]) << ")\n";
      else
        err << tag(err, true) << "almost conjugate, no conjugating element: verified\n";
    }
    return cert.is_gassmann && !cert.conjugacy_witness ? kExitVerified : kExitRefuted;
  } catch (const std::exception& e) {
    return error_exit("verify", args, e, out, err);
  }
}

int run_full(const CliArgs& args, std::ostream& out, std::ostream& err) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  auto ms_since = [&t0] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
  };

  nlohmann::json j;
  j["schema_version"] = "1";
  j["command"] = command_echo("full", args);
  try {
    LoadedPair loaded = load_pair(args);
    const GroupTable& g = loaded.group;
    j["group"] = group_summary(loaded.file, g);

    GassmannCertificate cert = gassmann_certificate(g, loaded.classes, loaded.h1, loaded.h2);
    j["certificate"] = certificate_json(g, loaded.classes, cert);
    if (!args.json_only)
      err << tag(err, cert.is_gassmann) << "certificate: is_gassmann="
          << (cert.is_gassmann ? "true" : "false") << " witness="
          << (cert.conjugacy_witness ? cycle_string(g.elements[*cert.conjugacy_witness])
                                     : std::string("none"))
          << "\n";

    CosetSpace x1 = left_cosets(g, loaded.h1);
    CosetSpace x2 = left_cosets(g, loaded.h2);
    IntertwinerBasis basis = intertwiner_basis(g, x1, x2);

    Intertwiner s;
    try {
      ScanOptions scan;
      scan.seed = args.seed;
      s = find_invertible_intertwiner(basis, scan);
    } catch (const NoInvertibleFound& e) {
      j["intertwiner"] = {{"error", e.what()}, {"proven_impossible", e.proven}};
      out << j.dump(2) << "\n";
      err << tag(err, false) << "intertwiner stage: " << e.what() << "\n";
      return kExitRefuted;
    }
    j["intertwiner"] = intertwiner_json(basis, s);
    if (!args.json_only)
      err << tag(err, true) << "intertwiner: " << basis.dcs.count()
          << " double cosets, det=" << s.det.str() << "\n";

    // transplantation on the permutation module Q[G/H1], with every class
    // sum as the test endomorphism
    {
      GModule module = GModule::on_cosets(g, x1);
      Transplantation t = transplantation(module, basis, s);
      nlohmann::json commutation = nlohmann::json::array();
      bool all_commute = true;
      for (const auto& cls : loaded.classes.classes) {
        bool holds = verify_commutation(module, class_sum(module, cls), t);
        all_commute = all_commute && holds;
        commutation.push_back(holds);
      }
      j["transplantation"] = {{"module", "permutation(G/H1)"},
                              {"dim", module.dim()},
                              {"invariant_dim", t.basis1.rank()},
                              {"rank", rank_rational(t.on_bases)},
                              {"class_sum_commutation", commutation}};
      if (!args.json_only)
        err << tag(err, all_commute) << "transplantation rank " << t.basis1.rank()
            << ", class-sum commutation "
            << (all_commute ? "holds exactly" : "FAILS") << "\n";
      if (!all_commute) {
        out << j.dump(2) << "\n";
        return kExitRefuted;
      }
    }

    std::vector<std::uint32_t> gens = resolve_generating_set(g, loaded.file, args.gens);
    if (subgroup_from_generators(g, gens).order() != g.size() && !args.json_only)
      err << tag(err, false)
          << "warning: generating set does not generate the group; quotients are "
             "disconnected\n";
    LabeledGraph q1 = schreier_quotient(g, loaded.h1, gens);
    LabeledGraph q2 = schreier_quotient(g, loaded.h2, gens);
    SpectralReport spectral = isospectral_verdict(q1, q2);
    j["spectral"] = spectral_json(spectral);
    ZetaReport zeta = zeta_verdict(q1, q2);
    j["zeta"] = zeta_json(zeta);
    bool commutes = verify_transplantation_on_graphs(g, basis, s, gens);
    j["commutation"] = {{"graph_laplacian", commutes}};
    {
      std::vector<std::string> gen_strings;
      for (auto e : gens) gen_strings.push_back(cycle_string(g.elements[e]));
      j["generating_set"] = gen_strings;
    }
    if (!args.json_only) {
      err << tag(err, spectral.equal) << "laplacian charpolys "
          << (spectral.equal ? "equal" : "DIFFER") << "\n";
      err << tag(err, zeta.equal) << "ihara zeta polynomials "
          << (zeta.equal ? "equal" : "DIFFER") << "\n";
      err << tag(err, commutes) << "S L1 = L2 S "
          << (commutes ? "holds exactly" : "FAILS") << "\n";
    }

    Mat<double> u = orthogonalize(s, 1e-13);
    Mat<double> gram = u.transpose() * u;
    for (std::size_t i = 0; i < gram.rows(); ++i) gram(i, i) -= 1.0;
    double orth_residual = max_abs(gram);
    double equivariance_residual = 0.0;
    for (auto e : g.generator_indices) {
      Mat<double> r1(basis.x1.count(), basis.x1.count());
      Mat<double> r2(basis.x2.count(), basis.x2.count());
      for (std::uint32_t c = 0; c < basis.x1.count(); ++c) r1(basis.x1.apply(e, c), c) = 1.0;
      for (std::uint32_t c = 0; c < basis.x2.count(); ++c) r2(basis.x2.apply(e, c), c) = 1.0;
      equivariance_residual = std::max(equivariance_residual, max_abs(u * r1 - r2 * u));
    }
    j["unitary"] = {{"orthogonality_residual", orth_residual},
                    {"equivariance_residual", equivariance_residual}};
    if (!args.json_only)
      err << tag(err, true) << "unitary refinement residuals: orth=" << orth_residual
          << " equivariance=" << equivariance_residual << "\n";

    bool all = cert.char_check && spectral.equal && zeta.equal && commutes;
    if (args.timings) j["timings_ms"] = {{"total", ms_since()}};
    out << j.dump(2) << "\n";
    if (!args.json_only)
      err << tag(err, all) << (all ? "all verdicts hold" : "pipeline refuted") << " ("
          << ms_since() << " ms)\n";
    return all ? kExitVerified : kExitRefuted;
  } catch (const std::exception& e) {
    return error_exit("full", args, e, out, err);
  }
}

int run_search(const CliArgs& args, std::ostream& out, std::ostream& err) {
  try {
    GroupFile file = load_group_file(args.group_file);
    GroupTable g = closure(file.generators, args.cap);
    ClassPartition classes = conjugacy_classes(g);
    SearchOptions options;
    options.exhaustive_small = args.exhaustive;
    std::vector<SearchHit> hits = search_pairs(g, classes, args.order, options);

    nlohmann::json j;
    j["schema_version"] = "1";
    j["command"] = command_echo("search", args);
    j["group"] = group_summary(file, g);
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& hit : hits) {
      auto members = [&](const SubgroupRef& h) {
        std::vector<std::string> out_members;
        for (auto m : h.member_indices) out_members.push_back(cycle_string(g.elements[m]));
        return out_members;
      };
      pairs.push_back({{"order", hit.h1.order()},
                       {"h1_members", members(hit.h1)},
                       {"h2_members", members(hit.h2)},
                       {"certificate", certificate_json(g, classes, hit.cert)}});
    }
    j["pairs"] = pairs;
    out << j.dump(2) << "\n";
    err << tag(err, !hits.empty()) << "found " << hits.size()
        << " non-conjugate almost-conjugate pair(s)\n";
    return hits.empty() ? kExitRefuted : kExitVerified;
  } catch (const std::exception& e) {
    return error_exit("search", args, e, out, err);
  }
}

int run_export_dot(const CliArgs& args, std::ostream& out, std::ostream& err) {
  try {
    GroupFile file = load_group_file(args.group_file);
    GroupTable g = closure(file.generators, args.cap);
    SubgroupRef h = subgroup_from_labels(g, file, args.subgroup_label);
    std::vector<std::uint32_t> gens = resolve_generating_set(g, file, args.gens);
    if (subgroup_from_generators(g, gens).order() != g.size())
      err << tag(err, false)
          << "warning: generating set does not generate the group; the quotient is "
             "disconnected\n";
    LabeledGraph quotient = schreier_quotient(g, h, gens);
    std::string dot = to_dot(quotient, file.name + "_" + args.subgroup_label);
    if (args.out_path.empty() || args.out_path == "-") {
      out << dot;
    } else {
      std::ofstream f(args.out_path);
      if (!f) throw Error("cannot open output file: " + args.out_path);
      f << dot;
      if (!f.good()) throw Error("write failed: " + args.out_path);
    }
    err << tag(err, true) << "schreier quotient: " << quotient.n << " vertices, "
        << quotient.generator_count << "-regular\n";
    return kExitVerified;
  } catch (const std::exception& e) {
    return error_exit("export-dot", args, e, out, err);
  }
}

int run_catalog(const CliArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (!args.emit.empty()) {
      const CatalogEntry* entry = find_catalog_entry(args.emit);
      if (!entry) throw Error("no catalog entry named '" + args.emit + "'");
      std::string text = group_json(*entry);
      if (args.out_path.empty() || args.out_path == "-") {
        out << text;
      } else {
        std::ofstream f(args.out_path);
        if (!f) throw Error("cannot open output file: " + args.out_path);
        f << text;
      }
      return kExitVerified;
    }
    nlohmann::json j = nlohmann::json::array();
    for (const auto& entry : builtin_catalog()) {
      j.push_back({{"name", entry.name},
                   {"description", entry.description},
                   {"degree", entry.degree},
                   {"h1", entry.h1_label},
                   {"h2", entry.h2_label},
                   {"default_gens", entry.default_gens},
                   {"expect_gassmann", entry.expect_gassmann},
                   {"expect_conjugate", entry.expect_conjugate}});
      err << "  " << entry.name << ": " << entry.description << "\n";
    }
    out << j.dump(2) << "\n";
    return kExitVerified;
  } catch (const std::exception& e) {
    return error_exit("catalog", args, e, out, err);
  }
}

}  // namespace gassmann
