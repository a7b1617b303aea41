// Command-line front end: element queries, degree/neighbor computations,
// explicit graph builds and exports, and the verification suite.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "hquat/adjacency.hpp"
#include "hquat/coloring.hpp"
#include "hquat/families.hpp"
#include "hquat/graph.hpp"
#include "hquat/hamiltonian.hpp"
#include "hquat/quat.hpp"
#include "hquat/snf.hpp"
#include "hquat/verify.hpp"

namespace {

constexpr int kDefaultExponentCap = 8;

hquat::Modulus checked_modulus(int n, bool force) {
  if (n > kDefaultExponentCap && !force)
    throw CLI::ValidationError("--n", "modulus cap exceeded (n <= 8 by default, --force allows up to 15)");
  return hquat::Modulus(n);  // throws beyond the hard cap of 15
}

hquat::Quat parse_quat(const std::vector<std::int64_t>& comps, hquat::Modulus m) {
  return hquat::Quat(comps[0], comps[1], comps[2], comps[3], m);
}

int cmd_classify(const std::vector<std::int64_t>& comps, int n, bool force) {
  hquat::Modulus m = checked_modulus(n, force);
  hquat::Quat q = parse_quat(comps, m);
  std::cout << q.str() << " (mod 2^" << n << "): " << hquat::to_string(hquat::classify(q))
            << (hquat::is_vertex(q) ? ", vertex" : ", not a vertex") << "\n";
  return 0;
}

int cmd_neighbors(const std::vector<std::int64_t>& comps, int n, bool force, bool count_only) {
  hquat::Modulus m = checked_modulus(n, force);
  hquat::Quat a = parse_quat(comps, m);
  if (!hquat::is_vertex(a)) {
    std::cerr << "error: " << a.str() << " is not a vertex (classified as "
              << hquat::to_string(hquat::classify(a)) << ")\n";
    return 2;
  }
  std::uint64_t formula = hquat::degree_formula(a);
  if (count_only) {
    std::cout << formula << "\n";
    return 0;
  }
  if (n > 6) {
    std::cerr << "error: neighbor listing capped at n <= 6; use --count-only\n";
    return 2;
  }
  std::uint64_t streamed = 0;
  hquat::for_each_vertex(m, [&](const hquat::Quat& b) {
    if (b == a) return;
    if (hquat::adjacent_fast(a, b)) {
      std::cout << b.str() << "\n";
      ++streamed;
    }
  });
  if (streamed != formula) {
    std::cerr << "internal error: streamed " << streamed << " neighbors but formula gives " << formula << "\n";
    return 1;
  }
  std::cout << "count " << streamed << "\n";
  return 0;
}

int cmd_degree(const std::vector<std::int64_t>& comps, int n, bool force) {
  hquat::Modulus m = checked_modulus(n, force);
  hquat::Quat a = parse_quat(comps, m);
  if (!hquat::is_vertex(a)) {
    std::cerr << "error: " << a.str() << " is not a vertex (classified as "
              << hquat::to_string(hquat::classify(a)) << ")\n";
    return 2;
  }
  std::cout << hquat::degree_formula(a) << "\n";
  return 0;
}

int cmd_stats(int n, bool force) {
  hquat::Modulus m = checked_modulus(n, force);
  if (n > 6) {
    std::cerr << "error: stats formula scan capped at n <= 6\n";
    return 2;
  }
  std::map<std::uint64_t, std::uint64_t> histogram;
  hquat::for_each_vertex(m, [&](const hquat::Quat& q) { ++histogram[hquat::degree_formula(q)]; });
  std::cout << "degree,multiplicity\n";
  for (auto [deg, count] : histogram) std::cout << deg << "," << count << "\n";
  std::uint64_t delta = (std::uint64_t{1} << (4 * n - 1)) - (n == 1 ? 1 : 2);
  std::uint64_t Delta = (std::uint64_t{1} << (4 * n)) - (n == 1 ? 3 : 4);
  std::uint64_t mn = histogram.begin()->first;
  std::uint64_t mx = histogram.rbegin()->first;
  std::cout << "min " << mn << " (expected " << delta << ")\n";
  std::cout << "max " << mx << " (expected " << Delta << ")\n";
  return (mn == delta && mx == Delta) ? 0 : 1;
}

int snapshot_cap_check(int n, bool force) {
  if (n > hquat::GraphSnapshot::kMaxExplicitExponent) {
    std::cerr << "error: explicit graphs are capped at n = 4\n";
    return 2;
  }
  if (n > 3 && !force) {
    std::cerr << "error: the n = 4 snapshot needs ~512 MiB and several minutes; pass --force\n";
    return 2;
  }
  return 0;
}

int cmd_build(int n, int threads, bool force) {
  if (int rc = snapshot_cap_check(n, force)) return rc;
  hquat::Modulus m(n);
  hquat::GraphSnapshot g = hquat::GraphSnapshot::build(m, threads);
  hquat::DegreeExtremes e = hquat::degree_extremes(g);
  std::cout << "vertices " << g.vertex_count() << "\n";
  std::cout << "edges " << g.edge_count() << "\n";
  std::cout << "min-degree " << e.min_degree << "\n";
  std::cout << "max-degree " << e.max_degree << "\n";
  if (n <= 3) {
    hquat::DiameterRadius dr = hquat::diameter_radius(g, threads);
    std::cout << "connected " << (dr.connected ? "yes" : "no") << "\n";
    std::cout << "diameter " << dr.diameter << "\n";
    std::cout << "radius " << dr.radius << "\n";
    std::cout << "girth " << hquat::girth(g).girth << "\n";
  }
  return 0;
}

int cmd_export(int n, int threads, bool force, const std::string& format, const std::string& kind,
               const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return 2;
  }
  if (kind == "families") {
    hquat::Modulus m = checked_modulus(n, force);
    if (n > 5) {
      std::cerr << "error: family export capped at n <= 5\n";
      return 2;
    }
    hquat::write_families_csv(m, out);
    return 0;
  }
  if (int rc = snapshot_cap_check(n, force)) return rc;
  hquat::GraphSnapshot g = hquat::GraphSnapshot::build(hquat::Modulus(n), threads);
  if (format == "dot")
    hquat::write_dot(g, out);
  else
    hquat::write_edge_csv(g, out);
  return 0;
}

int cmd_verify(const hquat::RunConfig& cfg, const std::string& json_path) {
  hquat::VerificationReport rep = hquat::run_verification(cfg);
  std::cout << rep.render_table();
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << json_path << " for writing\n";
      return 2;
    }
    out << rep.to_json().dump(2) << "\n";
  }
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quaternion non-zero-divisor graph toolkit over Z_{2^n}"};
  app.require_subcommand(1);

  std::vector<std::int64_t> comps;
  int n = 2;
  int threads = hquat::default_thread_count();
  bool force = false;
  bool count_only = false;
  std::string format = "dot";
  std::string kind = "graph";
  std::string path;
  std::string json_path;
  hquat::RunConfig cfg;

  auto add_quat = [&](CLI::App* cmd) {
    cmd->add_option("components", comps, "quaternion components a1 a2 a3 a4")->expected(4)->required();
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "modulus exponent (modulus is 2^n)")->required();
    cmd->add_flag("--force", force, "lift the default resource caps");
  };

  CLI::App* c_classify = app.add_subcommand("classify", "classify an element (zero / unit / zero-divisor)");
  add_quat(c_classify);
  add_common(c_classify);

  CLI::App* c_neighbors = app.add_subcommand("neighbors", "list (or count) the neighbors of a vertex");
  add_quat(c_neighbors);
  add_common(c_neighbors);
  c_neighbors->add_flag("--count-only", count_only, "print only the neighbor count");

  CLI::App* c_degree = app.add_subcommand("degree", "closed-form degree of a vertex");
  add_quat(c_degree);
  add_common(c_degree);

  CLI::App* c_stats = app.add_subcommand("stats", "degree histogram over all vertices (formula mode)");
  add_common(c_stats);

  CLI::App* c_build = app.add_subcommand("build", "build the explicit graph and print its invariants");
  add_common(c_build);
  c_build->add_option("--threads", threads, "worker threads");

  CLI::App* c_export = app.add_subcommand("export", "write the graph (dot/csv) or family tables (csv)");
  add_common(c_export);
  c_export->add_option("--format", format, "dot or csv")->check(CLI::IsMember({"dot", "csv"}));
  c_export->add_option("--kind", kind, "graph or families")->check(CLI::IsMember({"graph", "families"}));
  c_export->add_option("--out", path, "output file")->required();
  c_export->add_option("--threads", threads, "worker threads");

  CLI::App* c_verify = app.add_subcommand("verify", "run the verification suites and print a report");
  c_verify->add_option("--n", cfg.n, "modulus exponent")->required();
  c_verify->add_option("--suite", cfg.suite, "all|ring|adjacency|snf|degree|families|graph");
  c_verify->add_option("--seed", cfg.seed, "seed for sampled checks");
  c_verify->add_option("--threads", cfg.threads, "worker threads");
  c_verify->add_option("--sample-pairs", cfg.sample_pairs, "sampled pair count for large n");
  c_verify->add_option("--sample-vertices", cfg.sample_vertices, "sampled vertex count for large n");
  c_verify->add_option("--json", json_path, "also write the JSON report here");
  c_verify->add_flag("--force", cfg.force, "allow the n = 4 explicit snapshot");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_classify->parsed()) return cmd_classify(comps, n, force);
    if (c_neighbors->parsed()) return cmd_neighbors(comps, n, force, count_only);
    if (c_degree->parsed()) return cmd_degree(comps, n, force);
    if (c_stats->parsed()) return cmd_stats(n, force);
    if (c_build->parsed()) return cmd_build(n, threads, force);
    if (c_export->parsed()) return cmd_export(n, threads, force, format, kind, path);
    if (c_verify->parsed()) {
      if (cfg.n > kDefaultExponentCap && !cfg.force) {
        std::cerr << "error: modulus cap exceeded (n <= 8 by default)\n";
        return 2;
      }
      return cmd_verify(cfg, json_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
