// Acceptance suite: every project-level criterion, one pass/fail line each.
//
// Each criterion is checked exactly as documented, at the stated scales and
// tolerances. Checks that the underlying computation refutes are left to
// fail and print their counterexamples; the verification reports carry the
// same findings as discrepancy-logged claims.

#include <chrono>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hquat/coloring.hpp"
#include "hquat/graph.hpp"
#include "hquat/hamiltonian.hpp"
#include "hquat/maxflow.hpp"
#include "hquat/verify.hpp"

using namespace hquat;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    notes.push_back(std::string(ok ? "ok: " : "FAIL: ") + what);
    pass = pass && ok;
  }
  void note(const std::string& what) { notes.push_back("   " + what); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. element counts: units = zero-divisors = 2^{4n-1} for n = 1..4, < 5 s at n = 4
Outcome criterion_element_counts() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    ElementCounts c = count_elements(Modulus(n));
    double secs = seconds_since(t0);
    std::uint64_t want = std::uint64_t{1} << (4 * n - 1);
    o.check(c.units == want && c.zero_divisors == want,
            "n=" + std::to_string(n) + ": units=" + std::to_string(c.units) +
                " zero_divisors=" + std::to_string(c.zero_divisors) + " (expected " + std::to_string(want) + ")");
    if (n == 4) o.check(secs < 5.0, "n=4 classification in " + std::to_string(secs) + " s (< 5 s)");
  }
  return o;
}

// 2. vertex counts 14 / 253 / 4093 / 65533
Outcome criterion_vertex_counts() {
  Outcome o;
  const std::uint64_t want[] = {0, 14, 253, 4093, 65533};
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t got = 0;
    for_each_vertex(Modulus(n), [&](const Quat&) { ++got; });
    o.check(got == want[n] && got == vertex_count_closed_form(Modulus(n)),
            "n=" + std::to_string(n) + ": " + std::to_string(got) + " vertices");
  }
  return o;
}

// 3. adjacency criterion == left-product test: exhaustive n = 1..3, sampled 10^6 at n = 4
Outcome criterion_adjacency() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    RunConfig cfg;
    cfg.n = n;
    Verifier v(cfg);
    ClaimResult c = v.claim_fast_vs_left();
    o.check(c.status == "pass", "n=" + std::to_string(n) + " exhaustive: " + c.computed);
    if (n == 3) o.check(seconds_since(t0) < 30.0, "n=3 sweep under 30 s");
  }
  RunConfig cfg;
  cfg.n = 4;
  cfg.seed = 0;
  cfg.sample_pairs = 1'000'000;
  Verifier v(cfg);
  ClaimResult c = v.claim_fast_vs_left();
  o.check(c.status == "pass", "n=4 sampled: " + c.computed);
  return o;
}

// 4. degree formula == brute-force left-neighbor count; witnesses 7 and 237
Outcome criterion_degree_formula() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    RunConfig cfg;
    cfg.n = n;
    Verifier v(cfg);
    ClaimResult c = v.claim_degree_formula_vs_sweep();
    o.check(c.status == "pass", "n=" + std::to_string(n) + " exhaustive: " + c.computed);
  }
  RunConfig cfg;
  cfg.n = 4;
  cfg.seed = 0;
  cfg.sample_vertices = 100;
  Verifier v(cfg);
  ClaimResult c = v.claim_degree_formula_vs_sweep();
  o.check(c.status == "pass", "n=4 sampled: " + c.computed);
  o.check(degree_formula(Quat(1, 1, 1, 1, Modulus(1))) == 7, "deg(1,1,1,1) = 7 at n=1");
  o.check(degree_formula(Quat(1, 1, 1, 1, Modulus(2))) == 237, "deg(1,1,1,1) = 237 at n=2");
  return o;
}

// 5. SNF properties on 1000 random matrices + the fixed diag(1,2,2,4)
Outcome criterion_snf() {
  Outcome o;
  RunConfig cfg;
  cfg.n = 8;  // entry range [-2^8, 2^8]
  cfg.seed = 0;
  Verifier v(cfg);
  ClaimResult a = v.claim_snf_decomposition();
  o.check(a.status == "pass", a.computed + " (decomposition, chain, unimodular)");
  ClaimResult b = v.claim_snf_determinant();
  o.check(b.status == "pass", b.computed + " (invariant-factor determinant identity)");
  for (int n = 2; n <= 4; ++n) {
    SnfDecomposition d = smith_normal_form(left_mul_matrix(Quat(1, 1, 1, 1, Modulus(n))));
    o.check(d.diag.d == std::array<BigInt, 4>{1, 2, 2, 4},
            "all-ones matrix at n=" + std::to_string(n) + " lifts has SNF diag(1,2,2,4)");
  }
  return o;
}

// 6. diameter 2, radius 1, girth 3, degree extremes, n = 1..3, < 60 s at n = 3
Outcome criterion_graph_invariants() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    GraphSnapshot g = GraphSnapshot::build(Modulus(n));
    DiameterRadius dr = diameter_radius(g);
    GirthResult gr = girth(g);
    DegreeExtremes de = degree_extremes(g);
    std::uint64_t delta = (std::uint64_t{1} << (4 * n - 1)) - (n == 1 ? 1 : 2);
    std::uint64_t Delta = (std::uint64_t{1} << (4 * n)) - (n == 1 ? 3 : 4);
    o.check(dr.connected && dr.diameter == 2 && dr.radius == 1,
            "n=" + std::to_string(n) + ": connected, diameter=" + std::to_string(dr.diameter) +
                ", radius=" + std::to_string(dr.radius));
    o.check(gr.girth == 3, "n=" + std::to_string(n) + ": girth=" + std::to_string(gr.girth));
    o.check(de.min_degree == delta && de.max_degree == Delta,
            "n=" + std::to_string(n) + ": min/max degree " + std::to_string(de.min_degree) + "/" +
                std::to_string(de.max_degree));
    if (n == 3) o.check(seconds_since(t0) < 60.0, "n=3 invariant sweep under 60 s");
  }
  return o;
}

// 7. non-Eulerian with the all-ones odd-degree witness, n = 1..3
Outcome criterion_eulerian() {
  Outcome o;
  const std::uint64_t want[] = {0, 7, 237, 4077};
  for (int n = 1; n <= 3; ++n) {
    GraphSnapshot g = GraphSnapshot::build(Modulus(n));
    EulerianCheck e = eulerian_check(g);
    bool ok = !e.eulerian && e.odd_degree_witness >= 0;
    std::uint64_t deg = 0;
    if (ok) {
      std::size_t idx = static_cast<std::size_t>(e.odd_degree_witness);
      deg = g.degree(idx);
      ok = g.vertex(idx) == Quat(1, 1, 1, 1, Modulus(n)) && deg == want[n] && (deg & 1);
    }
    o.check(ok, "n=" + std::to_string(n) + ": witness (1,1,1,1) degree " + std::to_string(deg));
  }
  return o;
}

// 8. constructed Hamiltonian cycle validates, n = 1..3
Outcome criterion_hamiltonian() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    GraphSnapshot g = GraphSnapshot::build(Modulus(n));
    HamiltonianCycle h = hamiltonian_cycle(g);
    bool valid = !find_cycle_defect(g, h.order).has_value();
    o.check(valid, "n=" + std::to_string(n) + ": " + std::to_string(h.order.size()) + "-cycle, " +
                       (h.construction_followed ? "literal construction"
                                                : std::to_string(h.repairs) + " rotation repairs"));
  }
  return o;
}

// 9. K5 certificate, n = 1..3
Outcome criterion_k5() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    GraphSnapshot g = GraphSnapshot::build(Modulus(n));
    try {
      auto k5 = find_k5(g);
      o.check(true, "n=" + std::to_string(n) + ": verified K5 on " + g.vertex(k5[0]).str() + " .. " +
                        g.vertex(k5[4]).str());
    } catch (const std::exception& e) {
      o.check(false, "n=" + std::to_string(n) + ": " + e.what());
    }
  }
  return o;
}

// 10. connectivity: exact kappa = lambda = 7 at n = 1; bound-chain at n = 2, 3
Outcome criterion_connectivity() {
  Outcome o;
  GraphSnapshot g = GraphSnapshot::build(Modulus(1));
  int kappa = vertex_connectivity_exact(g);
  int lambda = edge_connectivity_exact(g);
  std::uint64_t delta = degree_extremes(g).min_degree;
  o.check(kappa == 7 && lambda == 7, "n=1 exact: kappa=" + std::to_string(kappa) + " lambda=" + std::to_string(lambda));
  o.check(kappa <= lambda && static_cast<std::uint64_t>(lambda) <= delta, "n=1 chain kappa <= lambda <= delta");
  for (int n = 2; n <= 3; ++n) {
    RunConfig cfg;
    cfg.n = n;
    Verifier v(cfg);
    ClaimResult c = v.claim_connectivity();
    o.check(c.status == "bound-consistent", "n=" + std::to_string(n) + ": " + c.computed);
  }
  return o;
}

// 11. clique family: stated sizes with all pairwise adjacencies verified.
// The closed-form size at n = 3 is 1800 (the criterion's literal `920`
// contradicts the same formula it cites; see the project notes).
Outcome criterion_clique_family() {
  Outcome o;
  const std::uint64_t want_size[] = {0, 6, 112, 1800};
  for (int n = 1; n <= 3; ++n) {
    Modulus m(n);
    std::vector<Quat> fam = clique_family(m);
    o.check(fam.size() == want_size[n] && fam.size() == clique_family_size_closed_form(m),
            "n=" + std::to_string(n) + ": family size " + std::to_string(fam.size()));
    GraphSnapshot g = GraphSnapshot::build(m);
    std::vector<std::size_t> members;
    for (const Quat& q : fam) members.push_back(static_cast<std::size_t>(g.index_of(q)));
    CliqueCheck check = clique_violations(g, members);
    std::string detail = "n=" + std::to_string(n) + ": pairwise adjacency, " +
                         std::to_string(check.violations) + " non-adjacent pairs";
    if (!check.examples.empty())
      detail += " (e.g. " + g.vertex(check.examples[0].first).str() + " ~ " +
                g.vertex(check.examples[0].second).str() + ")";
    o.check(check.violations == 0, detail);
  }
  return o;
}

// 12. clique/chromatic: exact omega = chi = 13 and perfection at n = 1;
// validated cliques of 238 / 3846 and greedy <= 2^{4n}-4 at n = 2, 3
Outcome criterion_clique_chromatic() {
  Outcome o;
  {
    auto t0 = std::chrono::steady_clock::now();
    GraphSnapshot g = GraphSnapshot::build(Modulus(1));
    ExactSmallGraph exact(g);
    int omega = exact.omega_full();
    int chi = exact.chi_full();
    o.check(omega == 13, "n=1 exact omega = " + std::to_string(omega) + " (documented 13)");
    o.check(chi == 13, "n=1 exact chi = " + std::to_string(chi) + " (documented 13)");
    bool perfect = exact.perfect();
    double secs = seconds_since(t0);
    o.check(perfect, "n=1 perfection over all 16384 induced subgraphs");
    o.check(secs < 60.0, "n=1 exact computations in " + std::to_string(secs) + " s (< 60 s)");
  }
  for (int n = 2; n <= 3; ++n) {
    GraphSnapshot g = GraphSnapshot::build(Modulus(n));
    std::uint64_t claimed = (std::uint64_t{1} << (4 * n)) - (std::uint64_t{1} << (4 * (n - 1))) +
                            (std::uint64_t{1} << (n + 1)) - 10;
    std::vector<std::size_t> members;
    for (const Quat& q : clique_family(Modulus(n)))
      members.push_back(static_cast<std::size_t>(g.index_of(q)));
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      if (classify(g.vertex(i)) == ElementClass::Unit) members.push_back(i);
    CliqueCheck check = clique_violations(g, members);
    std::string detail = "n=" + std::to_string(n) + ": candidate clique of " + std::to_string(members.size()) +
                         " (claimed " + std::to_string(claimed) + "), " + std::to_string(check.violations) +
                         " non-adjacent pairs";
    if (!check.examples.empty())
      detail += " (e.g. " + g.vertex(check.examples[0].first).str() + " ~ " +
                g.vertex(check.examples[0].second).str() + ")";
    o.check(members.size() == claimed && check.violations == 0, detail);
    GreedyColoring gc = greedy_coloring_smallest_last(g);
    std::uint64_t upper = (std::uint64_t{1} << (4 * n)) - 4;
    o.check(static_cast<std::uint64_t>(gc.count) <= upper,
            "n=" + std::to_string(n) + ": greedy coloring uses " + std::to_string(gc.count) +
                " colors (<= " + std::to_string(upper) + ")");
  }
  return o;
}

// 13. subgraph embedding (1 -> 2) and (2 -> 3), exhaustive over edges
Outcome criterion_embedding() {
  Outcome o;
  o.check(embed_check(Modulus(1), Modulus(2)), "(n1,n2)=(1,2): all edges preserved");
  o.check(embed_check(Modulus(2), Modulus(3)), "(n1,n2)=(2,3): all edges preserved");
  return o;
}

// 14. symmetry audit: exhaustive n <= 2, 10^6 seeded pairs at n = 3; the
// criterion passes when the audit runs and records its outcome either way
Outcome criterion_symmetry_audit() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    RunConfig cfg;
    cfg.n = n;
    cfg.seed = 0;
    cfg.sample_pairs = 1'000'000;
    Verifier v(cfg);
    ClaimResult c = v.claim_symmetry_audit();
    bool recorded = c.status == "pass" || c.status == "discrepancy-logged";
    o.check(recorded, "n=" + std::to_string(n) + ": " + c.computed);
  }
  return o;
}

// 15. determinism: two identically seeded runs produce byte-identical
// reports once timing fields are removed
Outcome criterion_determinism() {
  Outcome o;
  RunConfig cfg;
  cfg.n = 2;
  cfg.seed = 42;
  cfg.suite = "all";
  std::string a = strip_timing(run_verification(cfg).to_json()).dump(2);
  std::string b = strip_timing(run_verification(cfg).to_json()).dump(2);
  o.check(a == b, "verify --n 2 --seed 42 twice: " +
                      std::string(a == b ? "byte-identical (timing excluded)" : "reports differ"));
  return o;
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "element counts", criterion_element_counts},
    {2, "vertex counts", criterion_vertex_counts},
    {3, "adjacency criterion vs left product", criterion_adjacency},
    {4, "degree formula vs brute sweep", criterion_degree_formula},
    {5, "smith normal form properties", criterion_snf},
    {6, "graph invariants (diameter/radius/girth/degrees)", criterion_graph_invariants},
    {7, "non-eulerian witness", criterion_eulerian},
    {8, "hamiltonian cycle", criterion_hamiltonian},
    {9, "non-planarity (k5)", criterion_k5},
    {10, "connectivity", criterion_connectivity},
    {11, "clique family", criterion_clique_family},
    {12, "clique and chromatic numbers", criterion_clique_chromatic},
    {13, "subgraph embedding", criterion_embedding},
    {14, "product symmetry audit", criterion_symmetry_audit},
    {15, "report determinism", criterion_determinism},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }

  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o = c.run();
    std::ostringstream line;
    line << "[" << (c.id < 10 ? " " : "") << c.id << "] " << (o.pass ? "PASS" : "FAIL") << "  " << c.name;
    std::cout << line.str() << "\n";
    for (const std::string& n : o.notes) std::cout << "      " << n << "\n";
    if (!o.pass) ++failures;
  }
  if (only == 0)
    std::cout << "summary: " << (std::size(kCriteria) - static_cast<std::size_t>(failures)) << "/"
              << std::size(kCriteria) << " criteria pass\n";
  return failures == 0 ? 0 : 1;
}
