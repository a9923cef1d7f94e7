// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Needs DOMFIX_BIN and DOMFIX_CORPUS_DIR (see tests/CMakeLists.txt).

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "domfix/adversary.hpp"
#include "domfix/domination.hpp"
#include "domfix/fixer.hpp"
#include "domfix/graph.hpp"
#include "domfix/graph6.hpp"
#include "domfix/permutation.hpp"
#include "domfix/prism.hpp"
#include "domfix/rng.hpp"

#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/subprocess.hpp"

using namespace domfix;
using nlohmann::json;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL")
            << " - " << what << std::endl;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

Graph identity_prism(const Graph& g) {
  return build_prism(g, Permutation::identity(g.n())).graph;
}

// connected G(n, p) rejection sampler
Graph random_connected(int n, SplitMix64& rng) {
  for (;;) {
    Graph g(n);
    int denom = 2 + static_cast<int>(rng.bounded(4));  // p in 1/2 .. 1/5
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (rng.bounded(denom) == 0) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
}

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  long long checked = 0, mismatches = 0;
  for (int n = 1; n <= 7; ++n)
    for (const std::string& line : testsupport::corpus_lines(n)) {
      Graph g = parse_graph6(line);
      if (gamma_exact(g).gamma != gamma_bruteforce(g).gamma) ++mismatches;
      ++checked;
    }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "solver equivalence on %lld connected graphs n<=7, "
                "%lld mismatches (%.1fs)",
                checked, mismatches, seconds_since(t0));
  report(1, checked == 996 && mismatches == 0, buf);
}

void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  long long total = 0, violations = 0, not_found = 0, errors = 0;
  bool clean_exit = true;
  for (int n = 2; n <= 7; ++n) {
    testsupport::ProcResult r = testsupport::run_cmd(
        testsupport::domfix_bin() + " verify --seed 1 --input " +
        testsupport::corpus_path(n));
    if (r.exit_code != 0) clean_exit = false;
    size_t pos = r.out.rfind("{\"summary\"");
    if (pos == std::string::npos) {
      clean_exit = false;
      continue;
    }
    json s = json::parse(r.out.substr(pos))["summary"];
    total += s["total"].get<long long>();
    violations += s["violations"].get<long long>();
    not_found += s["not_found"].get<long long>();
    errors += s["errors"].get<long long>();
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "verify over %lld connected graphs 2<=n<=7: %lld violations, "
                "%lld not found, %lld errors (%.1fs)",
                total, violations, not_found, errors, seconds_since(t0));
  report(2,
         clean_exit && total == 995 && violations == 0 && not_found == 0 &&
             errors == 0,
         buf);
}

// criteria 3, 4 and 6 share one sweep over all connected graphs 2..8
void criteria346() {
  auto t0 = std::chrono::steady_clock::now();
  long long graphs = 0, fixers = 0, discrepancies = 0;
  long long sets_checked = 0, invariant_failures = 0;
  long long pairs_checked = 0, pair_failures = 0;
  for (int n = 2; n <= 8; ++n)
    for (const std::string& line : testsupport::corpus_lines(n)) {
      Graph g = parse_graph6(line);
      ++graphs;
      std::vector<SymmetricGammaSet> sets = find_symmetric_gamma_sets(g);
      int gamma = gamma_exact(g).gamma;
      bool direct = gamma_exact(identity_prism(g)).gamma == gamma;
      if (sets.empty() == direct) ++discrepancies;
      if (!sets.empty()) ++fixers;
      for (const SymmetricGammaSet& s : sets) {
        ++sets_checked;
        if (!check_symmetric_invariants(g, s)) ++invariant_failures;
      }
      for (const auto& a : sets)
        for (const auto& b : sets) {
          ++pairs_checked;
          if (!check_intersection_property(a, b)) ++pair_failures;
        }
    }
  double dt = seconds_since(t0);
  char buf[220];
  std::snprintf(buf, sizeof buf,
                "symmetric-set existence vs prism gamma on %lld graphs n<=8: "
                "%lld fixers, %lld discrepancies (%.1fs)",
                graphs, fixers, discrepancies, dt);
  report(3, graphs == 12112 && discrepancies == 0 && fixers > 0, buf);
  std::snprintf(buf, sizeof buf,
                "structural invariants on %lld symmetric sets: %lld failures",
                sets_checked, invariant_failures);
  report(4, sets_checked > 0 && invariant_failures == 0, buf);
  std::snprintf(buf, sizeof buf,
                "intersection property on %lld ordered pairs: %lld failures",
                pairs_checked, pair_failures);
  report(6, pairs_checked > 0 && pair_failures == 0, buf);
}

// criteria 5 and 7 share the random (graph, permutation) sample
void criteria57() {
  auto t0 = std::chrono::steady_clock::now();
  SplitMix64 rng(424242);
  long long pairs = 0, disagreements = 0, bound_failures = 0;
  while (pairs < 10000) {
    int n = 2 + static_cast<int>(rng.bounded(6));  // 2..7
    Graph g = random_connected(n, rng);
    Permutation pi = random_permutation(n, rng);
    int gamma = gamma_exact(g).gamma;
    int gamma_pi = gamma_exact(build_prism(g, pi).graph).gamma;
    bool witness = check_pi_fixer_condition(g, pi).has_value();
    if (witness != (gamma_pi == gamma)) ++disagreements;
    if (gamma_pi < gamma || gamma_pi > 2 * gamma) ++bound_failures;
    ++pairs;
  }
  double dt = seconds_since(t0);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "partition condition vs direct prism gamma on %lld random "
                "pairs: %lld disagreements (%.1fs)",
                pairs, disagreements, dt);
  report(5, disagreements == 0, buf);
  std::snprintf(buf, sizeof buf,
                "gamma <= gamma(piG) <= 2 gamma on the same sample: %lld "
                "failures",
                bound_failures);
  report(7, bound_failures == 0, buf);
}

// one constructed-witness check; returns false on any defect
bool construction_ok(const Graph& g, std::string* why) {
  WitnessReport rep = find_witness(g);
  if (rep.route != WitnessRoute::THEOREM4 &&
      rep.route != WitnessRoute::THEOREM5 &&
      rep.route != WitnessRoute::THEOREM6) {
    *why = std::string("unexpected route ") + route_name(rep.route);
    return false;
  }
  if (!rep.found || rep.violation || rep.gamma_prism <= rep.gamma_g) {
    *why = "constructed permutation failed the strict increase";
    return false;
  }
  int direct = gamma_exact(build_prism(g, rep.alpha).graph).gamma;
  if (direct != rep.gamma_prism) {
    *why = "reported prism gamma does not recompute";
    return false;
  }
  return true;
}

void criterion8() {
  auto t0 = std::chrono::steady_clock::now();
  long long candidates = 0, defects = 0;
  std::map<std::string, long long> routes;
  std::string why;

  // every enumerated prism fixer with gamma >= 4 up to n = 9
  for (int n = 2; n <= 9; ++n)
    for (const std::string& line : testsupport::corpus_lines(n)) {
      Graph g = parse_graph6(line);
      if (gamma_exact(g).gamma < 4) continue;
      if (gamma_exact(identity_prism(g)).gamma != gamma_exact(g).gamma)
        continue;
      ++candidates;
      WitnessReport rep = find_witness(g);
      ++routes[route_name(rep.route)];
      if (!construction_ok(g, &why)) {
        ++defects;
        std::cerr << "criterion 8 defect on " << line << ": " << why << "\n";
      }
    }

  // seeded sample at n = 10, enumeration not being worth it there
  SplitMix64 rng(777);
  long long sampled_fixers = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    Graph g = random_connected(10, rng);
    if (gamma_exact(g).gamma < 4) continue;
    if (gamma_exact(identity_prism(g)).gamma != gamma_exact(g).gamma) continue;
    ++candidates;
    ++sampled_fixers;
    WitnessReport rep = find_witness(g);
    ++routes[route_name(rep.route)];
    if (!construction_ok(g, &why)) {
      ++defects;
      std::cerr << "criterion 8 defect on " << write_graph6(g) << ": " << why
                << "\n";
    }
  }

  // designed fixers covering each dispatch, in case the sweeps are thin
  for (const Graph& g :
       {fixtures::spider10(), fixtures::pivot10(), fixtures::pivot12(),
        fixtures::disjoint_family16()}) {
    ++candidates;
    WitnessReport rep = find_witness(g);
    ++routes[route_name(rep.route)];
    if (!construction_ok(g, &why)) {
      ++defects;
      std::cerr << "criterion 8 defect on " << write_graph6(g) << ": " << why
                << "\n";
    }
  }
  bool covered = routes["THEOREM4"] > 0 && routes["THEOREM5"] > 0 &&
                 routes["THEOREM6"] > 0;

  // the three-row chain fixture: its cross-edge pattern and the gamma increase
  Graph chain12 = fixtures::three_row_chain12();
  std::vector<BitSet> rows;
  for (int r = 0; r < 3; ++r) {
    BitSet b(12);
    for (int j = 0; j < 4; ++j) b.set(4 * r + j);
    rows.push_back(b);
  }
  ChainIndexing ci = build_chain_indexing(chain12, rows);
  bool chain_ok = ci.a == std::vector<int>{1, 3, 2, 0};
  for (int j = 0; j < 4 && chain_ok; ++j)
    chain_ok = chain12.has_edge(ci.x[0][j], ci.x[2][ci.a[j]]);
  Permutation alpha = build_alpha_chain(ci, 12);
  int chain_gamma = gamma_exact(chain12).gamma;
  int chain_prism = gamma_exact(build_prism(chain12, alpha).graph).gamma;
  chain_ok = chain_ok && chain_prism > chain_gamma;

  char buf[260];
  std::snprintf(buf, sizeof buf,
                "constructions on %lld fixers with gamma>=4 (n<=9 sweep, "
                "%lld sampled at n=10): %lld defects; routes T4=%lld T5=%lld "
                "T6=%lld; chain fixture a and gamma %d->%d (%.1fs)",
                candidates, sampled_fixers, defects, routes["THEOREM4"],
                routes["THEOREM5"], routes["THEOREM6"], chain_gamma, chain_prism,
                seconds_since(t0));
  report(8, defects == 0 && covered && chain_ok && candidates > 0, buf);
}

void criterion9() {
  auto t0 = std::chrono::steady_clock::now();
  std::string input;
  for (const std::string& line : testsupport::corpus_lines(5))
    input += line + "\n";
  input += write_graph6(fixtures::spider10()) + "\n";
  input += write_graph6(fixtures::disjoint_family16()) + "\n";
  input += write_graph6(fixtures::k3_plus_k2()) + "\n";
  std::string cmd =
      testsupport::domfix_bin() + " verify --seed 31337 --budget 2000";
  testsupport::ProcResult a = testsupport::run_cmd(cmd, input);
  testsupport::ProcResult b = testsupport::run_cmd(cmd, input);
  testsupport::ProcResult c =
      testsupport::run_cmd(cmd + " --jobs 4", input);
  bool same = a.exit_code == b.exit_code && a.out == b.out && a.err == b.err;
  bool same_jobs = a.out == c.out && a.err == c.err;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "byte-identical verify reports across runs%s (%.1fs)",
                same_jobs ? " and job counts" : "", seconds_since(t0));
  report(9, same && same_jobs && a.exit_code == 0, buf);
}

}  // namespace

int main() {
  try {
    criterion1();
    criterion2();
    criteria346();
    criteria57();
    criterion8();
    criterion9();
  } catch (const std::exception& e) {
    std::cerr << "acceptance aborted: " << e.what() << "\n";
    return 2;
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria passed" << std::endl;
  return 0;
}
