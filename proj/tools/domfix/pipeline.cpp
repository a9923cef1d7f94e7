#include "pipeline.hpp"

#include <atomic>
#include <condition_variable>
#include <deque>
#include <exception>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "domfix/adversary.hpp"
#include "domfix/domination.hpp"
#include "domfix/fixer.hpp"
#include "domfix/graph.hpp"
#include "domfix/graph6.hpp"
#include "domfix/permutation.hpp"
#include "domfix/prism.hpp"

namespace domfix::cli {
namespace {

struct LineOutcome {
  std::string out;
  std::string error;
  bool violation = false;
  bool not_found = false;
  std::string route;
};

struct StreamStats {
  long long total = 0;
  long long violations = 0;
  long long not_found = 0;
  long long errors = 0;
  std::map<std::string, long long> routes;
};

std::string clean_line(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  size_t b = line.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = line.find_last_not_of(" \t");
  line = line.substr(b, e - b + 1);
  constexpr std::string_view header = ">>graph6<<";
  if (line.rfind(header, 0) == 0) line.erase(0, header.size());
  return line;
}

void emit(const LineOutcome& o, long long lineno, std::ostream& out,
          std::ostream& err, StreamStats& stats) {
  ++stats.total;
  if (!o.error.empty()) {
    ++stats.errors;
    err << "line " << lineno << ": " << o.error << "\n";
    return;
  }
  if (!o.out.empty()) out << o.out << "\n";
  if (o.violation) ++stats.violations;
  if (o.not_found) ++stats.not_found;
  if (!o.route.empty()) ++stats.routes[o.route];
}

using LineFn = std::function<LineOutcome(const std::string&)>;

LineOutcome guarded(const LineFn& fn, const std::string& text) {
  try {
    return fn(text);
  } catch (const std::exception& e) {
    LineOutcome o;
    o.error = e.what();
    return o;
  }
}

// Streams graph6 lines through fn. Blank lines and a bare ">>graph6<<"
// header are skipped; a failing line is reported to err with its line
// number and the run continues. With jobs > 1, results are re-sequenced
// by input line so output is identical to the serial order.
StreamStats run_stream(const RunConfig& cfg, std::istream& in,
                       std::ostream& out, std::ostream& err,
                       const std::string& header, const LineFn& fn) {
  StreamStats stats;
  if (!header.empty()) out << header << "\n";

  if (cfg.jobs <= 1) {
    std::string raw;
    long long lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      std::string text = clean_line(raw);
      if (text.empty()) continue;
      emit(guarded(fn, text), lineno, out, err, stats);
    }
    return stats;
  }

  struct Task {
    long long seq = 0;
    long long lineno = 0;
    std::string text;
  };
  std::deque<Task> queue;
  std::mutex qm;
  std::condition_variable q_push, q_pop;
  bool feeding_done = false;
  const size_t q_cap = static_cast<size_t>(cfg.jobs) * 4;

  std::map<long long, std::pair<long long, LineOutcome>> results;
  std::mutex rm;
  std::condition_variable r_ready;
  bool workers_done = false;
  std::atomic<long long> total_tasks{-1};

  auto worker = [&] {
    for (;;) {
      Task t;
      {
        std::unique_lock<std::mutex> lk(qm);
        q_push.wait(lk, [&] { return !queue.empty() || feeding_done; });
        if (queue.empty()) return;
        t = std::move(queue.front());
        queue.pop_front();
      }
      q_pop.notify_one();
      LineOutcome o = guarded(fn, t.text);
      {
        std::lock_guard<std::mutex> lk(rm);
        results.emplace(t.seq, std::make_pair(t.lineno, std::move(o)));
      }
      r_ready.notify_one();
    }
  };

  std::thread emitter([&] {
    long long next = 0;
    for (;;) {
      std::unique_lock<std::mutex> lk(rm);
      r_ready.wait(lk, [&] {
        return results.count(next) ||
               (workers_done && next == total_tasks.load());
      });
      auto it = results.find(next);
      if (it == results.end()) return;
      long long lineno = it->second.first;
      LineOutcome o = std::move(it->second.second);
      results.erase(it);
      lk.unlock();
      emit(o, lineno, out, err, stats);
      ++next;
    }
  });

  std::vector<std::thread> workers;
  for (int i = 0; i < cfg.jobs; ++i) workers.emplace_back(worker);

  std::string raw;
  long long lineno = 0, seq = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string text = clean_line(raw);
    if (text.empty()) continue;
    {
      std::unique_lock<std::mutex> lk(qm);
      q_pop.wait(lk, [&] { return queue.size() < q_cap; });
      queue.push_back({seq, lineno, std::move(text)});
    }
    ++seq;
    q_push.notify_one();
  }
  total_tasks.store(seq);
  {
    std::lock_guard<std::mutex> lk(qm);
    feeding_done = true;
  }
  q_push.notify_all();
  for (auto& w : workers) w.join();
  {
    std::lock_guard<std::mutex> lk(rm);
    workers_done = true;
  }
  r_ready.notify_all();
  emitter.join();
  return stats;
}

int exit_code(const StreamStats& s) {
  if (s.violations > 0) return 1;
  if (s.errors > 0) return 2;
  return 0;
}

AnalyzeRecord analyze_graph(const Graph& g, const std::string& g6,
                            const FixerOptions& fopts) {
  AnalyzeRecord rec;
  rec.graph6 = g6;
  rec.n = g.n();
  rec.m = g.m();
  rec.gamma = gamma_exact(g).gamma;

  Graph prism = build_prism(g, Permutation::identity(g.n())).graph;
  rec.prism_fixer = gamma_exact(prism).gamma == rec.gamma;

  if (g.n() <= 1) {
    rec.note = "trivial";
    return rec;
  }
  if (!is_connected(g)) {
    rec.note = "routed to component analysis";
    for (const Component& c : connected_components(g))
      rec.components.push_back(
          analyze_graph(c.graph, write_graph6(c.graph), fopts));
    return rec;
  }

  try {
    rec.sets = find_symmetric_gamma_sets(g, fopts);
  } catch (const EnumerationLimitError&) {
    rec.truncated = true;
    return rec;
  }
  if (!rec.sets.empty()) {
    rec.structure = classify_even_structure(rec.sets);
    bool inv = true;
    for (const auto& s : rec.sets)
      if (!check_symmetric_invariants(g, s)) inv = false;
    rec.invariants_ok = inv;
    bool inter = true;
    for (size_t i = 0; i < rec.sets.size() && inter; ++i)
      for (size_t j = 0; j < rec.sets.size() && inter; ++j)
        if (i != j && !check_intersection_property(rec.sets[i], rec.sets[j]))
          inter = false;
    rec.intersection_ok = inter;
  }
  return rec;
}

}  // namespace

int run_gamma(const RunConfig& cfg, std::istream& in, std::ostream& out,
              std::ostream& err) {
  LineFn fn = [&cfg](const std::string& text) {
    Graph g = parse_graph6(text);
    DominationCertificate cert = gamma_exact(g);
    if (g.n() <= cfg.cap) {
      DominationCertificate ref = gamma_bruteforce(g, cfg.cap);
      if (ref.gamma != cert.gamma)
        throw std::logic_error(
            "solver mismatch: branch and bound " + std::to_string(cert.gamma) +
            ", brute force " + std::to_string(ref.gamma));
    }
    GammaRecord rec;
    rec.graph6 = text;
    rec.n = g.n();
    rec.gamma = cert.gamma;
    rec.witness = cert.witness.to_vector();
    LineOutcome o;
    o.out = format_gamma(cfg.format, rec);
    return o;
  };
  return exit_code(run_stream(cfg, in, out, err, gamma_header(cfg.format), fn));
}

int run_analyze(const RunConfig& cfg, std::istream& in, std::ostream& out,
                std::ostream& err) {
  FixerOptions fopts;
  fopts.gamma_set_limit = cfg.limit;
  LineFn fn = [&cfg, fopts](const std::string& text) {
    Graph g = parse_graph6(text);
    LineOutcome o;
    o.out = format_analyze(cfg.format, analyze_graph(g, text, fopts));
    return o;
  };
  return exit_code(
      run_stream(cfg, in, out, err, analyze_header(cfg.format), fn));
}

int run_verify(const RunConfig& cfg, std::istream& in, std::ostream& out,
               std::ostream& err) {
  AdversaryOptions aopts;
  aopts.fallback_budget = cfg.budget;
  aopts.seed = cfg.seed;
  aopts.fixer.gamma_set_limit = cfg.limit;
  LineFn fn = [&cfg, aopts](const std::string& text) {
    Graph g = parse_graph6(text);
    WitnessReport rep = find_witness(g, aopts);
    VerifyRecord rec;
    rec.graph6 = text;
    rec.n = g.n();
    rec.m = g.m();
    rec.report = rep;
    LineOutcome o;
    o.out = format_verify(cfg.format, rec);
    o.violation = rep.violation;
    o.not_found = !rep.found;
    o.route = route_name(rep.route);
    return o;
  };
  StreamStats stats =
      run_stream(cfg, in, out, err, verify_header(cfg.format), fn);
  VerifySummary sum;
  sum.total = stats.total;
  sum.violations = stats.violations;
  sum.not_found = stats.not_found;
  sum.errors = stats.errors;
  sum.routes = stats.routes;
  std::string line = format_verify_summary(cfg.format, sum);
  if (cfg.format == Format::CSV)
    err << line << "\n";
  else
    out << line << "\n";
  return exit_code(stats);
}

int run_prism(const RunConfig& cfg, const std::string& cycles,
              std::istream& in, std::ostream& out, std::ostream& err) {
  LineFn fn = [&cycles](const std::string& text) {
    Graph g = parse_graph6(text);
    Permutation pi = Permutation::from_cycles(g.n(), cycles);
    LineOutcome o;
    o.out = write_graph6(build_prism(g, pi).graph);
    return o;
  };
  return exit_code(run_stream(cfg, in, out, err, "", fn));
}

}  // namespace domfix::cli
