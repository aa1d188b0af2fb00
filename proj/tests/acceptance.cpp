// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "congest/approx.hpp"
#include "congest/blocker.hpp"
#include "congest/csssp.hpp"
#include "congest/ksp.hpp"
#include "congest/oracle.hpp"
#include "congest/pipelined.hpp"
#include "congest/rand_apsp.hpp"

using namespace congest;

namespace {

constexpr NodeId A = 0, B = 1, C = 2, D = 3;

struct Criterion {
  int id = 0;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  std::string first_failure;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  bool passed() const { return failures == 0; }
};

WeightedGraph random_graph(std::size_t n, double p, std::uint64_t seed, Weight low = 0,
                           Weight high = 10, double zero_fraction = 0.2) {
  return generate({GeneratorKind::kGnp, n, p, low, high, zero_fraction, seed});
}

std::vector<NodeId> all_nodes(std::size_t n) {
  std::vector<NodeId> v(n);
  for (NodeId i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::vector<NodeId> random_subset(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::vector<NodeId> all = all_nodes(n), out;
  std::mt19937_64 rng(seed);
  std::sample(all.begin(), all.end(), std::back_inserter(out), std::min(k, n), rng);
  return out;
}

std::string tag(std::uint64_t seed, std::size_t n) {
  return "seed " + std::to_string(seed) + " n " + std::to_string(n);
}

std::string breakdown(const std::vector<Phase>& phases) {
  std::string s;
  for (const Phase& p : phases) {
    if (!s.empty()) s += ' ';
    s += p.name + "=" + std::to_string(p.metrics.rounds);
  }
  return s;
}

// Criterion 1 instances, shared with 5 and 9.
struct Instance {
  std::uint64_t seed = 0;
  WeightedGraph g;
  std::vector<NodeId> sources;
};

std::vector<Instance> ksp_instances() {
  static const double ps[] = {0.1, 0.3, 0.6};
  std::vector<Instance> out;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::size_t n = 5 + i % 56;
    Instance inst{i, random_graph(n, ps[i % 3], 1000 + i), {}};
    if (i % 2 == 0) {
      inst.sources = all_nodes(n);
    } else {
      const auto k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
      inst.sources = random_subset(n, k, 5000 + i);
    }
    out.push_back(std::move(inst));
  }
  return out;
}

struct KspRun {
  const Instance* inst = nullptr;
  KspResult result;
};

void criterion1(Criterion& c, const std::vector<Instance>& insts, std::vector<KspRun>& runs) {
  for (const Instance& inst : insts) {
    KspConfig cfg;
    cfg.sources = inst.sources;
    KspResult r = run_ksp(inst.g, cfg);
    DistanceMatrix want = dijkstra_apsp(inst.g);
    bool equal = true;
    for (NodeId x : r.sources) equal = equal && r.row(x) == want.row(x);
    c.expect(equal, "rows differ from dijkstra_apsp at " + tag(inst.seed, inst.g.n()));
    runs.push_back({&inst, std::move(r)});
  }
  c.summary = std::to_string(runs.size()) + " instances";
}

SpTree tree_of(NodeId root, std::initializer_list<std::pair<NodeId, TreeEntry>> rest) {
  SpTree t(4, root);
  for (const auto& [v, e] : rest) t.set(v, e);
  return t;
}

void criterion2(Criterion& c) {
  WeightedGraph g = load_graph(FIXTURE_DIR "/fig1.graph");
  CsSspCollection want{4, 2, {A, B}, {}};
  want.trees[A] = tree_of(A, {{B, {1, 1, A}}, {D, {2, 2, B}}});
  want.trees[B] = tree_of(B, {{D, {1, 1, B}}, {C, {2, 2, D}}});
  for (auto method : {CsSspMethod::kPipelined, CsSspMethod::kBellmanFord}) {
    CsSspRun run = build_csssp(g, {A, B}, 2, 9, method);
    c.expect(run.collection == want, "build_csssp differs from Fig. 1(iii)");
  }

  CsSspCollection raw{4, 2, {A, B}, {}};
  raw.trees[A] = tree_of(A, {{B, {1, 1, A}}, {D, {2, 2, B}}, {C, {9, 2, B}}});
  raw.trees[B] = tree_of(B, {{D, {1, 1, B}}, {C, {2, 2, D}}});
  Verdict v = verify_csssp(g, raw);
  bool names_bc = false;
  for (const std::string& s : v.violations) {
    names_bc = names_bc || s.find("(1,2)") != std::string::npos;
  }
  c.expect(!v.ok() && names_bc, "raw Fig. 1(ii) trees not flagged on (b,c)");

  BlockerRun q = compute_blocker_set(g, want);
  c.expect(q.q == std::vector<NodeId>{B}, "blocker set is not [b]");
  c.summary = "T_a, T_b, raw violation and Q=[b]";
}

struct EnvelopeCase {
  std::uint64_t seed;
  std::size_t n;
  std::int64_t h;
  WeightedGraph g;
};

std::vector<EnvelopeCase> envelope_suite() {
  static const std::int64_t hs[] = {2, 4, 9, 16};
  std::vector<EnvelopeCase> out;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t n = 10 + i % 51;
    out.push_back({i, n, hs[i % 4], random_graph(n, 0.15, 2000 + i)});
  }
  return out;
}

void criterion3(Criterion& c, const std::vector<EnvelopeCase>& suite) {
  Round worst_slack = -1;
  for (const EnvelopeCase& e : suite) {
    const Weight delta = static_cast<Weight>(e.n) * 10;
    PipelineResult r = short_range(e.g, static_cast<NodeId>(e.seed % e.n), e.h, delta);
    const std::int64_t root_h = ceil_mul_sqrt(1, e.h, 1);
    const Round bound = ceil_mul_sqrt(delta, e.h, 1) + e.h + 1;
    const std::string at = tag(e.seed, e.n) + " h " + std::to_string(e.h);
    c.expect(r.late_sends == 0, "late sends at " + at);
    c.expect(r.metrics.rounds <= bound, "rounds over bound at " + at);
    worst_slack = std::max(worst_slack, r.metrics.rounds - bound);
    for (std::int64_t s : r.runs[0].sends) c.expect(s <= root_h, "node sends over ceil(sqrt h) at " + at);
    c.expect(r.metrics.congestion() <= root_h, "edge congestion over ceil(sqrt h) at " + at);
  }
  c.summary = std::to_string(suite.size()) + " runs, Delta = 10n, max rounds - bound = " +
              std::to_string(worst_slack);
}

void criterion4(Criterion& c, const std::vector<EnvelopeCase>& suite) {
  std::int64_t runs = 0;
  for (const EnvelopeCase& e : suite) {
    for (std::size_t k : {2u, 5u, 10u}) {
      const Weight delta = static_cast<Weight>(e.n) * 10;
      std::vector<NodeId> sources = random_subset(e.n, k, 7000 + e.seed * 16 + k);
      const auto kk = static_cast<std::int64_t>(sources.size());
      PipelineResult r = multi_source_pipelined(e.g, sources, e.h, delta);
      const std::string at = tag(e.seed, e.n) + " h " + std::to_string(e.h) + " k " + std::to_string(kk);
      c.expect(r.metrics.rounds <= ceil_mul_sqrt(1, delta * e.h * kk, 1) + e.h + 1,
               "rounds over bound at " + at);
      const std::int64_t per_source = ceil_mul_sqrt(1, delta * e.h, kk) + 1;
      for (const SourceRun& run : r.runs) {
        for (std::int64_t s : run.sends) c.expect(s <= per_source, "per-source sends over bound at " + at);
      }
      ++runs;
    }
  }
  c.summary = std::to_string(runs) + " runs, k in {2,5,10}";
}

void criterion5(Criterion& c, const std::vector<KspRun>& runs) {
  std::size_t largest_q = 0;
  for (const KspRun& kr : runs) {
    const WeightedGraph& g = kr.inst->g;
    const std::int64_t h = kr.result.h;
    const auto k = static_cast<std::int64_t>(kr.result.sources.size());
    const std::string at = tag(kr.inst->seed, g.n()) + " h " + std::to_string(h);
    CsSspCollection col =
        build_csssp(g, kr.result.sources, h, kr.result.delta_cap, CsSspMethod::kPipelined).collection;
    BlockerRun run = compute_blocker_set(
        g, col, {}, [&](const BlockerIteration& it, const ScoreTable& s, const std::vector<NodeId>& q) {
          c.expect(s.per_tree == recount_scores(col, q), "score table differs from recount at " + at);
          c.expect(it.descendants.rounds <= k + h - 1, "Algorithm 2 over k + h - 1 rounds at " + at);
        });
    c.expect(run.q == kr.result.blockers, "blocker set differs from run_ksp at " + at);
    c.expect(verify_blocker(col, h, run.q).ok(), "verify_blocker fails at " + at);
    const double cover = std::ceil(static_cast<double>(g.n()) / static_cast<double>(h) *
                                   std::log(static_cast<double>(g.n()) * static_cast<double>(k)));
    c.expect(static_cast<double>(run.q.size()) <= cover + 1, "|Q| over bound at " + at);
    largest_q = std::max(largest_q, run.q.size());
  }
  c.summary = std::to_string(runs.size()) + " instances, largest |Q| = " + std::to_string(largest_q);
}

void criterion6(Criterion& c) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t n = 10 + i % 41;
    WeightedGraph g = random_graph(n, 0.08 + 0.04 * static_cast<double>(i % 4), 3000 + i);
    std::vector<NodeId> sources = random_subset(n, 1 + i % 8, 4000 + i);
    const std::int64_t h = 1 + static_cast<std::int64_t>(i % 6);
    const Weight delta = std::max<Weight>(1, static_cast<Weight>(n) * g.max_weight());
    CsSspRun pipe = build_csssp(g, sources, h, delta, CsSspMethod::kPipelined);
    CsSspRun bf = build_csssp(g, sources, h, delta, CsSspMethod::kBellmanFord);
    const std::string at = tag(i, n) + " h " + std::to_string(h);
    c.expect(verify_csssp(g, pipe.collection).ok(), "pipelined collection fails verify_csssp at " + at);
    c.expect(verify_csssp(g, bf.collection).ok(), "Bellman-Ford collection fails verify_csssp at " + at);
    c.expect(pipe.collection == bf.collection, "back-ends differ at " + at);
  }
  c.summary = "100 collections, both back-ends";
}

void criterion7(Criterion& c) {
  std::int64_t pairs = 0, zero_pairs = 0;
  for (Rational eps : {Rational(1, 10), Rational(1, 2)}) {
    for (std::size_t n : {40u, 60u}) {
      for (std::uint64_t s = 0; s < 3; ++s) {
        WeightedGraph g = random_graph(n, 0.08, 6000 + n * 10 + s);
        ApproxConfig cfg;
        cfg.epsilon = eps;
        ApproxResult r = approx_apsp(g, cfg);
        DistanceMatrix want = dijkstra_apsp(g);
        auto zero = zero_weight_closure(g);
        const std::string at = tag(s, n) + " eps " + std::to_string(eps.numerator()) + "/" +
                               std::to_string(eps.denominator());
        for (NodeId u = 0; u < n; ++u) {
          for (NodeId v = 0; v < n; ++v) {
            const Distance d = want.at(u, v);
            const auto& est = r.est[u][v];
            c.expect(est.has_value() == d.finite(), "reachability differs at " + at);
            if (!est || !d.finite()) continue;
            const Rational exact(d.value());
            const bool above = exact <= *est;
            const bool below = *est <= (1 + eps) * exact;
            c.expect(above && below, "sandwich broken at " + at);
            if (zero[u][v]) {
              c.expect(*est == Rational(0), "zero-reachable pair not 0 at " + at);
              ++zero_pairs;
            }
            ++pairs;
          }
        }
      }
    }
  }
  c.summary = std::to_string(pairs) + " finite pairs, " + std::to_string(zero_pairs) + " zero-reachable";
}

struct RandRun {
  WeightedGraph g;
  RandApspResult result;
};

void criterion8(Criterion& c, std::vector<RandRun>& runs) {
  int exact = 0, rejected = 0;
  std::uint64_t graph_seed = 8000;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    WeightedGraph g;
    DistanceMatrix want;
    for (int tries = 0;; ++tries) {
      if (tries == 1000) throw std::runtime_error("no graph without a negative cycle");
      g = random_graph(60, 0.04, graph_seed++, -3, 10, 0);
      try {
        want = bellman_ford_apsp(g);
        break;
      } catch (const NegativeCycle&) {
        ++rejected;
      }
    }
    RandApspConfig cfg;
    cfg.sources = all_nodes(60);
    cfg.seed = seed;
    RandApspResult r = run_randomized_apsp(g, cfg);
    bool equal = true, one_sided = true;
    for (NodeId x : r.sources) {
      const std::vector<Distance>& row = r.row(x);
      for (NodeId v = 0; v < 60; ++v) {
        equal = equal && row[v] == want.at(x, v);
        one_sided = one_sided && want.at(x, v) <= row[v];
      }
    }
    exact += equal ? 1 : 0;
    c.expect(one_sided, "estimate below oracle at seed " + std::to_string(seed));
    runs.push_back({std::move(g), std::move(r)});
  }
  c.expect(exact >= 99, "only " + std::to_string(exact) + " of 100 runs exact");
  c.summary = std::to_string(exact) + "/100 exact, " + std::to_string(rejected) +
              " graphs rejected for negative cycles";
}

void criterion9(Criterion& c, const std::vector<KspRun>& ksp, const std::vector<RandRun>& rand) {
  double worst_ksp = 0, worst_rand = 0;
  std::string worst_ksp_at, worst_rand_at;
  for (const KspRun& kr : ksp) {
    const auto n = static_cast<double>(kr.inst->g.n());
    const auto h = static_cast<double>(kr.result.h);
    const auto k = static_cast<double>(kr.result.sources.size());
    const auto delta = static_cast<double>(kr.result.delta_cap);
    const double bound = 8 * (n * n * std::log2(std::max(n, 2.0)) / h + std::sqrt(delta * h * k) + n + k);
    const auto rounds = static_cast<double>(kr.result.total().rounds);
    const std::string at = tag(kr.inst->seed, kr.inst->g.n());
    c.expect(rounds <= bound, "run_ksp over envelope at " + at);
    if (rounds / bound > worst_ksp) {
      worst_ksp = rounds / bound;
      worst_ksp_at = at + " h " + std::to_string(kr.result.h) + " [" + breakdown(kr.result.phases) + "]";
    }
  }
  for (std::size_t i = 0; i < rand.size(); ++i) {
    const RandApspResult& r = rand[i].result;
    const auto n = static_cast<double>(rand[i].g.n());
    const auto k = static_cast<double>(r.sources.size());
    const auto h = static_cast<double>(r.h);
    const auto q = static_cast<double>(r.centers.q);
    const double bound = 8 * (k * h + n + std::sqrt(n * k * q) * std::log2(n));
    const auto rounds = static_cast<double>(r.total().rounds);
    c.expect(rounds <= bound, "rand-apsp over envelope at seed " + std::to_string(i));
    if (rounds / bound > worst_rand) {
      worst_rand = rounds / bound;
      worst_rand_at = "seed " + std::to_string(i) + " [" + breakdown(r.phases) + "]";
    }
  }
  std::ostringstream s;
  s.precision(3);
  s << "worst ksp ratio " << worst_ksp << " at " << worst_ksp_at << "; worst rand-apsp ratio "
    << worst_rand << " at " << worst_rand_at;
  c.summary = s.str();
}

void criterion10(Criterion& c) {
  c.expect(choose_h(64, 4, 64, 1, HRule::kTheorem3) == 63, "theorem3 n=64 k=4 Delta=64");
  c.expect(choose_h(16, 1, 1, 1, HRule::kTheorem2) == 15, "theorem2 n=16 k=1 lambda=1");
  c.expect(choose_h(16, 1, 1, 1, HRule::kExplicit, 5) == 5, "explicit h=5");
  c.expect(sample_centers(1, 1, 0).centers == std::vector<NodeId>{0}, "n=1 centers");
  c.expect(sample_centers(64, 64, 0).centers == all_nodes(64), "n=64 k=64 centers");
  c.expect(center_count(64, 64) == 64, "n=64 k=64 q");
  c.expect(center_count(1000, 1) == 70, "n=1000 k=1 q");
  c.expect(sample_centers(1000, 1, 0).centers.size() == 70, "n=1000 k=1 sample size");
  c.summary = "choose_h 63/15/5, q 1/64/70";
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  std::vector<Criterion> results(10);
  for (int i = 0; i < 10; ++i) results[i].id = i + 1;

  const std::vector<Instance> insts = ksp_instances();
  const std::vector<EnvelopeCase> suite = envelope_suite();
  std::vector<KspRun> ksp_runs;
  std::vector<RandRun> rand_runs;

  auto run = [&](int id, auto&& body) {
    Criterion& c = results[id - 1];
    const auto start = Clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    std::cout << "criterion " << id << (c.passed() ? " PASS" : " FAIL") << ": " << c.summary << " ("
              << c.checks << " checks, " << ms << " ms)";
    if (!c.passed()) std::cout << "; " << c.failures << " failed, first: " << c.first_failure;
    std::cout << std::endl;
  };

  run(1, [&](Criterion& c) { criterion1(c, insts, ksp_runs); });
  run(2, criterion2);
  run(3, [&](Criterion& c) { criterion3(c, suite); });
  run(4, [&](Criterion& c) { criterion4(c, suite); });
  run(5, [&](Criterion& c) { criterion5(c, ksp_runs); });
  run(6, criterion6);
  run(7, criterion7);
  run(8, [&](Criterion& c) { criterion8(c, rand_runs); });
  run(9, [&](Criterion& c) { criterion9(c, ksp_runs, rand_runs); });
  run(10, criterion10);

  const bool all = std::all_of(results.begin(), results.end(), [](const Criterion& c) { return c.passed(); });
  std::cout << (all ? "all criteria PASS" : "some criteria FAIL") << std::endl;
  return all ? 0 : 1;
}
