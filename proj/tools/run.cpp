#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "cli.hpp"
#include "congest/approx.hpp"
#include "congest/blocker.hpp"
#include "congest/csssp.hpp"
#include "congest/ksp.hpp"
#include "congest/oracle.hpp"
#include "congest/pipelined.hpp"
#include "congest/rand_apsp.hpp"

namespace congest::cli {

using nlohmann::json;

NodeId parse_node(const std::string& text, std::size_t n) {
  NodeId id = 0;
  if (text.size() == 1 && text[0] >= 'a' && text[0] <= 'z') {
    id = static_cast<NodeId>(text[0] - 'a');
  } else {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(text, &used);
      if (used != text.size() || v < 0) throw UsageError("bad node: " + text);
      id = static_cast<NodeId>(v);
    } catch (const std::logic_error&) {
      throw UsageError("bad node: " + text);
    }
  }
  if (id >= n) throw UsageError("node " + text + " out of range");
  return id;
}

std::pair<std::int64_t, std::int64_t> parse_fraction(const std::string& text) {
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      return {std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return {std::stoll(text), 1};
    const bool negative = !text.empty() && text[0] == '-';
    const std::string head = text.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
    const std::string digits = text.substr(dot + 1);
    if (digits.size() > 15 || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad number: " + text);
    }
    std::int64_t den = 1;
    for (std::size_t i = 0; i < digits.size(); ++i) den *= 10;
    const std::int64_t whole = head.empty() ? 0 : std::stoll(head);
    const std::int64_t num = whole * den + (digits.empty() ? 0 : std::stoll(digits));
    return {negative ? -num : num, den};
  } catch (const std::logic_error&) {
    throw UsageError("bad number: " + text);
  }
}

EngineConfig engine_for(const WeightedGraph& g, bool fifo) {
  EngineConfig cfg;
  if (const char* env = std::getenv("CONGEST_ROUND_LIMIT")) {
    try {
      cfg.round_limit = std::stoll(env);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("bad CONGEST_ROUND_LIMIT: ") + env);
    }
  } else {
    const double n = static_cast<double>(g.n());
    const double lambda = static_cast<double>(std::max<Weight>(1, g.max_weight()));
    cfg.round_limit = std::max<Round>(1, static_cast<Round>(std::ceil(10 * n * std::sqrt(n * lambda))));
  }
  if (fifo) cfg.bandwidth = BandwidthMode::kFifo;
  return cfg;
}

json phases_json(const std::vector<Phase>& phases) {
  json out = json::array();
  for (const Phase& p : phases) {
    out.push_back({{"name", p.name},
                   {"rounds", p.metrics.rounds},
                   {"messages", p.metrics.total_messages()},
                   {"congestion", p.metrics.congestion()}});
  }
  return out;
}

namespace {

Distance dist_of(const MaybeLabel& l) { return l ? Distance(l->dist) : Distance(); }

struct Checker {
  std::vector<std::string> violations;
  void fail(std::string what) { violations.push_back(std::move(what)); }
  bool ok() const { return violations.empty(); }
};

std::string pair_text(NodeId s, NodeId t) {
  return "(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

void add_row(Outcome& out, NodeId s, NodeId t, const Distance& d) {
  if (d.finite()) {
    out.csv_rows.push_back(std::to_string(s) + "," + std::to_string(t) + "," +
                           std::to_string(d.value()));
  }
}

std::vector<NodeId> sources_of(const WeightedGraph& g, const RunOptions& o, bool all_by_default) {
  std::vector<NodeId> out;
  for (const std::string& s : o.sources) out.push_back(parse_node(s, g.n()));
  if (out.empty()) {
    if (all_by_default) {
      out.resize(g.n());
      std::iota(out.begin(), out.end(), NodeId{0});
    } else {
      out.push_back(0);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t need_h(const RunOptions& o) {
  if (!o.h) throw UsageError(o.algorithm + " needs --h");
  if (*o.h < 1) throw UsageError("--h must be >= 1");
  return *o.h;
}

Weight lambda_of(const WeightedGraph& g, const RunOptions& o) {
  return std::max<Weight>(1, o.lambda.value_or(g.max_weight()));
}

Weight delta_of(const WeightedGraph& g, const RunOptions& o) {
  return std::max<Weight>(1, o.delta.value_or(static_cast<Weight>(g.n()) * lambda_of(g, o)));
}

LabelMode mode_of(const RunOptions& o) {
  if (o.mode == "single") return LabelMode::kSingle;
  if (o.mode == "frontier") return LabelMode::kFrontier;
  throw UsageError("unknown --mode " + o.mode);
}

CsSspMethod method_of(const RunOptions& o) {
  if (o.method == "pipelined") return CsSspMethod::kPipelined;
  if (o.method == "bf") return CsSspMethod::kBellmanFord;
  throw UsageError("unknown --method " + o.method);
}

// Frontier labels must equal the h-hop oracle; single labels must be upper
// bounds and exact on the short-path domain.
void check_pipeline(const WeightedGraph& g, const PipelineResult& r, std::int64_t h,
                    Weight delta, LabelMode mode, Checker& check, Outcome& out) {
  std::int64_t off_domain = 0;
  for (const SourceRun& run : r.runs) {
    HopBoundedRow want = hop_bounded_sssp(g, run.source, h);
    auto domain = short_path_domain(g, run.source, h, delta);
    for (NodeId v = 0; v < g.n(); ++v) {
      const Distance got = dist_of(run.labels[v]);
      const Distance exact = dist_of(want.labels[v]);
      add_row(out, run.source, v, got);
      if (got == exact) continue;
      if (mode == LabelMode::kFrontier || domain[v] || got < exact) {
        check.fail("label " + pair_text(run.source, v) + " = " + got.to_string() +
                   ", oracle " + exact.to_string());
      } else {
        ++off_domain;
      }
    }
  }
  out.report["result"]["late_sends"] = r.late_sends;
  out.report["result"]["upper_bound_only"] = off_domain;
  if (r.late_sends != 0) check.fail("late sends: " + std::to_string(r.late_sends));
}

void run_pipelined(const WeightedGraph& g, const RunOptions& o, const EngineConfig& cfg,
                   Checker& check, Outcome& out) {
  const std::int64_t h = need_h(o);
  const Weight delta = delta_of(g, o);
  const LabelMode mode = mode_of(o);
  out.report["config"]["h"] = h;
  out.report["config"]["delta_cap"] = delta;
  out.report["config"]["mode"] = o.mode;
  if (o.algorithm == "extension") {
    const NodeId source = sources_of(g, o, false).front();
    std::vector<Distance> seeds(g.n());
    for (const std::string& s : o.seeds) {
      auto colon = s.find(':');
      if (colon == std::string::npos) throw UsageError("seed must be node:distance, got " + s);
      auto [num, den] = parse_fraction(s.substr(colon + 1));
      if (den != 1) throw UsageError("seed distances are integers");
      seeds[parse_node(s.substr(0, colon), g.n())] = Distance(num);
    }
    PipelineResult r = short_range_extension(g, source, h, seeds, delta, mode, cfg);
    out.phases = r.phases;
    std::vector<Distance> with_source = seeds;
    with_source[source] = Distance(0);
    auto want = seeded_hop_bounded(g, with_source, h);
    std::int64_t above = 0;
    for (NodeId v = 0; v < g.n(); ++v) {
      const Distance got = dist_of(r.runs.front().labels[v]);
      add_row(out, source, v, got);
      const bool bad = mode == LabelMode::kFrontier ? got != want[v] : got < want[v];
      if (bad) check.fail("label " + pair_text(source, v) + " = " + got.to_string() +
                          ", oracle " + want[v].to_string());
      else if (got != want[v]) ++above;
    }
    out.report["result"]["late_sends"] = r.late_sends;
    out.report["result"]["upper_bound_only"] = above;
    if (r.late_sends != 0) check.fail("late sends: " + std::to_string(r.late_sends));
    return;
  }
  std::vector<NodeId> sources = sources_of(g, o, false);
  PipelineResult r = o.algorithm == "short-range"
                         ? short_range(g, sources.front(), h, delta, mode, cfg)
                         : multi_source_pipelined(g, sources, h, delta, mode, cfg);
  out.phases = r.phases;
  check_pipeline(g, r, h, delta, mode, check, out);
  json congestion = json::object();
  for (const SourceRun& run : r.runs) congestion[std::to_string(run.source)] = run.congestion();
  out.report["result"]["per_source_congestion"] = congestion;
}

json collection_json(const CsSspCollection& c) {
  json trees = json::object();
  for (const auto& [x, tree] : c.trees) {
    json members = json::array();
    for (NodeId v : tree.members()) {
      const TreeEntry& e = tree.at(v);
      members.push_back({{"node", v},
                         {"parent", e.parent ? json(*e.parent) : json(nullptr)},
                         {"dist", e.dist},
                         {"hops", e.hops}});
    }
    trees[std::to_string(x)] = members;
  }
  return trees;
}

void run_csssp_or_blocker(const WeightedGraph& g, const RunOptions& o, const EngineConfig& cfg,
                          Checker& check, Outcome& out) {
  const std::int64_t h = need_h(o);
  const Weight delta = delta_of(g, o);
  std::vector<NodeId> sources = sources_of(g, o, true);
  out.report["config"]["h"] = h;
  out.report["config"]["delta_cap"] = delta;
  out.report["config"]["method"] = o.method;
  CsSspRun cs = build_csssp(g, sources, h, delta, method_of(o), cfg);
  std::vector<Phase> phases;
  for (const Phase& p : cs.phases) phases.push_back({"csssp:" + p.name, p.metrics});
  for (const auto& v : verify_csssp(g, cs.collection).violations) check.fail(v);
  for (const auto& [x, tree] : cs.collection.trees) {
    for (NodeId v : tree.members()) add_row(out, x, v, Distance(tree.at(v).dist));
  }
  if (o.algorithm == "csssp") {
    out.report["result"]["trees"] = collection_json(cs.collection);
  } else {
    BlockerRun b = compute_blocker_set(g, cs.collection, cfg);
    for (const Phase& p : b.phases) phases.push_back({"blocker:" + p.name, p.metrics});
    for (const auto& v : verify_blocker(cs.collection, h, b.q).violations) check.fail(v);
    out.report["result"]["blockers"] = b.q;
    out.report["result"]["iterations"] = b.iterations.size();
  }
  out.phases = std::move(phases);
}

void compare_rows(const DistanceMatrix& want, const std::vector<NodeId>& sources,
                  const std::vector<std::vector<Distance>>& rows, Checker& check, Outcome& out) {
  for (std::size_t i = 0; i < sources.size(); ++i) {
    for (NodeId v = 0; v < rows[i].size(); ++v) {
      add_row(out, sources[i], v, rows[i][v]);
      if (rows[i][v] != want.at(sources[i], v)) {
        check.fail("distance " + pair_text(sources[i], v) + " = " + rows[i][v].to_string() +
                   ", oracle " + want.at(sources[i], v).to_string());
      }
    }
  }
}

void run_ksp_like(const WeightedGraph& g, const RunOptions& o, const EngineConfig& cfg,
                  Checker& check, Outcome& out) {
  KspConfig k;
  k.sources = sources_of(g, o, true);
  if (o.algorithm == "apsp") {
    k.sources.resize(g.n());
    std::iota(k.sources.begin(), k.sources.end(), NodeId{0});
  }
  if (!o.h_rule.empty()) {
    try {
      k.h_rule = parse_h_rule(o.h_rule);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  } else if (o.h) {
    k.h_rule = HRule::kExplicit;
  }
  if (k.h_rule == HRule::kExplicit) k.h = need_h(o);
  k.delta_cap = o.delta;
  k.lambda = o.lambda;
  k.csssp = method_of(o);
  k.engine = cfg;
  KspResult r = run_ksp(g, k);
  out.report["config"]["h_rule"] = to_string(k.h_rule);
  out.report["config"]["h"] = r.h;
  out.report["config"]["delta_cap"] = r.delta_cap;
  out.report["result"]["blockers"] = r.blockers;
  out.report["result"]["delta_observed"] = r.delta_observed;
  out.phases = r.phases;
  compare_rows(dijkstra_apsp(g), r.sources, r.rows, check, out);
}

void run_rand(const WeightedGraph& g, const RunOptions& o, const EngineConfig& cfg,
              Checker& check, Outcome& out) {
  RandApspConfig c;
  c.sources = sources_of(g, o, true);
  c.seed = o.seed;
  c.h = o.h;
  c.engine = cfg;
  RandApspResult r = run_randomized_apsp(g, c);
  out.report["config"]["h"] = r.h;
  out.report["config"]["seed"] = o.seed;
  out.report["result"]["q"] = r.centers.q;
  out.report["result"]["centers"] = r.centers.centers;
  out.phases = r.phases;
  compare_rows(bellman_ford_apsp(g), r.sources, r.rows, check, out);
}

void run_approx(const WeightedGraph& g, const RunOptions& o, const EngineConfig& cfg,
                Checker& check, Outcome& out) {
  auto [num, den] = parse_fraction(o.epsilon);
  if (den <= 0) throw UsageError("bad --epsilon " + o.epsilon);
  ApproxConfig c;
  c.epsilon = Rational(num, den);
  c.engine = cfg;
  ApproxResult r = approx_apsp(g, c);
  out.report["config"]["epsilon"] = std::to_string(num) + "/" + std::to_string(den);
  out.phases = r.phases;
  DistanceMatrix want = dijkstra_apsp(g);
  for (NodeId u = 0; u < g.n(); ++u) {
    for (NodeId v = 0; v < g.n(); ++v) {
      const auto& est = r.est[u][v];
      const Distance d = want.at(u, v);
      if (est) {
        std::string text = std::to_string(est->numerator());
        if (est->denominator() != 1) text += "/" + std::to_string(est->denominator());
        out.csv_rows.push_back(std::to_string(u) + "," + std::to_string(v) + "," + text);
      }
      if (est.has_value() != d.finite()) {
        check.fail("reachability " + pair_text(u, v));
        continue;
      }
      if (!est) continue;
      const Rational exact(d.value());
      const bool above = exact <= *est;
      const bool below = *est <= (1 + c.epsilon) * exact;
      if (!above || !below) {
        check.fail("estimate " + pair_text(u, v) + " outside [d, (1+eps)d], d = " + d.to_string());
      }
    }
  }
}

}  // namespace

Outcome run_algorithm(const WeightedGraph& g, const RunOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  const EngineConfig cfg = engine_for(g, o.fifo);
  Outcome out;
  out.report = {{"schema_version", 1},
                {"algorithm", o.algorithm},
                {"graph",
                 {{"path", o.graph_path},
                  {"n", g.n()},
                  {"edges", g.edges().size()},
                  {"directed", g.directed()},
                  {"lambda", g.max_weight()}}},
                {"config", {{"round_limit", cfg.round_limit}, {"fifo", o.fifo}}},
                {"result", json::object()}};
  Checker check;
  const std::string& a = o.algorithm;
  if (a == "short-range" || a == "extension" || a == "multi-source") {
    run_pipelined(g, o, cfg, check, out);
  } else if (a == "csssp" || a == "blocker") {
    run_csssp_or_blocker(g, o, cfg, check, out);
  } else if (a == "ksp" || a == "apsp") {
    run_ksp_like(g, o, cfg, check, out);
  } else if (a == "rand-apsp") {
    run_rand(g, o, cfg, check, out);
  } else if (a == "approx") {
    run_approx(g, o, cfg, check, out);
  } else {
    throw UsageError("unknown algorithm: " + a);
  }

  const RoundMetrics total = total_of(out.phases);
  out.report["phases"] = phases_json(out.phases);
  out.report["total"] = {{"rounds", total.rounds},
                         {"messages", total.total_messages()},
                         {"congestion", total.congestion()},
                         {"max_node_receives_in_round", total.max_node_receives_in_round}};
  out.verified = check.ok();
  out.report["verdict"] = !check.ok() ? "FAIL" : a == "approx" ? "within-epsilon" : "exact";
  json violations = json::array();
  for (std::size_t i = 0; i < check.violations.size() && i < 20; ++i) violations.push_back(check.violations[i]);
  out.report["violations"] = violations;
  out.report["violation_count"] = check.violations.size();
  out.report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace congest::cli
