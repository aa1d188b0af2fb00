#include "congest/ksp.hpp"

#include <algorithm>
#include <cmath>

#include "congest/pipelined.hpp"
#include "congest/spanning.hpp"

namespace congest {

HRule parse_h_rule(const std::string& name) {
  if (name == "explicit") return HRule::kExplicit;
  if (name == "theorem2") return HRule::kTheorem2;
  if (name == "theorem3") return HRule::kTheorem3;
  throw InvalidArgument("unknown h rule: " + name);
}

std::string to_string(HRule rule) {
  switch (rule) {
    case HRule::kExplicit: return "explicit";
    case HRule::kTheorem2: return "theorem2";
    case HRule::kTheorem3: return "theorem3";
  }
  return "?";
}

std::int64_t choose_h(std::size_t n, std::size_t k, Weight delta_cap, Weight lambda,
                      HRule rule, std::int64_t explicit_h) {
  if (rule == HRule::kExplicit) return explicit_h;
  if (n == 0 || k == 0) throw InvalidArgument("n and k must be positive");
  const long double nn = static_cast<long double>(n);
  const long double kk = static_cast<long double>(k);
  const long double lg = std::log2(nn);
  long double value = 0;
  if (rule == HRule::kTheorem3) {
    if (delta_cap <= 0) throw InvalidArgument("delta_cap must be positive");
    value = std::pow(nn, 4.0L / 3) * std::pow(lg, 2.0L / 3) /
            std::cbrt(2 * kk * static_cast<long double>(delta_cap));
  } else {
    if (lambda <= 0) throw InvalidArgument("lambda must be positive");
    value = nn * std::sqrt(lg) / std::pow(static_cast<long double>(lambda) * kk, 0.25L);
  }
  const auto h = static_cast<std::int64_t>(std::ceil(value));
  const auto top = std::max<std::int64_t>(1, static_cast<std::int64_t>(n) - 1);
  return std::clamp<std::int64_t>(h, 1, top);
}

const std::vector<Distance>& KspResult::row(NodeId x) const {
  auto it = std::lower_bound(sources.begin(), sources.end(), x);
  if (it == sources.end() || *it != x) {
    throw InvalidArgument("node " + std::to_string(x) + " is not a source");
  }
  return rows[static_cast<std::size_t>(it - sources.begin())];
}

std::vector<Distance> local_combine(const std::vector<NodeId>& sources,
                                    const std::vector<Distance>& own,
                                    std::span<const Relay> relays) {
  std::vector<Distance> out = own;
  for (const Relay& r : relays) {
    auto it = std::lower_bound(sources.begin(), sources.end(), r.source);
    if (it == sources.end() || *it != r.source) continue;
    Distance& d = out[static_cast<std::size_t>(it - sources.begin())];
    d = std::min(d, r.to_center.plus(r.from_center));
  }
  return out;
}

namespace {

void add_phases(std::vector<Phase>& to, const std::string& prefix,
                const std::vector<Phase>& from) {
  for (const Phase& p : from) to.push_back({prefix + p.name, p.metrics});
}

}  // namespace

KspResult run_ksp(const WeightedGraph& g, KspConfig config) {
  if (g.has_negative_weight()) throw NegativeWeight("k-source shortest paths need nonnegative weights");
  if (config.sources.empty()) throw InvalidArgument("no sources");
  std::sort(config.sources.begin(), config.sources.end());
  config.sources.erase(std::unique(config.sources.begin(), config.sources.end()),
                       config.sources.end());
  const std::size_t n = g.n();
  for (NodeId x : config.sources) {
    if (x >= n) throw InvalidArgument("source " + std::to_string(x) + " out of range");
  }

  KspResult out;
  out.sources = config.sources;
  const Weight lambda = std::max<Weight>(1, config.lambda.value_or(g.max_weight()));
  out.delta_cap = std::max<Weight>(
      1, config.delta_cap.value_or(static_cast<Weight>(n) * lambda));
  const std::size_t k = out.sources.size();
  out.h = choose_h(n, k, out.delta_cap, lambda, config.h_rule, config.h);
  if (out.h < 1) throw InvalidHopBound("h must be >= 1");

  // 1. consistent h-hop trees
  CsSspRun cs = build_csssp(g, out.sources, out.h, out.delta_cap, config.csssp, config.engine);
  add_phases(out.phases, "csssp:", cs.phases);
  const CsSspCollection& c = cs.collection;

  // 2. blocker set
  BlockerRun blocker = compute_blocker_set(g, c, config.engine);
  add_phases(out.phases, "blocker:", blocker.phases);
  out.blockers = blocker.q;

  // 3. full single-source shortest paths from each blocker, one after another
  Phase sssp{"sssp", {}};
  std::vector<std::vector<MaybeLabel>> from_center;
  const std::int64_t full = std::max<std::int64_t>(1, static_cast<std::int64_t>(n) - 1);
  for (NodeId center : out.blockers) {
    BellmanFordRun bf = distributed_bellman_ford(g, {center}, full, config.engine, false);
    sssp.metrics.append(bf.total());
    from_center.push_back(std::move(bf.labels.front()));
  }
  out.phases.push_back(std::move(sssp));

  // 4. every blocker broadcasts (c, x, h-hop dist(x, c)) for the trees it lies in
  std::vector<std::vector<Item>> origin(n);
  for (NodeId center : out.blockers) {
    for (NodeId x : out.sources) {
      const SpTree& t = c.trees.at(x);
      if (!t.contains(center)) continue;
      origin[center].push_back({center, x, t.at(center).dist});
    }
  }
  BroadcastRun cast = broadcast_items(g, blocker.forest, origin, config.engine);
  out.phases.push_back({"broadcast", cast.metrics});

  // 5. local step at every node
  std::vector<NodeId> rank(n, 0);
  for (std::size_t j = 0; j < out.blockers.size(); ++j) rank[out.blockers[j]] = static_cast<NodeId>(j);
  out.rows.assign(k, std::vector<Distance>(n));
  for (NodeId v = 0; v < n; ++v) {
    std::vector<Distance> own(k);
    for (std::size_t i = 0; i < k; ++i) {
      const SpTree& t = c.trees.at(out.sources[i]);
      if (t.contains(v)) own[i] = Distance(t.at(v).dist);
    }
    std::vector<Relay> relays;
    for (const Item& item : cast.known[v]) {
      const auto center = static_cast<NodeId>(item[0]);
      const MaybeLabel& back = from_center[rank[center]][v];
      relays.push_back({center, static_cast<NodeId>(item[1]), Distance(item[2]),
                        back ? Distance(back->dist) : Distance()});
    }
    auto combined = local_combine(out.sources, own, relays);
    for (std::size_t i = 0; i < k; ++i) {
      out.rows[i][v] = combined[i];
      if (combined[i].finite()) out.delta_observed = std::max(out.delta_observed, combined[i].value());
    }
  }
  out.phases.push_back({"combine", {}});
  return out;
}

}  // namespace congest
