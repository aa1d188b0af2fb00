#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "congest/engine.hpp"
#include "congest/graph.hpp"
#include "congest/oracle.hpp"

namespace congest {

using Rational = boost::rational<std::int64_t>;

struct ZeroReach {
  std::vector<std::vector<bool>> reach;  // reach[u][v], reflexive
  RoundMetrics metrics;
};

// One flood per source over weight-0 edges, sources one after another.
ZeroReach zero_reachability(const WeightedGraph& g, const EngineConfig& config = {});

// 0 -> 1, w -> n^2 w.
WeightedGraph scale_weights(const WeightedGraph& g);

// APSP on a positive-weight graph; appends the phases it ran.
using ApspSubroutine = std::function<DistanceMatrix(
    const WeightedGraph&, const EngineConfig&, std::vector<Phase>&)>;

// Distributed Bellman-Ford from every node to n - 1 hops.
DistanceMatrix exact_subroutine(const WeightedGraph& g, const EngineConfig& config,
                                std::vector<Phase>& phases);

struct ApproxConfig {
  Rational epsilon{1, 2};
  ApspSubroutine subroutine = exact_subroutine;
  EngineConfig engine;
};

struct ApproxResult {
  std::size_t n = 0;
  Rational epsilon;
  // est[u][v]; nullopt when v is unreachable from u
  std::vector<std::vector<std::optional<Rational>>> est;
  std::vector<Phase> phases;

  RoundMetrics total() const { return total_of(phases); }
};

// Zero-reachable pairs get 0; every other pair gets the subroutine's distance
// in the scaled graph divided by n^2. Throws EpsilonTooSmall unless
// epsilon > 3/n.
ApproxResult approx_apsp(const WeightedGraph& g, const ApproxConfig& config = {});

}  // namespace congest
