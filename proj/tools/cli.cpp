#include "cli.hpp"

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "congest/ksp.hpp"

namespace congest::cli {

namespace {

void write_to(const std::string& path, std::ostream& fallback,
              const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  body(file);
}

}  // namespace

void run_bench(const BenchOptions& o, std::ostream& out) {
  static const std::vector<std::string> known = {"ksp", "apsp", "rand-apsp",
                                                 "approx", "csssp", "blocker"};
  if (std::find(known.begin(), known.end(), o.algorithm) == known.end()) {
    throw UsageError("unknown bench algorithm: " + o.algorithm);
  }
  out << "algorithm,n,k,h,rounds,congestion,messages,verdict,phases\n";
  for (std::size_t n : o.sizes) {
    GeneratorSpec spec;
    spec.n = n;
    spec.edge_probability = o.p;
    spec.weight_high = o.lambda;
    spec.zero_fraction = o.zero_fraction;
    spec.seed = o.seed;
    WeightedGraph g = generate(spec);

    RunOptions run;
    run.algorithm = o.algorithm;
    run.seed = o.seed;
    if (o.algorithm == "csssp" || o.algorithm == "blocker") {
      const Weight lambda = std::max<Weight>(1, g.max_weight());
      run.h = choose_h(n, n, static_cast<Weight>(n) * lambda, lambda, HRule::kTheorem3);
    }
    Outcome r = run_algorithm(g, run);
    std::string phases;
    for (const auto& p : r.report["phases"]) {
      if (!phases.empty()) phases += ';';
      phases += p["name"].get<std::string>() + "=" + std::to_string(p["rounds"].get<Round>());
    }
    const auto& cfg = r.report["config"];
    out << o.algorithm << ',' << n << ',' << n << ','
        << (cfg.contains("h") ? cfg["h"].dump() : std::string("")) << ','
        << r.report["total"]["rounds"].get<Round>() << ','
        << r.report["total"]["congestion"].get<std::int64_t>() << ','
        << r.report["total"]["messages"].get<std::int64_t>() << ','
        << r.report["verdict"].get<std::string>() << ',' << phases << '\n';
  }
}

int main_with(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"CONGEST shortest-path simulator"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  GeneratorSpec spec;
  std::string kind = "gnp";
  std::optional<Weight> fixed_weight;
  std::string generate_out;
  bool undirected = false;
  auto* gen = app.add_subcommand("generate", "write a generated graph");
  gen->add_option("--kind", kind, "gnp | path | cycle | grid | layered");
  gen->add_option("--n", spec.n, "node count")->required();
  gen->add_option("--p", spec.edge_probability, "edge probability (gnp, layered)");
  gen->add_option("--lambda", spec.weight_high, "largest weight");
  gen->add_option("--weight-low", spec.weight_low, "smallest weight; negative allows negative edges");
  gen->add_option("--w", fixed_weight, "every nonzero weight equals this");
  gen->add_option("--zero-frac", spec.zero_fraction, "fraction of weight-0 edges");
  gen->add_option("--seed", spec.seed);
  gen->add_flag("--undirected", undirected);
  gen->add_option("-o,--out", generate_out, "output file (default stdout)");

  RunOptions run;
  auto* runc = app.add_subcommand("run", "run one algorithm and verify it");
  runc->add_option("graph", run.graph_path, "graph file")->required();
  runc->add_option("algorithm", run.algorithm,
                   "short-range | extension | multi-source | csssp | blocker | ksp | apsp | "
                   "rand-apsp | approx")
      ->required();
  runc->add_option("--sources,--source", run.sources, "IDs or letters, comma separated")
      ->delimiter(',');
  runc->add_option("--h", run.h, "hop bound");
  runc->add_option("--h-rule", run.h_rule, "explicit | theorem2 | theorem3 (ksp)");
  runc->add_option("--delta", run.delta, "distance cap (default n * lambda)");
  runc->add_option("--lambda", run.lambda, "weight bound (default largest weight)");
  runc->add_option("--epsilon", run.epsilon, "approx: decimal or p/q");
  runc->add_option("--seed", run.seed, "rand-apsp center sample");
  runc->add_option("--method", run.method, "csssp back-end: pipelined | bf");
  runc->add_option("--mode", run.mode, "label mode: single | frontier");
  runc->add_option("--seeds", run.seeds, "extension seeds node:distance")->delimiter(',');
  runc->add_flag("--fifo", run.fifo, "one message per edge direction per round");
  runc->add_option("--report", run.report_path, "report JSON file (default stdout)");
  runc->add_option("--csv", run.csv_path, "distances CSV file");

  BenchOptions bench;
  auto* benchc = app.add_subcommand("bench", "sweep sizes and print metrics as CSV");
  benchc->add_option("--algorithm", bench.algorithm);
  benchc->add_option("--n", bench.sizes, "sizes, comma separated")->delimiter(',');
  benchc->add_option("--p", bench.p);
  benchc->add_option("--lambda", bench.lambda);
  benchc->add_option("--zero-frac", bench.zero_fraction);
  benchc->add_option("--seed", bench.seed);
  benchc->add_option("-o,--out", bench.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      spec.kind = parse_generator_kind(kind);
      spec.directed = !undirected;
      if (fixed_weight) spec.weight_low = spec.weight_high = *fixed_weight;
      WeightedGraph g = generate(spec);
      write_to(generate_out, out, [&](std::ostream& os) { write_graph(os, g); });
      return kOk;
    }
    if (benchc->parsed()) {
      write_to(bench.out_path, out, [&](std::ostream& os) { run_bench(bench, os); });
      return kOk;
    }
    WeightedGraph g = load_graph(run.graph_path);
    Outcome r = run_algorithm(g, run);
    write_to(run.report_path, out, [&](std::ostream& os) { os << r.report.dump(2) << '\n'; });
    if (!run.csv_path.empty()) {
      write_to(run.csv_path, out, [&](std::ostream& os) {
        os << "source,target,distance\n";
        for (const std::string& row : r.csv_rows) os << row << '\n';
      });
    }
    if (!r.verified) {
      err << "verification failed: " << r.report["violation_count"] << " violation(s)\n";
      return kVerifyFailed;
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const GraphError& e) {
    err << "input: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kAlgorithm;
  }
}

}  // namespace congest::cli
