// linkpred: generate synthetic graphs, evaluate similarity indices and
// learners on held-out edges, train and save models, and benchmark every
// method on one shared split.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linkpred/linkpred.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

struct GenerateArgs {
  std::string kind = "er";
  std::size_t n = 100;
  double p = 0.05;
  std::size_t m = 3;
  std::size_t k = 4;
  double p_in = 0.3;
  double p_out = 0.01;
  std::uint64_t seed = 0;
  std::string out;
};

struct RunConfig {
  std::string input;
  std::string out_dir;
  std::string roc_out;
  std::string method = "aai";
  std::string split = "random";
  double alpha = linkpred::CncParams::kDefaultAlpha;
  std::size_t k = 50;
  std::vector<double> ratios{0.8, 0.1, 0.1};
  double negative_ratio = 1.0;
  std::uint64_t seed = 0;
  bool lenient = false;
  unsigned threads = 1;

  double svm_c = 0.01;
  double svm_eta = 0.01;
  std::size_t svm_epochs = 200;
  std::size_t gb_rounds = 100;
  double gb_eta = 0.1;
  std::size_t gb_depth = 3;
  std::size_t rf_trees = 100;
  std::size_t rf_depth = 0;
  std::size_t rf_min_leaf = 1;
  std::size_t rf_features = 0;
  std::size_t stack_folds = 5;
  std::size_t meta_trees = 50;
  std::size_t meta_depth = 4;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

linkpred::GeneratorSpec to_spec(const GenerateArgs& a) {
  linkpred::GeneratorSpec s;
  if (a.kind == "er") {
    s.kind = linkpred::GeneratorKind::kErdosRenyi;
    s.p = a.p;
  } else if (a.kind == "ba") {
    s.kind = linkpred::GeneratorKind::kBarabasiAlbert;
    s.m = a.m;
  } else if (a.kind == "sbm") {
    s.kind = linkpred::GeneratorKind::kStochasticBlock;
    s.k = a.k;
    s.p_in = a.p_in;
    s.p_out = a.p_out;
  } else {
    throw UsageError("unknown generator kind '" + a.kind + "' (expected er, ba or sbm)");
  }
  s.n = a.n;
  s.seed = a.seed;
  return s;
}

json spec_json(const linkpred::GeneratorSpec& s) {
  json j = {{"n", s.n}, {"seed", s.seed}, {"prng", "xoshiro256** seeded by splitmix64"}};
  switch (s.kind) {
    case linkpred::GeneratorKind::kErdosRenyi:
      j["kind"] = "er";
      j["p"] = s.p;
      break;
    case linkpred::GeneratorKind::kBarabasiAlbert:
      j["kind"] = "ba";
      j["m"] = s.m;
      break;
    case linkpred::GeneratorKind::kStochasticBlock:
      j["kind"] = "sbm";
      j["k"] = s.k;
      j["p_in"] = s.p_in;
      j["p_out"] = s.p_out;
      j["block_rule"] = "node i belongs to block i mod k";
      break;
  }
  return j;
}

linkpred::SplitRatios ratios_of(const RunConfig& c) {
  if (c.ratios.size() != 3) throw UsageError("--ratios needs exactly three values: train,test,valid");
  linkpred::SplitRatios r{c.ratios[0], c.ratios[1], c.ratios[2]};
  r.validate();
  return r;
}

linkpred::PipelineConfig pipeline_of(const RunConfig& c) {
  linkpred::PipelineConfig p;
  p.alpha = linkpred::CncParams(c.alpha).alpha();
  p.k = c.k;
  p.threads = std::max(1U, c.threads);
  p.svm.C = c.svm_c;
  p.svm.eta = c.svm_eta;
  p.svm.epochs = c.svm_epochs;
  p.svm.seed = c.seed;
  p.boosting.rounds = c.gb_rounds;
  p.boosting.eta = c.gb_eta;
  p.boosting.max_depth = c.gb_depth;
  p.boosting.seed = c.seed;
  p.forest.n_trees = c.rf_trees;
  p.forest.max_depth = c.rf_depth == 0 ? linkpred::kUnboundedDepth : c.rf_depth;
  p.forest.min_leaf = c.rf_min_leaf;
  p.forest.features_per_split = c.rf_features;
  p.forest.seed = c.seed;
  p.forest.threads = p.threads;
  p.stacking.folds = c.stack_folds;
  p.stacking.svm = p.svm;
  p.stacking.boosting = p.boosting;
  p.stacking.forest = p.forest;
  p.stacking.meta = p.forest;
  p.stacking.meta.n_trees = c.meta_trees;
  p.stacking.meta.max_depth = c.meta_depth == 0 ? linkpred::kUnboundedDepth : c.meta_depth;
  p.stacking.meta.features_per_split = 0;
  p.stacking.seed = c.seed;
  return p;
}

void validate(const RunConfig& c) {
  ratios_of(c);
  linkpred::CncParams check(c.alpha);
  (void)check;
  if (c.k < 1) throw UsageError("--k must be at least 1");
  if (!(c.negative_ratio > 0.0)) throw UsageError("--negative-ratio must be positive");
  if (c.split != "random" && c.split != "temporal") throw UsageError("--split must be random or temporal");
  if (!(c.svm_c > 0.0) || !(c.svm_eta > 0.0)) throw UsageError("--svm-c and --svm-eta must be positive");
  if (c.gb_rounds < 1 || !(c.gb_eta > 0.0)) throw UsageError("--gb-rounds >= 1 and --gb-eta > 0 required");
  if (c.rf_trees < 1 || c.meta_trees < 1) throw UsageError("forests need at least one tree");
  if (c.rf_features > linkpred::kFeatureCount) throw UsageError("--rf-features exceeds the feature count");
  if (c.stack_folds < 2) throw UsageError("--stack-folds must be at least 2");
}

json config_json(const RunConfig& c) {
  return {{"input", c.input},
          {"method", c.method},
          {"split", c.split},
          {"alpha", c.alpha},
          {"k", c.k},
          {"ratios", c.ratios},
          {"negative_ratio", c.negative_ratio},
          {"seed", c.seed},
          {"lenient", c.lenient},
          {"svm", {{"C", c.svm_c}, {"eta", c.svm_eta}, {"epochs", c.svm_epochs}}},
          {"gb", {{"rounds", c.gb_rounds}, {"eta", c.gb_eta}, {"max_depth", c.gb_depth}}},
          {"rf",
           {{"n_trees", c.rf_trees},
            {"max_depth", c.rf_depth},
            {"min_leaf", c.rf_min_leaf},
            {"features_per_split", c.rf_features}}},
          {"stacking", {{"folds", c.stack_folds}, {"meta_trees", c.meta_trees}, {"meta_depth", c.meta_depth}}}};
}

json params_json(const RunConfig& c) {
  return {{"alpha", c.alpha}, {"seed", c.seed}, {"ratios", c.ratios}, {"negative_ratio", c.negative_ratio}};
}

struct Prepared {
  linkpred::EdgeList edges;
  linkpred::EdgeSplit split;
};

Prepared prepare(const RunConfig& c) {
  Prepared out;
  out.edges = linkpred::read_edge_list(c.input);
  const auto policy = c.lenient ? linkpred::SelfLoopPolicy::kSkip : linkpred::SelfLoopPolicy::kStrict;
  if (c.split == "temporal") {
    if (!out.edges.has_timestamps) {
      throw linkpred::Error(linkpred::ErrorKind::kMalformedInput, "--split temporal needs a timestamp column");
    }
    out.split = linkpred::split_edges_temporal(out.edges.edges, out.edges.node_count(), ratios_of(c), c.seed,
                                               c.negative_ratio, policy);
  } else {
    linkpred::BuildStats stats;
    const auto g = linkpred::build_graph(out.edges, policy, stats);
    if (stats.skipped_self_loops > 0) {
      std::cerr << "warning: skipped " << stats.skipped_self_loops << " self-loop(s)\n";
    }
    out.split = linkpred::split_edges(g, ratios_of(c), c.seed, c.negative_ratio);
  }
  return out;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw linkpred::Error(linkpred::ErrorKind::kMalformedInput, "cannot write " + path.string());
  out << text;
}

void write_json(const fs::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

void write_node_map(const fs::path& path, const linkpred::EdgeList& edges) {
  std::ostringstream out;
  out << "id,label\n";
  for (std::size_t i = 0; i < edges.labels.size(); ++i) out << i << ',' << edges.labels[i] << '\n';
  write_text(path, out.str());
}

void write_scores(const fs::path& dir, const linkpred::MethodRun& run) {
  const std::pair<const char*, const linkpred::SetResult*> sets[] = {
      {"train", &run.train}, {"test", &run.test}, {"valid", &run.valid}};
  for (const auto& [name, set] : sets) {
    std::ostringstream out;
    linkpred::write_scored_tsv(set->scored, out);
    write_text(dir / (std::string("scores_") + name + ".tsv"), out.str());
  }
}

void write_roc(const std::string& path, const linkpred::SetResult& set) {
  if (path.empty()) return;
  std::ostringstream out;
  linkpred::write_roc_csv(linkpred::roc_points(set.scored), out);
  write_text(path, out.str());
}

linkpred::Method method_of(const RunConfig& c) {
  const auto m = linkpred::parse_method(c.method);
  if (!m) throw UsageError("unknown method '" + c.method + "' (expected cnc, jc, aai, cn, svm, gb, rf or stacking)");
  return *m;
}

json run_report(const RunConfig& c, const linkpred::MethodRun& run) {
  json j = linkpred::run_json(run);
  j["params"] = params_json(c);
  j["config"] = config_json(c);
  return j;
}

int cmd_generate(const GenerateArgs& args) {
  const auto spec = to_spec(args);
  const auto g = linkpred::generate(spec);
  std::ostringstream csv;
  linkpred::write_edge_list(g, csv);
  write_text(args.out, csv.str());
  json sidecar = spec_json(spec);
  sidecar["edges"] = g.edge_count();
  fs::path side = args.out;
  side.replace_extension(".spec.json");
  write_json(side, sidecar);
  std::cout << "wrote " << args.out << " (" << g.node_count() << " nodes, " << g.edge_count()
            << " edges) and " << side.string() << '\n';
  return kExitOk;
}

int cmd_evaluate(const RunConfig& c) {
  validate(c);
  const auto method = method_of(c);
  const auto prepared = prepare(c);
  const auto run = linkpred::run_method(prepared.split, method, pipeline_of(c));
  const fs::path dir = c.out_dir;
  fs::create_directories(dir);
  write_json(dir / "metrics.json", run_report(c, run));
  write_node_map(dir / "nodes.csv", prepared.edges);
  write_scores(dir, run);
  write_roc(c.roc_out, run.test);
  linkpred::print_table(run, std::cout);
  return kExitOk;
}

int cmd_train(const RunConfig& c) {
  validate(c);
  const auto method = method_of(c);
  if (!linkpred::is_learner(method)) {
    throw UsageError("train needs a learner method (svm, gb, rf or stacking), got '" + c.method + "'");
  }
  const auto prepared = prepare(c);
  const auto run = linkpred::run_method(prepared.split, method, pipeline_of(c));
  const fs::path dir = c.out_dir;
  fs::create_directories(dir);
  write_text(dir / "model.json", linkpred::model_to_json(*run.model).dump(1) + "\n");
  json report = run_report(c, run);
  report["model_type"] = linkpred::model_type(*run.model);
  write_json(dir / "report.json", report);
  write_node_map(dir / "nodes.csv", prepared.edges);
  write_scores(dir, run);
  write_roc(c.roc_out, run.test);
  linkpred::print_table(run, std::cout);
  return kExitOk;
}

int cmd_benchmark(const RunConfig& c) {
  validate(c);
  const auto prepared = prepare(c);
  const auto pipeline = pipeline_of(c);
  json methods = json::object();
  std::vector<std::pair<std::string, double>> ranking;
  for (linkpred::Method m : linkpred::kAllMethods) {
    const std::string name(linkpred::method_name(m));
    try {
      const auto run = linkpred::run_method(prepared.split, m, pipeline);
      methods[name] = linkpred::run_json(run);
      ranking.emplace_back(name, run.test.auc_roc);
    } catch (const linkpred::Error& e) {
      methods[name] = {{"method", name}, {"error", e.what()}};
    }
  }
  if (ranking.empty()) {
    throw linkpred::Error(linkpred::ErrorKind::kMalformedInput, "every method failed");
  }
  std::sort(ranking.begin(), ranking.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  json ranked = json::array();
  for (const auto& [name, auc] : ranking) ranked.push_back({{"method", name}, {"test_auc_roc", linkpred::round6(auc)}});
  json report = {{"ranking", ranked}, {"methods", methods}, {"params", params_json(c)}, {"config", config_json(c)}};
  const fs::path dir = c.out_dir;
  fs::create_directories(dir);
  write_json(dir / "benchmark.json", report);
  write_node_map(dir / "nodes.csv", prepared.edges);
  std::cout << "rank  method     test AUC-ROC\n";
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    char line[96];
    std::snprintf(line, sizeof line, "%4zu  %-9s  %.4f\n", i + 1, ranking[i].first.c_str(), ranking[i].second);
    std::cout << line;
  }
  return kExitOk;
}

void add_run_options(CLI::App* cmd, RunConfig& c, bool with_method) {
  cmd->add_option("-i,--input", c.input, "Edge-list CSV (src,dst[,timestamp])")->required()->check(CLI::ExistingFile);
  cmd->add_option("-o,--out-dir", c.out_dir, "Output directory")->required();
  if (with_method) cmd->add_option("--method", c.method, "cnc|jc|aai|cn|svm|gb|rf|stacking")->capture_default_str();
  cmd->add_option("--roc-out", c.roc_out, "Write test-set ROC points (fpr,tpr) to this CSV");
  cmd->add_option("--split", c.split, "random|temporal")->capture_default_str();
  cmd->add_option("--alpha", c.alpha, "CNC blend weight in [0,1]")->capture_default_str();
  cmd->add_option("--k", c.k, "K for precision@K")->capture_default_str();
  cmd->add_option("--ratios", c.ratios, "train,test,valid fractions")->delimiter(',')->expected(3)->capture_default_str();
  cmd->add_option("--negative-ratio", c.negative_ratio, "Negatives per positive")->capture_default_str();
  cmd->add_option("--seed", c.seed, "Seed for splits, sampling and training")->capture_default_str();
  cmd->add_flag("--lenient", c.lenient, "Skip self-loops instead of failing");
  cmd->add_option("--threads", c.threads, "Worker threads for scoring and forests")->capture_default_str();
  cmd->add_option("--svm-c", c.svm_c, "SVM regularization C")->capture_default_str();
  cmd->add_option("--svm-eta", c.svm_eta, "SVM learning rate")->capture_default_str();
  cmd->add_option("--svm-epochs", c.svm_epochs, "SVM epoch budget")->capture_default_str();
  cmd->add_option("--gb-rounds", c.gb_rounds, "Boosting rounds")->capture_default_str();
  cmd->add_option("--gb-eta", c.gb_eta, "Boosting learning rate")->capture_default_str();
  cmd->add_option("--gb-depth", c.gb_depth, "Boosting tree depth")->capture_default_str();
  cmd->add_option("--rf-trees", c.rf_trees, "Forest size")->capture_default_str();
  cmd->add_option("--rf-depth", c.rf_depth, "Forest tree depth (0 = unbounded)")->capture_default_str();
  cmd->add_option("--rf-min-leaf", c.rf_min_leaf, "Minimum rows per leaf")->capture_default_str();
  cmd->add_option("--rf-features", c.rf_features, "Features per split (0 = sqrt)")->capture_default_str();
  cmd->add_option("--stack-folds", c.stack_folds, "Out-of-fold folds for stacking")->capture_default_str();
  cmd->add_option("--meta-trees", c.meta_trees, "Meta forest size")->capture_default_str();
  cmd->add_option("--meta-depth", c.meta_depth, "Meta forest depth (0 = unbounded)")->capture_default_str();
  cmd->fallthrough();
}

int error_exit(const std::string& message, int code) {
  std::cerr << "error: " << message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link prediction with neighborhood indices and tree/linear learners"};
  app.require_subcommand(1);
  // Keys live in a section named after the command, e.g. [evaluate] or [train].
  app.set_config("--config", "", "TOML/INI file with one [command] section of option values; flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a seeded synthetic graph as an edge-list CSV");
  generate->add_option("--kind", gen.kind, "er|ba|sbm")->capture_default_str();
  generate->add_option("--n", gen.n, "Node count")->capture_default_str();
  generate->add_option("--p", gen.p, "ER edge probability")->capture_default_str();
  generate->add_option("--m", gen.m, "BA attachments per node")->capture_default_str();
  generate->add_option("--k", gen.k, "SBM block count")->capture_default_str();
  generate->add_option("--p-in", gen.p_in, "SBM intra-block probability")->capture_default_str();
  generate->add_option("--p-out", gen.p_out, "SBM inter-block probability")->capture_default_str();
  generate->add_option("--seed", gen.seed, "PRNG seed")->capture_default_str();
  generate->add_option("-o,--out", gen.out, "Output CSV path")->required();
  generate->fallthrough();

  RunConfig eval_cfg;
  auto* evaluate = app.add_subcommand("evaluate", "Split, score with one method, report train/test/valid metrics");
  add_run_options(evaluate, eval_cfg, true);

  RunConfig train_cfg;
  train_cfg.method = "rf";
  auto* train = app.add_subcommand("train", "Train a learner, save it, report classification metrics");
  add_run_options(train, train_cfg, true);

  RunConfig bench_cfg;
  bench_cfg.method = "all";
  auto* benchmark = app.add_subcommand("benchmark", "Run every method on one shared split");
  add_run_options(benchmark, bench_cfg, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*evaluate) return cmd_evaluate(eval_cfg);
    if (*train) return cmd_train(train_cfg);
    if (*benchmark) return cmd_benchmark(bench_cfg);
  } catch (const UsageError& e) {
    return error_exit(e.what(), kExitUsage);
  } catch (const linkpred::Error& e) {
    return error_exit(e.what(), e.kind() == linkpred::ErrorKind::kInvalidParameter ? kExitUsage : kExitData);
  } catch (const std::exception& e) {
    return error_exit(std::string("internal: ") + e.what(), kExitInternal);
  }
  return kExitUsage;
}
