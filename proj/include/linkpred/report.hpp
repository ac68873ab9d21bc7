#pragma once

// JSON and text renderings of evaluation results. Every real number in a
// report is rounded to 6 significant digits.

#include <cstdio>
#include <ostream>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "linkpred/metrics.hpp"
#include "linkpred/pipeline.hpp"

namespace linkpred {

inline double round6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return std::stod(buf);
}

inline nlohmann::json report_json(const ClassificationReport& r) {
  return {{"0-precision", round6(r.negative.precision)},
          {"0-recall", round6(r.negative.recall)},
          {"0-f1_score", round6(r.negative.f1)},
          {"0-support", r.negative.support},
          {"1-precision", round6(r.positive.precision)},
          {"1-recall", round6(r.positive.recall)},
          {"1-f1_score", round6(r.positive.f1)},
          {"1-support", r.positive.support},
          {"accuracy", round6(r.accuracy)}};
}

inline nlohmann::json set_json(const SetResult& r) {
  nlohmann::json j = {{"auc_roc", round6(r.auc_roc)},
                      {"p_at_k", round6(r.p_at_k)},
                      {"k", r.k},
                      {"aupr", round6(r.aupr)},
                      {"pairs", r.scored.size()}};
  j["report"] = r.report ? report_json(*r.report) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json run_json(const MethodRun& run) {
  return {{"method", method_name(run.method)},
          {"train", set_json(run.train)},
          {"test", set_json(run.test)},
          {"valid", set_json(run.valid)}};
}

/// `u<TAB>v<TAB>score<TAB>label` rows, no header.
inline void write_scored_tsv(std::span<const ScoredPair> scored, std::ostream& out) {
  char buf[32];
  for (const ScoredPair& s : scored) {
    std::snprintf(buf, sizeof buf, "%.6g", s.score);
    out << s.u << '\t' << s.v << '\t' << buf << '\t' << s.label << '\n';
  }
}

/// `fpr,tpr` with header.
inline void write_roc_csv(std::span<const RocPoint> points, std::ostream& out) {
  char buf[64];
  out << "fpr,tpr\n";
  for (const RocPoint& p : points) {
    std::snprintf(buf, sizeof buf, "%.6g,%.6g", p.fpr, p.tpr);
    out << buf << '\n';
  }
}

/// Three-column table: one row per metric, one column per pair set.
inline void print_table(const MethodRun& run, std::ostream& out) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-10s %12s %12s %12s\n", std::string(method_name(run.method)).c_str(),
                "train", "test", "valid");
  out << buf;
  auto row = [&](const char* name, double a, double b, double c) {
    std::snprintf(buf, sizeof buf, "%-10s %12.4f %12.4f %12.4f\n", name, a, b, c);
    out << buf;
  };
  row("AUC-ROC", run.train.auc_roc, run.test.auc_roc, run.valid.auc_roc);
  char label[32];
  std::snprintf(label, sizeof label, "P@K=%zu", run.test.k);
  row(label, run.train.p_at_k, run.test.p_at_k, run.valid.p_at_k);
  row("AUPR", run.train.aupr, run.test.aupr, run.valid.aupr);
  if (run.test.report && run.valid.report && run.train.report) {
    const auto& a = *run.train.report;
    const auto& b = *run.test.report;
    const auto& c = *run.valid.report;
    row("0-prec", a.negative.precision, b.negative.precision, c.negative.precision);
    row("0-recall", a.negative.recall, b.negative.recall, c.negative.recall);
    row("0-f1", a.negative.f1, b.negative.f1, c.negative.f1);
    row("1-prec", a.positive.precision, b.positive.precision, c.positive.precision);
    row("1-recall", a.positive.recall, b.positive.recall, c.positive.recall);
    row("1-f1", a.positive.f1, b.positive.f1, c.positive.f1);
    row("accuracy", a.accuracy, b.accuracy, c.accuracy);
  }
}

}  // namespace linkpred
