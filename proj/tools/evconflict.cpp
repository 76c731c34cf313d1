// Command-line front end: measure, combine, sweep, gram-check.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evconflict/document.hpp"
#include "evconflict/fusion.hpp"
#include "evconflict/measures.hpp"
#include "evconflict/sweep.hpp"

namespace {

using namespace evconflict;

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kComputation = 3 };

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::TotalConflict:
    case ErrorCode::FrameTooLargeForMeasure:
    case ErrorCode::FrameTooLargeForCheck:
    case ErrorCode::InternalConsistency:
    case ErrorCode::BothEmpty:
    case ErrorCode::Io:
      return kComputation;
    default:
      return kValidation;
  }
}

std::string full(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, value);
  return buf;
}

std::string rounded(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

std::string render_report(const ConflictReport& r, const std::string& first,
                          const std::string& second, std::size_t frame_size, int precision) {
  std::ostringstream os;
  os << "pair: " << first << ", " << second << " (N = " << frame_size << ")\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-10s %-26s %s\n", "measure", "value", "4 dp");
  os << line;
  auto row = [&](const char* name, double v) {
    std::snprintf(line, sizeof line, "%-10s %-26s %s\n", name, full(v, precision).c_str(),
                  rounded(v).c_str());
    os << line;
  };
  row("k", r.k);
  row("d_BBA", r.d_bba);
  row("difBetP", r.dif_betp);
  if (r.cor) {
    row("cor", *r.cor);
  } else {
    std::snprintf(line, sizeof line, "%-10s %-26s %s\n", "cor", "n/a (N > 24)", "n/a");
    os << line;
  }
  row("r_BPA", r.r_bpa);
  row("k_r", r.k_r);
  if (r.liu) {
    os << "Liu cf     <" << rounded(r.liu->k) << ", " << rounded(r.liu->dif_betp)
       << "> epsilon = " << full(r.liu->epsilon, precision)
       << (r.liu->in_conflict ? ": in conflict\n" : ": not in conflict\n");
  }
  return os.str();
}

struct PairOptions {
  std::string input;
  std::vector<std::string> pair;
  std::string output;
};

int run_measure(const PairOptions& opts, std::optional<double> epsilon, int precision) {
  const auto doc = load_document(opts.input);
  const auto& m1 = doc.find(opts.pair[0]);
  const auto& m2 = doc.find(opts.pair[1]);
  const auto report = conflict_report(m1, m2, epsilon);
  std::cout << render_report(report, opts.pair[0], opts.pair[1], doc.frame.size(), precision);
  if (!opts.output.empty()) {
    write_file_atomic(opts.output, report_to_json(report, opts.pair[0], opts.pair[1]));
  }
  return kOk;
}

int run_combine(const PairOptions& opts, int precision) {
  const auto doc = load_document(opts.input);
  const auto& m1 = doc.find(opts.pair[0]);
  const auto& m2 = doc.find(opts.pair[1]);
  const auto result = combine_dempster(m1, m2);

  BpaDocument out{doc.frame, {{opts.pair[0] + "+" + opts.pair[1], result.combined}}};
  const std::string text = dump_document(out);
  const std::string k_line = "k = " + full(result.k, precision) + "\n";
  if (opts.output.empty()) {
    std::cout << text;
    std::cerr << k_line;
  } else {
    write_file_atomic(opts.output, text);
    std::cout << k_line;
  }
  return kOk;
}

int run_sweep_command(const std::string& output, std::size_t frame_size) {
  const auto rows = run_sweep(frame_size);
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  if (output.empty()) {
    std::cout << csv.str();
  } else {
    write_file_atomic(output, csv.str());
    std::cout << "wrote " << rows.size() << " rows to " << output << "\n";
  }
  return kOk;
}

int run_gram_check(std::size_t n) {
  const auto check = gram_check(n);
  std::cout << check.dimension << "×" << check.dimension << ": "
            << (check.positive_definite ? "positive definite" : "NOT positive definite")
            << " (min pivot " << full(check.min_pivot, 6) << ")\n";
  return check.positive_definite ? kOk : kComputation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conflict and correlation measures for Dempster-Shafer mass functions"};
  app.require_subcommand(1);

  PairOptions pair_opts;
  std::optional<double> epsilon;
  int precision = 17;
  std::string sweep_output;
  std::size_t sweep_frame = kSweepFrameSize;
  std::size_t gram_n = 0;

  auto add_pair_options = [&](CLI::App* cmd) {
    cmd->add_option("--input", pair_opts.input, "BPA document (JSON)")->required();
    cmd->add_option("--pair", pair_opts.pair, "Names of the two BPAs")
        ->required()
        ->expected(2);
    cmd->add_option("--precision", precision, "Significant digits for full-precision values")
        ->check(CLI::Range(1, 17));
  };

  auto* measure = app.add_subcommand("measure", "Report every conflict measure for a pair");
  add_pair_options(measure);
  measure->add_option("--epsilon", epsilon, "Liu's conflict tolerance threshold in (0, 1)");
  measure->add_option("--output", pair_opts.output, "Also write the report as JSON");

  auto* combine = app.add_subcommand("combine", "Combine a pair with Dempster's rule");
  add_pair_options(combine);
  combine->add_option("--output", pair_opts.output, "Write the combined document here");

  auto* sweep = app.add_subcommand("sweep", "Nested-subset conflict sweep (CSV)");
  sweep->add_option("--output", sweep_output, "CSV path (stdout when omitted)");
  sweep->add_option("--frame-size", sweep_frame, "Frame size, 7..63")
      ->check(CLI::Range(kMinSweepFrameSize, kMaxFrameSize));

  auto* gram = app.add_subcommand("gram-check", "Check positive-definiteness of the Jaccard matrix");
  gram->add_option("-n,--size", gram_n, "Frame size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (measure->parsed()) return run_measure(pair_opts, epsilon, precision);
    if (combine->parsed()) return run_combine(pair_opts, precision);
    if (sweep->parsed()) return run_sweep_command(sweep_output, sweep_frame);
    if (gram->parsed()) return run_gram_check(gram_n);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kUsage;
}
