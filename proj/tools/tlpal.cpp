// tlpal: search, bound and reduce Tribonacci-Lucas numbers that are
// palindromic concatenations of two repdigits.
//
// Exit status: 0 success (verify: verified), 2 inconclusive, 1 error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tlpal/config.hpp"
#include "tlpal/pipeline.hpp"
#include "tlpal/report.hpp"

namespace {

struct Options {
  std::optional<std::size_t> n_max;
  std::optional<unsigned> precision;
  std::optional<std::string> format;
  std::optional<std::string> config_path;
  std::optional<unsigned> threads;
  std::string output;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--n-max", o.n_max, "Largest index covered by the direct search");
  sub->add_option("--precision", o.precision, "Initial working precision in decimal digits");
  sub->add_option("--format", o.format, "Output format: json or text");
  sub->add_option("--config", o.config_path, "Configuration file (key = value lines)");
  sub->add_option("--threads", o.threads, "Worker threads (0 = hardware count)");
  sub->add_option("--output", o.output, "Write the report to this file instead of stdout");
}

tlpal::PipelineConfig make_config(const Options& o) {
  tlpal::PipelineConfig c;
  if (o.config_path) c = tlpal::load_config_file(*o.config_path);
  if (o.n_max) c.n_low_max = *o.n_max;
  if (o.precision) c.precision_digits = *o.precision;
  if (o.format) c.output_format = tlpal::parse_output_format(*o.format);
  if (o.threads) c.threads = *o.threads;
  c.validate();
  return c;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tribonacci-Lucas palindromic repdigit concatenations"};
  app.require_subcommand(1);
  Options opts;
  CLI::App* search = app.add_subcommand("search", "Direct search for solutions with n <= n-max");
  CLI::App* bounds = app.add_subcommand("bounds", "Initial bounds from linear forms in logarithms");
  CLI::App* reduce = app.add_subcommand("reduce", "Initial bounds and the three reduction rounds");
  CLI::App* verify = app.add_subcommand("verify", "Full pipeline with verdict");
  for (CLI::App* sub : {search, bounds, reduce, verify}) add_common(sub, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const tlpal::PipelineConfig config = make_config(opts);
    tlpal::Stages stages = tlpal::Stages::all;
    if (search->parsed()) stages = tlpal::Stages::search;
    else if (bounds->parsed()) stages = tlpal::Stages::bounds;
    else if (reduce->parsed()) stages = tlpal::Stages::reduce;

    const tlpal::VerificationReport report = tlpal::run_pipeline(config, stages);
    emit(tlpal::render(report, config.output_format), opts.output);

    if (verify->parsed()) return report.verdict == tlpal::Verdict::verified ? 0 : 2;
    if (reduce->parsed()) {
      const bool ok = report.round1 && report.round1->conclusive && report.round2 &&
                      report.round2->conclusive && report.round3 && report.round3->conclusive;
      return ok ? 0 : 2;
    }
    if (bounds->parsed()) return report.initial ? 0 : 2;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "tlpal: " << e.what() << "\n";
    return 1;
  }
}
