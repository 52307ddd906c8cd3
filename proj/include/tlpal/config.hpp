#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "tlpal/bigint.hpp"
#include "tlpal/certified_real.hpp"

namespace tlpal {

enum class OutputFormat { json, text };

struct PipelineConfig {
  std::size_t n_low_max = 500;
  unsigned precision_digits = kDefaultPrecisionDigits;
  unsigned max_precision_digits = kMaxPrecisionDigits;
  BigInt M_round1 = pow10(51);
  BigInt C_lll = pow10(110);
  OutputFormat output_format = OutputFormat::json;
  /// Worker threads for the per-case sweeps; 0 picks the hardware count.
  unsigned threads = 0;

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

/// Integer literal: plain digits, "1e51" or "10^51".
BigInt parse_big_integer(std::string_view text);

OutputFormat parse_output_format(std::string_view text);
std::string to_string(OutputFormat f);

/// `key = value` lines, '#' comments, optional quotes around values. Unknown
/// keys are an error. Fields not mentioned keep their value from `base`.
PipelineConfig parse_config(std::string_view text, PipelineConfig base = {});
PipelineConfig load_config_file(const std::filesystem::path& path, PipelineConfig base = {});

}  // namespace tlpal
