#pragma once

#include <string>

#include "json.hpp"
#include "tlpal/pipeline.hpp"

namespace tlpal {

std::string to_string(Verdict v);

/// Machine-readable report. Big numbers and balls are serialised as decimal
/// strings so that nothing is lost to doubles.
nlohmann::json to_json(const VerificationReport& report);

/// Human-readable transcript naming each bound and reduction step.
std::string render_text(const VerificationReport& report);

std::string render(const VerificationReport& report, OutputFormat format);

}  // namespace tlpal
