#include "tlpal/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tlpal {

void PipelineConfig::validate() const {
  if (n_low_max < 3) throw std::invalid_argument("n_low_max must be >= 3");
  if (precision_digits < 30) throw std::invalid_argument("precision_digits must be >= 30");
  if (max_precision_digits < precision_digits) {
    throw std::invalid_argument("max_precision_digits must be >= precision_digits");
  }
  if (M_round1 <= 1) throw std::invalid_argument("M_round1 must be > 1");
  if (C_lll < 1) throw std::invalid_argument("C_lll must be >= 1");
}

namespace {

std::string trim(std::string_view s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  auto b = std::find_if(s.begin(), s.end(), not_space);
  auto e = std::find_if(s.rbegin(), s.rend(), not_space).base();
  return b < e ? std::string(b, e) : std::string();
}

unsigned long parse_unsigned(const std::string& key, const std::string& value) {
  const BigInt v = parse_big_integer(value);
  if (v < 0 || !v.fits_ulong_p()) throw std::invalid_argument(key + ": out of range");
  return v.get_ui();
}

}  // namespace

BigInt parse_big_integer(std::string_view text) {
  const std::string s = trim(text);
  const auto all_digits = [](const std::string& t) {
    return !t.empty() && std::all_of(t.begin(), t.end(),
                                     [](unsigned char c) { return std::isdigit(c); });
  };
  if (all_digits(s)) return BigInt(s, 10);
  if (const auto e = s.find_first_of("eE"); e != std::string::npos) {
    const std::string mant = s.substr(0, e), exp = s.substr(e + 1);
    if (all_digits(mant) && all_digits(exp)) return BigInt(mant, 10) * pow10(std::stoul(exp));
  }
  if (s.rfind("10^", 0) == 0 && all_digits(s.substr(3))) return pow10(std::stoul(s.substr(3)));
  throw std::invalid_argument("not an integer literal: '" + s + "'");
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::json;
  if (text == "text") return OutputFormat::text;
  throw std::invalid_argument("output format must be json or text");
}

std::string to_string(OutputFormat f) { return f == OutputFormat::json ? "json" : "text"; }

PipelineConfig parse_config(std::string_view text, PipelineConfig base) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(body.substr(0, eq));
    std::string value = trim(body.substr(eq + 1));
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
        value.back() == value.front()) {
      value = value.substr(1, value.size() - 2);
    }
    if (key == "n_low_max") {
      base.n_low_max = parse_unsigned(key, value);
    } else if (key == "precision_digits") {
      base.precision_digits = static_cast<unsigned>(parse_unsigned(key, value));
    } else if (key == "max_precision_digits") {
      base.max_precision_digits = static_cast<unsigned>(parse_unsigned(key, value));
    } else if (key == "M_round1") {
      base.M_round1 = parse_big_integer(value);
    } else if (key == "C_lll") {
      base.C_lll = parse_big_integer(value);
    } else if (key == "output_format") {
      base.output_format = parse_output_format(value);
    } else if (key == "threads") {
      base.threads = static_cast<unsigned>(parse_unsigned(key, value));
    } else {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" +
                                  key + "'");
    }
  }
  return base;
}

PipelineConfig load_config_file(const std::filesystem::path& path, PipelineConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::move(base));
}

}  // namespace tlpal
