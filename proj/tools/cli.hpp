#pragma once

// Command-line configuration and dispatch for the qnil tool.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qnil/io.hpp"
#include "qnil/minors.hpp"

namespace qnil::cli {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string cartan_spec = "A2";
  std::optional<CartanDatum> cartan;
  std::string command;  // basis, twist, minor, verify
  std::string kind;     // basis or verify family
  std::optional<Word> word;
  int height = 4;
  std::vector<int> order;
  std::string format = "json";
  std::string output;
  std::optional<int> b, d;
  std::optional<Weight> lambda;
  std::optional<Word> u, w, chart;
  MinorSign sign = MinorSign::lowest;
  std::optional<FElement> fword;
  bool inverse = false;
};

/// Returns nullopt after printing help. Throws UsageError (or a CLI11 parse error) on bad input.
std::optional<RunConfig> parse_config(int argc, const char* const* argv);

/// Comma or space separated 1-based letters, returned 0-based and checked against the rank.
Word parse_word(const std::string& s, int rank);

struct RunResult {
  int status = 0;  // 0 pass, 1 mathematical failure
  Json report;
};

RunResult run(const RunConfig& cfg);
std::string render(const Json& report, const std::string& format);

}  // namespace qnil::cli
