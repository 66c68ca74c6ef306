#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qtor::cli {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string boundary = "();();()";
  std::string level = "generic";
  int min_degree = 0;
  int max_degree = 3;
  int order = 8;
  std::string modes = "-2..2";
  std::uint64_t seed = 1;
  int bound = 16;
  bool counts = false;
  bool quotient = false;
  std::string forbidden_from_resonance;
  std::string module = "macmahon";
  std::optional<std::pair<int, std::size_t>> fault;

  // character / conjecture / gz / limit / tensor
  std::string series = "macmahon";
  int k = 0;
  int id = 1;
  int m = 1;
  int n = 1;
  std::string alpha;
  std::string gamma;
  int c = 0;
  int window = 2;
  std::string abc;
  std::string q2 = "2/3";
  std::string u = "5/7";
};

/// Result of one command: the payload and the exit code (0 pass, 1 math failure).
struct Outcome {
  nlohmann::json result;
  int exit_code = 0;
};

std::optional<std::pair<int, int>> parse_level(const std::string& text);
std::pair<int, int> parse_pair(const std::string& text);
std::pair<int, int> parse_range(const std::string& text);
std::vector<int> parse_ints(const std::string& text);

Outcome cmd_enumerate(const RunConfig& cfg);
Outcome cmd_verify(const RunConfig& cfg);
Outcome cmd_psi(const RunConfig& cfg);
Outcome cmd_character(const RunConfig& cfg);
Outcome cmd_conjecture(const RunConfig& cfg);
Outcome cmd_gz(const RunConfig& cfg);
Outcome cmd_limit(const RunConfig& cfg);
Outcome cmd_tensor(const RunConfig& cfg);

/// json, csv or text.
std::string render(const nlohmann::json& result, const std::string& format);

}  // namespace qtor::cli
