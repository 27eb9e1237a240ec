#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tcone/numeric.hpp"

namespace tcone::cli {

enum class Command { Gb, Cone, Member, VerifyRatio, VerifyDistance, VerifySample };

// Exit codes of the command-line tool.
enum ExitCode : int { kSuccess = 0, kUsageError = 1, kVerdictFail = 2, kInconclusive = 3 };

struct Invocation {
  Command command = Command::Gb;
  std::string input;
  std::string order = "grevlex";
  bool json = false;
  std::string point;      // member
  std::string direction;  // verify ratio / distance
  TSchedule schedule;
  double radius = 1e6;
  int trials = 100;
  std::uint64_t seed = 42;
  Thresholds thresholds;
  int perturbations = 8;
};

// Parses argv-style arguments (without the program name). Returns the exit
// code to use when parsing did not produce an invocation (help or error).
std::optional<Invocation> parse_arguments(const std::vector<std::string>& args, std::ostream& out,
                                          std::ostream& err, int& exit_code);

int run(const Invocation& invocation, std::ostream& out, std::ostream& err);

// parse_arguments followed by run.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcone::cli
