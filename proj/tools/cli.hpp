#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace eigenkit::cli {

enum ExitCode { kOk = 0, kValidation = 2, kPrecision = 3, kInternal = 4 };

struct RunConfig {
  std::string command;
  unsigned p = 5;
  int e = 1;
  int prec = 20;
  int g = 2;
  int deg = 12;          // truncation degree D of the induction module
  int deg_a = 16;        // truncation degree D_A of the affinoid
  int N = -1;            // Fredholm truncation; -1 means every stored column
  std::string h = "2";
  std::string side = "below";
  std::string weight = "3,1";
  std::string t = "2,3";
  int rank = 1;
  int family_deg = 8;
  int lambda = 0;        // family eigenvalue at S = 0; 0 means p
  std::string out = "json";
  std::string out_file;

  Json echo() const;
};

// Payload and certificates of one command.
struct CommandResult {
  Json payload;
  Json certificates;
};

CommandResult run_command(const RunConfig& cfg);

// Full envelope as emitted on stdout.
Json envelope(const RunConfig& cfg, const CommandResult& r);

// argv-style entry point; output goes to `out` unless --out-file is given, timing to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eigenkit::cli
