#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace altseq::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

// Environment variable naming the directory that relative --out paths are
// resolved against.
inline constexpr const char* kOutDirEnv = "ALTSEQ_OUT_DIR";

// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace altseq::cli
