#pragma once

#include "holonoise/synthesis.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace holonoise::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,
    kIoError = 2,
    kUsage = 64,
};

/// Environment variable that redirects `simulate` outputs.
inline constexpr const char* kOutputDirEnv = "HOLONOISE_OUTPUT_DIR";

/// Runs one command line (args[0] is the program name). Output and
/// diagnostics go to the given streams; files are written as requested.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a JSON experiment config. Unknown fields, wrong types and
/// malformed JSON raise FormatError naming the line/column or field.
ExperimentConfig parse_config(std::string_view json_text, std::string_view source = "config");

/// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::string& path);

} // namespace holonoise::cli
