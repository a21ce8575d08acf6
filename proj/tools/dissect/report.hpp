#pragma once

#include <string>
#include <vector>

#include "dissect/counts.hpp"
#include "dissect/face_document.hpp"

namespace dissect::cli {

inline constexpr const char* kReportSchema = "dissect.report/1";

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2, kExitResource = 3 };

// Skeleton every report starts from: schema, tool version, command name.
Json make_report(const std::string& command);

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json big(const BigInt& value);
Json bigs(const std::vector<BigInt>& values);

// Human-readable rendering of a report for --format table.
std::string render_table(const Json& report);

}  // namespace dissect::cli
