#pragma once

#include <string>

namespace emdpoly {

enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

// Threshold from the LOG_LEVEL environment variable (error/warn/info/debug,
// case-insensitive); defaults to warn.  Read once per process.
LogLevel log_level();

bool log_enabled(LogLevel level);

// Writes "[level] msg" to the error stream when enabled.  Results always go
// to stdout, diagnostics always to stderr.
void log_line(LogLevel level, const std::string& msg);

}  // namespace emdpoly
