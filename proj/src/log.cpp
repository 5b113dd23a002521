#include "emdpoly/log.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iostream>

namespace emdpoly {

namespace {

LogLevel parse_level() {
  const char* env = std::getenv("LOG_LEVEL");
  if (env == nullptr) {
    return LogLevel::kWarn;
  }
  std::string value(env);
  std::transform(value.begin(), value.end(), value.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (value == "error") return LogLevel::kError;
  if (value == "warn" || value == "warning") return LogLevel::kWarn;
  if (value == "info") return LogLevel::kInfo;
  if (value == "debug") return LogLevel::kDebug;
  return LogLevel::kWarn;
}

const char* level_name(LogLevel level) {
  switch (level) {
    case LogLevel::kError: return "error";
    case LogLevel::kWarn: return "warn";
    case LogLevel::kInfo: return "info";
    case LogLevel::kDebug: return "debug";
  }
  return "?";
}

}  // namespace

LogLevel log_level() {
  static const LogLevel level = parse_level();
  return level;
}

bool log_enabled(LogLevel level) {
  return static_cast<int>(level) <= static_cast<int>(log_level());
}

void log_line(LogLevel level, const std::string& msg) {
  if (log_enabled(level)) {
    std::cerr << "[" << level_name(level) << "] " << msg << "\n";
  }
}

}  // namespace emdpoly
