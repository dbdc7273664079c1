#ifndef SCENMINE_LOG_HPP_
#define SCENMINE_LOG_HPP_

#include <sstream>
#include <string>

namespace scenmine {

enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

// Level comes from SCENARIO_MINER_LOG (error|warn|info|debug); default warn.
LogLevel log_level();
void set_log_level(LogLevel level);
bool log_enabled(LogLevel level);
void log_message(LogLevel level, const std::string& message);

}  // namespace scenmine

#define SCENMINE_LOG(level, expr)                              \
  do {                                                         \
    if (::scenmine::log_enabled(level)) {                      \
      std::ostringstream scenmine_log_stream_;                 \
      scenmine_log_stream_ << expr;                            \
      ::scenmine::log_message(level, scenmine_log_stream_.str()); \
    }                                                          \
  } while (0)

#define LOG_ERROR(expr) SCENMINE_LOG(::scenmine::LogLevel::kError, expr)
#define LOG_WARN(expr) SCENMINE_LOG(::scenmine::LogLevel::kWarn, expr)
#define LOG_INFO(expr) SCENMINE_LOG(::scenmine::LogLevel::kInfo, expr)
#define LOG_DEBUG(expr) SCENMINE_LOG(::scenmine::LogLevel::kDebug, expr)

#endif  // SCENMINE_LOG_HPP_
