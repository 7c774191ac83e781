#pragma once

#include <string>

namespace greedy {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

// Read once from GREEDY_LOG (error|info|debug); default error.
LogLevel log_level();

void log_info(const std::string& msg);
void log_debug(const std::string& msg);

} // namespace greedy
