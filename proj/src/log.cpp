#include "greedy/log.hpp"

#include <cstdlib>
#include <iostream>

namespace greedy {

LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("GREEDY_LOG");
        if (!env) return LogLevel::Error;
        const std::string v(env);
        if (v == "debug") return LogLevel::Debug;
        if (v == "info") return LogLevel::Info;
        return LogLevel::Error;
    }();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::Info) {
        std::cerr << "[info] " << msg << "\n";
    }
}

void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::Debug) {
        std::cerr << "[debug] " << msg << "\n";
    }
}

} // namespace greedy
