#pragma once

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

namespace enclose {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

inline LogLevel log_level() {
    static const LogLevel lvl = [] {
        const char* e = std::getenv("ENCLOSE_LOG");
        if (!e) return LogLevel::Error;
        std::string s(e);
        if (s == "debug") return LogLevel::Debug;
        if (s == "info") return LogLevel::Info;
        return LogLevel::Error;
    }();
    return lvl;
}

inline void log_line(LogLevel lvl, const std::string& msg) {
    if (static_cast<int>(lvl) <= static_cast<int>(log_level())) {
        const char* tag = lvl == LogLevel::Error ? "error" : lvl == LogLevel::Info ? "info" : "debug";
        std::cerr << "[" << tag << "] " << msg << "\n";
    }
}

inline void log_error(const std::string& msg) { log_line(LogLevel::Error, msg); }
inline void log_info(const std::string& msg) { log_line(LogLevel::Info, msg); }
inline void log_debug(const std::string& msg) { log_line(LogLevel::Debug, msg); }

} // namespace enclose
