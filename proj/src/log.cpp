#include "log.hpp"

#include <cstdlib>
#include <iostream>

namespace statdisc {

log_level current_log_level() {
    static const log_level level = [] {
        const char* env = std::getenv("STATDISC_LOG");
        if (env == nullptr) return log_level::error;
        const std::string value(env);
        if (value == "debug") return log_level::debug;
        if (value == "info") return log_level::info;
        return log_level::error;
    }();
    return level;
}

void log_message(log_level level, const std::string& message) {
    if (static_cast<int>(level) > static_cast<int>(current_log_level())) return;
    const char* tag = level == log_level::error   ? "error"
                      : level == log_level::info ? "info"
                                                 : "debug";
    std::cerr << "[statdisc:" << tag << "] " << message << '\n';
}

} // namespace statdisc
