#pragma once

#include <string>

namespace statdisc {

enum class log_level { error = 0, info = 1, debug = 2 };

/// Level comes from STATDISC_LOG={error,info,debug}, read once; messages go
/// to stderr so report output on stdout stays byte-identical.
log_level current_log_level();

void log_message(log_level level, const std::string& message);

inline void log_error(const std::string& m) { log_message(log_level::error, m); }
inline void log_info(const std::string& m) { log_message(log_level::info, m); }
inline void log_debug(const std::string& m) { log_message(log_level::debug, m); }

} // namespace statdisc
