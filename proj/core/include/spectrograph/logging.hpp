#pragma once

#include <string_view>

namespace spectrograph::log {

// Level comes from SPECTROGRAPH_LOG (trace, debug, info, warn, error, off);
// the default is warn. Output goes to stderr.
void warn(std::string_view message);
void info(std::string_view message);
void debug(std::string_view message);

}  // namespace spectrograph::log
