#pragma once

#include <sstream>
#include <string>

namespace nflux::log {

enum class Level { kTrace = 0, kDebug, kInfo, kWarn, kError, kOff };

// Level comes from NARRATIVE_FLUX_LOG (trace|debug|info|warn|error|off),
// default "warn". Output goes to stderr so report directories stay clean.
Level threshold();
void set_threshold(Level lvl);
void write(Level lvl, const std::string& msg);

namespace detail {
template <typename... Args>
std::string concat(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}
}  // namespace detail

template <typename... Args>
void info(Args&&... args) {
  if (threshold() <= Level::kInfo) write(Level::kInfo, detail::concat(args...));
}

template <typename... Args>
void warn(Args&&... args) {
  if (threshold() <= Level::kWarn) write(Level::kWarn, detail::concat(args...));
}

template <typename... Args>
void debug(Args&&... args) {
  if (threshold() <= Level::kDebug) write(Level::kDebug, detail::concat(args...));
}

template <typename... Args>
void error(Args&&... args) {
  if (threshold() <= Level::kError) write(Level::kError, detail::concat(args...));
}

}  // namespace nflux::log
