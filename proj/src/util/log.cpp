#include "util/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <mutex>

namespace nflux::log {

namespace {

Level parse_env() {
  const char* v = std::getenv("NARRATIVE_FLUX_LOG");
  if (!v) return Level::kWarn;
  std::string s(v);
  if (s == "trace") return Level::kTrace;
  if (s == "debug") return Level::kDebug;
  if (s == "info") return Level::kInfo;
  if (s == "warn") return Level::kWarn;
  if (s == "error") return Level::kError;
  if (s == "off") return Level::kOff;
  return Level::kWarn;
}

Level g_threshold = parse_env();
std::mutex g_mu;

const char* name(Level lvl) {
  switch (lvl) {
    case Level::kTrace: return "trace";
    case Level::kDebug: return "debug";
    case Level::kInfo: return "info";
    case Level::kWarn: return "warn";
    case Level::kError: return "error";
    default: return "?";
  }
}

}  // namespace

Level threshold() { return g_threshold; }
void set_threshold(Level lvl) { g_threshold = lvl; }

void write(Level lvl, const std::string& msg) {
  std::lock_guard<std::mutex> lock(g_mu);
  std::fprintf(stderr, "[nflux %s] %s\n", name(lvl), msg.c_str());
}

}  // namespace nflux::log
