#include "glsoed/log.hpp"

#include <cstdlib>
#include <cstring>

namespace glsoed::log {

namespace {

Level parse_env() {
  const char* env = std::getenv("GLSOED_LOG");
  if (env == nullptr) return Level::warn;
  if (std::strcmp(env, "error") == 0) return Level::error;
  if (std::strcmp(env, "warn") == 0) return Level::warn;
  if (std::strcmp(env, "info") == 0) return Level::info;
  if (std::strcmp(env, "debug") == 0) return Level::debug;
  return Level::warn;
}

const char* tag(Level lvl) {
  switch (lvl) {
    case Level::error: return "error";
    case Level::warn: return "warn";
    case Level::info: return "info";
    case Level::debug: return "debug";
  }
  return "?";
}

}  // namespace

Level level() {
  static const Level lvl = parse_env();
  return lvl;
}

void write(Level lvl, const std::string& msg) {
  if (static_cast<int>(lvl) > static_cast<int>(level())) return;
  std::fprintf(stderr, "[glsoed %s] %s\n", tag(lvl), msg.c_str());
}

}  // namespace glsoed::log
