#pragma once
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace gtt::log {

// Threshold comes from GT_LOG (debug|info|warn|error); default warn.
inline int threshold() {
  static int lvl = [] {
    const char* e = std::getenv("GT_LOG");
    if (!e) return 2;
    if (!std::strcmp(e, "debug")) return 0;
    if (!std::strcmp(e, "info")) return 1;
    if (!std::strcmp(e, "error")) return 3;
    return 2;
  }();
  return lvl;
}

inline void emit(int lvl, const std::string& msg) {
  if (lvl < threshold()) return;
  static const char* names[] = {"debug", "info", "warn", "error"};
  std::fprintf(stderr, "[gtt][%s] %s\n", names[lvl], msg.c_str());
}

inline void debug(const std::string& m) { emit(0, m); }
inline void info(const std::string& m) { emit(1, m); }
inline void warn(const std::string& m) { emit(2, m); }
inline void error(const std::string& m) { emit(3, m); }

}  // namespace gtt::log
