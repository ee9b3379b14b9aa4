#include "ctxsim/logging.hpp"

#include <cstdlib>
#include <string>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

namespace ctxsim {

void configure_logging() {
  auto logger = spdlog::stderr_logger_mt("ctxsim");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%H:%M:%S.%e] [%l] %v");
  spdlog::level::level_enum level = spdlog::level::warn;
  if (const char* env = std::getenv("CTXSIM_LOG"); env != nullptr && *env != '\0') {
    level = spdlog::level::from_str(env);
    // from_str maps unknown names to "off"; keep warnings in that case.
    if (level == spdlog::level::off && std::string(env) != "off") {
      level = spdlog::level::warn;
    }
  }
  spdlog::set_level(level);
}

}  // namespace ctxsim
