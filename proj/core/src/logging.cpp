#include "spectrograph/logging.hpp"

#include <cstdlib>
#include <memory>
#include <string>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

namespace spectrograph::log {
namespace {

std::shared_ptr<spdlog::logger> make_logger() {
  auto logger = std::make_shared<spdlog::logger>(
      "spectrograph", std::make_shared<spdlog::sinks::stderr_sink_mt>());
  logger->set_pattern("[%l] %v");
  auto level = spdlog::level::warn;
  if (const char* env = std::getenv("SPECTROGRAPH_LOG")) {
    level = spdlog::level::from_str(env);
  }
  logger->set_level(level);
  return logger;
}

spdlog::logger& logger() {
  static const std::shared_ptr<spdlog::logger> instance = make_logger();
  return *instance;
}

}  // namespace

void warn(std::string_view message) { logger().warn("{}", message); }
void info(std::string_view message) { logger().info("{}", message); }
void debug(std::string_view message) { logger().debug("{}", message); }

}  // namespace spectrograph::log
