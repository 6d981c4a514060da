// SPDX-License-Identifier: Apache-2.0
#include "lamlab/log.hpp"

#include <cstdlib>
#include <mutex>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "lamlab/errors.hpp"

namespace lamlab {

namespace {

std::shared_ptr<spdlog::logger> logger() {
    static std::once_flag once;
    static std::shared_ptr<spdlog::logger> l;
    std::call_once(once, [] {
        l = spdlog::stderr_color_mt("lamlab");
        l->set_pattern("[%l] %v");
        l->set_level(spdlog::level::off);
    });
    return l;
}

} // namespace

void set_log_level(std::string_view level) {
    if (level == "quiet") {
        logger()->set_level(spdlog::level::off);
    } else if (level == "info") {
        logger()->set_level(spdlog::level::info);
    } else if (level == "debug") {
        logger()->set_level(spdlog::level::debug);
    } else {
        throw ParameterError("LAMLAB_LOG must be quiet, info or debug");
    }
}

void init_logging_from_env() {
    if (const char* v = std::getenv("LAMLAB_LOG")) set_log_level(v);
}

void log_info(const std::string& msg) { logger()->info(msg); }
void log_debug(const std::string& msg) { logger()->debug(msg); }

} // namespace lamlab
