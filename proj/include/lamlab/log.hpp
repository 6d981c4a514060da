// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

namespace lamlab {

/// quiet, info or debug. Throws ParameterError for anything else.
void set_log_level(std::string_view level);
/// Applies LAMLAB_LOG when set; the default is quiet.
void init_logging_from_env();

void log_info(const std::string& msg);
void log_debug(const std::string& msg);

} // namespace lamlab
