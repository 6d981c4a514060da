// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lamlab/lamhull.hpp"

namespace lamlab {

/// A coordinate given as a JSON integer, a JSON float (read through its shortest decimal form),
/// a decimal or "p/q" string, or a [num, den] pair. `field` names the value in error messages.
Rational rational_from_json(const nlohmann::json& v, const std::string& field);
nlohmann::json rational_to_json(const Rational& r);

/// {"points": [[a,b],...], "boxes": [[x_lo,x_hi,y_lo,y_hi],...]}; either key may be absent.
BoxSet boxset_from_json(const nlohmann::json& j);
BoxSet boxset_from_json_text(std::string_view text);
nlohmann::json boxset_to_json(const BoxSet& s);

BoxSet read_boxset_file(const std::string& path);

} // namespace lamlab
