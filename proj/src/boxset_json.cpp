// SPDX-License-Identifier: Apache-2.0
#include "lamlab/boxset_json.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "lamlab/errors.hpp"

namespace lamlab {

using nlohmann::json;

Rational rational_from_json(const json& v, const std::string& field) {
    try {
        if (v.is_number_integer()) {
            return v.is_number_unsigned() ? Rational(v.get<std::uint64_t>()) : Rational(v.get<std::int64_t>());
        }
        if (v.is_number_float()) {
            char buf[64];
            auto res = std::to_chars(buf, buf + sizeof buf, v.get<double>());
            return parse_rational(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
        }
        if (v.is_string()) {
            return parse_rational(v.get<std::string>());
        }
        if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer()) {
            const BigInt num = v[0].get<std::int64_t>();
            const BigInt den = v[1].get<std::int64_t>();
            if (den == 0) throw ParameterError("zero denominator");
            return Rational(num, den);
        }
        if (v.is_array() && v.size() == 2 && v[0].is_string() && v[1].is_string()) {
            return parse_rational(v[0].get<std::string>() + "/" + v[1].get<std::string>());
        }
    } catch (const ParameterError& e) {
        throw ParameterError("invalid coordinate at '" + field + "': " + e.what());
    }
    throw ParameterError("invalid coordinate at '" + field + "': expected number, decimal string or [num,den]");
}

json rational_to_json(const Rational& r) {
    if (is_integer(r)) {
        const BigInt n = boost::multiprecision::numerator(r);
        if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
            return n.convert_to<std::int64_t>();
        }
        return n.str();
    }
    const std::string s = to_string(r);
    if (s.find('/') == std::string::npos) {
        return s;
    }
    const BigInt n = boost::multiprecision::numerator(r), d = boost::multiprecision::denominator(r);
    const auto fits = [](const BigInt& x) {
        return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
    };
    if (fits(n) && fits(d)) {
        return json::array({n.convert_to<std::int64_t>(), d.convert_to<std::int64_t>()});
    }
    return json::array({n.str(), d.str()});
}

BoxSet boxset_from_json(const json& j) {
    if (!j.is_object()) {
        throw ParameterError("box set JSON must be an object with 'points' and/or 'boxes'");
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() != "points" && it.key() != "boxes") {
            throw ParameterError("unknown field '" + it.key() + "' in box set JSON");
        }
    }
    BoxSet s;
    if (j.contains("points")) {
        const json& pts = j.at("points");
        if (!pts.is_array()) throw ParameterError("field 'points' must be an array");
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const std::string name = "points[" + std::to_string(i) + "]";
            if (!pts[i].is_array() || pts[i].size() != 2) {
                throw ParameterError("field '" + name + "' must be a pair [a, b]");
            }
            s.boxes.push_back(Box::point(rational_from_json(pts[i][0], name + "[0]"),
                                         rational_from_json(pts[i][1], name + "[1]")));
        }
    }
    if (j.contains("boxes")) {
        const json& bxs = j.at("boxes");
        if (!bxs.is_array()) throw ParameterError("field 'boxes' must be an array");
        for (std::size_t i = 0; i < bxs.size(); ++i) {
            const std::string name = "boxes[" + std::to_string(i) + "]";
            if (!bxs[i].is_array() || bxs[i].size() != 4) {
                throw ParameterError("field '" + name + "' must be [x_lo, x_hi, y_lo, y_hi]");
            }
            Rational c[4];
            for (std::size_t q = 0; q < 4; ++q) {
                c[q] = rational_from_json(bxs[i][q], name + "[" + std::to_string(q) + "]");
            }
            if (c[0] > c[1] || c[2] > c[3]) {
                throw ParameterError("field '" + name + "' has a reversed interval");
            }
            s.boxes.emplace_back(c[0], c[1], c[2], c[3]);
        }
    }
    return s;
}

BoxSet boxset_from_json_text(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParameterError(std::string("malformed JSON: ") + e.what());
    }
    return boxset_from_json(j);
}

json boxset_to_json(const BoxSet& s) {
    json points = json::array();
    json boxes = json::array();
    for (const auto& b : s.boxes) {
        if (b.is_point()) {
            points.push_back(json::array({rational_to_json(b.x_lo), rational_to_json(b.y_lo)}));
        } else {
            boxes.push_back(json::array({rational_to_json(b.x_lo), rational_to_json(b.x_hi), rational_to_json(b.y_lo),
                                         rational_to_json(b.y_hi)}));
        }
    }
    json out = json::object();
    if (!points.empty() || boxes.empty()) out["points"] = points;
    if (!boxes.empty()) out["boxes"] = boxes;
    return out;
}

BoxSet read_boxset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParameterError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return boxset_from_json_text(ss.str());
}

} // namespace lamlab
