// SPDX-License-Identifier: Apache-2.0
#include <charconv>
#include <cmath>
#include <sstream>

#include "lamlab/errors.hpp"
#include "lamlab/harness.hpp"
#include "lamlab/rational.hpp"

namespace lamlab {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, static_cast<std::size_t>(r.ptr - buf));
}

namespace {

std::string join_k(const std::vector<int>& k) {
    std::string s;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(k[i]);
    }
    return s;
}

std::string csv_row(const CaseReport& r) {
    std::string s;
    s += format_double(r.h) + ',' + format_double(r.alpha) + ',' + std::to_string(r.L) + ',' + join_k(r.k_list) + ',';
    s += format_double(r.E_h) + ',' + format_double(r.bound) + ',' + format_double(r.sup_grad) + ',';
    s += std::to_string(r.card_sigma) + ',' + format_double(r.runtime_ms) + '\n';
    return s;
}

double parse_double(std::string_view t, const char* what) {
    double v = 0;
    auto r = std::from_chars(t.data(), t.data() + t.size(), v);
    if (r.ec != std::errc() || r.ptr != t.data() + t.size()) {
        throw ParameterError(std::string("cannot parse ") + what + " value '" + std::string(t) + "'");
    }
    return v;
}

long parse_long(std::string_view t, const char* what) {
    long v = 0;
    auto r = std::from_chars(t.data(), t.data() + t.size(), v);
    if (r.ec != std::errc() || r.ptr != t.data() + t.size()) {
        throw ParameterError(std::string("cannot parse ") + what + " value '" + std::string(t) + "'");
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

} // namespace

std::string csv_header() { return "h,alpha,L,k_list,E_h,bound,sup_grad,card_sigma,runtime_ms\n"; }

std::string emit_csv(const CaseReport& r) { return csv_header() + csv_row(r); }

std::string emit_csv(const SweepResult& s) {
    std::string out = csv_header();
    for (const auto& c : s.cases) out += csv_row(c);
    if (s.fit) {
        out += "# fit slope=" + format_double(s.fit->slope) + " intercept=" + format_double(s.fit->intercept) +
               " C=" + format_double(s.fit->C) + " points=" + std::to_string(s.fit->points) +
               " target=" + format_double(s.target_rate) + '\n';
    }
    for (double h : s.skipped) out += "# skipped h=" + format_double(h) + '\n';
    for (double h : s.zero) out += "# zero E_h at h=" + format_double(h) + '\n';
    return out;
}

std::vector<CaseReport> reports_from_csv(std::string_view text) {
    std::vector<CaseReport> out;
    std::size_t pos = 0;
    bool header = true;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        if (line.empty() || line.front() == '#') continue;
        if (header) {
            header = false;
            if (std::string(line) + '\n' != csv_header()) throw ParameterError("unexpected CSV header");
            continue;
        }
        std::vector<std::string_view> f;
        std::size_t p = 0;
        while (true) {
            std::size_t c = line.find(',', p);
            f.push_back(line.substr(p, c == std::string_view::npos ? std::string_view::npos : c - p));
            if (c == std::string_view::npos) break;
            p = c + 1;
        }
        if (f.size() != 9) throw ParameterError("CSV row needs 9 columns");
        CaseReport r;
        r.h = parse_double(f[0], "h");
        r.alpha = parse_double(f[1], "alpha");
        r.L = static_cast<int>(parse_long(f[2], "L"));
        std::size_t q = 0;
        while (q < f[3].size()) {
            std::size_t c = f[3].find(';', q);
            if (c == std::string_view::npos) c = f[3].size();
            r.k_list.push_back(static_cast<int>(parse_long(f[3].substr(q, c - q), "k_list")));
            q = c + 1;
        }
        r.E_h = parse_double(f[4], "E_h");
        r.bound = parse_double(f[5], "bound");
        r.sup_grad = parse_double(f[6], "sup_grad");
        r.card_sigma = static_cast<std::size_t>(parse_long(f[7], "card_sigma"));
        r.runtime_ms = parse_double(f[8], "runtime_ms");
        out.push_back(std::move(r));
    }
    return out;
}

json to_json(const CaseReport& r) {
    json j;
    j["h"] = r.h;
    j["alpha"] = r.alpha;
    j["L"] = r.L;
    j["k_list"] = r.k_list;
    j["E_h"] = r.E_h;
    j["bound"] = r.bound;
    j["sup_grad"] = r.sup_grad;
    j["card_sigma"] = r.card_sigma;
    j["runtime_ms"] = r.runtime_ms;
    j["mesh_h"] = r.mesh_h;
    j["triangles"] = r.triangles;
    j["bad_triangles"] = r.bad_triangles;
    j["energy_indicator"] = r.energy_indicator;
    j["energy_dist2"] = r.energy_dist2;
    j["lipschitz"] = r.lipschitz;
    j["Lambda"] = r.Lambda;
    j["top"] = r.top;
    j["unresolved"] = r.unresolved;
    j["sigma_verified"] = r.sigma_verified;
    return j;
}

json to_json(const SweepResult& s) {
    json j;
    j["L"] = s.L;
    j["target_rate"] = s.target_rate;
    j["cases"] = json::array();
    for (const auto& c : s.cases) j["cases"].push_back(to_json(c));
    j["skipped"] = s.skipped;
    j["zero"] = s.zero;
    if (s.fit) {
        j["fit"] = {{"slope", s.fit->slope}, {"intercept", s.fit->intercept}, {"C", s.fit->C}, {"points", s.fit->points}};
    } else {
        j["fit"] = nullptr;
    }
    return j;
}

CaseReport case_report_from_json(const json& j) {
    CaseReport r;
    try {
        r.h = j.at("h").get<double>();
        r.alpha = j.at("alpha").get<double>();
        r.L = j.at("L").get<int>();
        r.k_list = j.at("k_list").get<std::vector<int>>();
        r.E_h = j.at("E_h").get<double>();
        r.bound = j.at("bound").get<double>();
        r.sup_grad = j.at("sup_grad").get<double>();
        r.card_sigma = j.at("card_sigma").get<std::size_t>();
        r.runtime_ms = j.at("runtime_ms").get<double>();
        r.mesh_h = j.value("mesh_h", 0.0);
        r.triangles = j.value("triangles", std::size_t{0});
        r.bad_triangles = j.value("bad_triangles", std::size_t{0});
        r.energy_indicator = j.value("energy_indicator", 0.0);
        r.energy_dist2 = j.value("energy_dist2", 0.0);
        r.lipschitz = j.value("lipschitz", 0.0);
        r.Lambda = j.value("Lambda", 0.0);
        r.top = j.value("top", std::string{});
        r.unresolved = j.value("unresolved", std::size_t{0});
        r.sigma_verified = j.value("sigma_verified", false);
    } catch (const json::exception& e) {
        throw ParameterError(std::string("malformed report JSON: ") + e.what());
    }
    return r;
}

namespace {

// "b^e" or a plain number; returns base and exponent for power forms.
struct HTerm {
    bool power = false;
    double base = 0;
    long exponent = 0;
    double value = 0;
};

HTerm parse_term(std::string_view t) {
    t = trim(t);
    HTerm out;
    if (auto c = t.find('^'); c != std::string_view::npos) {
        out.power = true;
        out.base = parse_double(trim(t.substr(0, c)), "h base");
        std::string_view e = trim(t.substr(c + 1));
        if (!e.empty() && e.front() == '+') e.remove_prefix(1);
        out.exponent = parse_long(e, "h exponent");
        out.value = std::pow(out.base, static_cast<double>(out.exponent));
    } else {
        out.value = to_double(parse_rational(t));
    }
    return out;
}

} // namespace

std::vector<double> parse_h_list(std::string_view text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t c = text.find(',', pos);
        if (c == std::string_view::npos) c = text.size();
        std::string_view item = trim(text.substr(pos, c - pos));
        pos = c + 1;
        if (item.empty()) {
            if (c == text.size()) break;
            throw ParameterError("empty entry in h list");
        }
        if (auto r = item.find(".."); r != std::string_view::npos) {
            const HTerm a = parse_term(item.substr(0, r));
            const HTerm b = parse_term(item.substr(r + 2));
            if (!a.power || !b.power || a.base != b.base) {
                throw ParameterError("h range '" + std::string(item) + "' needs two powers of one base");
            }
            const long step = a.exponent <= b.exponent ? 1 : -1;
            for (long e = a.exponent;; e += step) {
                out.push_back(std::pow(a.base, static_cast<double>(e)));
                if (e == b.exponent) break;
            }
        } else {
            out.push_back(parse_term(item).value);
        }
        if (c == text.size()) break;
    }
    for (double h : out) {
        if (!(h > 0.0) || !std::isfinite(h)) throw ParameterError("h values must be positive");
    }
    if (out.empty()) throw ParameterError("empty h list");
    return out;
}

} // namespace lamlab
