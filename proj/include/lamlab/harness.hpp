// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lamlab/construct.hpp"
#include "lamlab/fem.hpp"
#include "lamlab/lamhull.hpp"

namespace lamlab {

struct CaseOptions {
    std::optional<double> alpha;
    std::optional<std::vector<int>> k_list;
    double tol = kDefaultTol;
    int cap = kDefaultLevelCap;
    bool timing = false;                 // wall-clock runtime_ms; 0 otherwise so reports are reproducible
    std::vector<Integrand> extra;        // additional energies measured in the same pass
};

struct CaseReport {
    double h = 0;
    double alpha = 0;
    int L = 0;
    std::vector<int> k_list;
    double E_h = 0;
    double bound = 0;
    double sup_grad = 0;
    std::size_t card_sigma = 0;
    double runtime_ms = 0;

    // Diagnostics, not part of the CSV.
    double mesh_h = 0;
    std::size_t triangles = 0;
    std::size_t bad_triangles = 0;
    double energy_indicator = 0;
    double energy_dist2 = 0;
    double lipschitz = 0;
    double Lambda = 0;
    std::string top;
    std::size_t unresolved = 0;
    bool sigma_verified = false;
    std::vector<double> extra_energy;
};

struct PowerFit {
    double slope = 0;
    double intercept = 0;
    double C = 0; // exp(intercept)
    std::size_t points = 0;
};

struct SweepResult {
    std::vector<CaseReport> cases; // h descending
    std::vector<double> skipped;   // inadmissible h
    std::vector<double> zero;      // E_h = 0, left out of the fit
    std::optional<PowerFit> fit;
    int L = 0;
    double target_rate = 0;
};

/// Tree, witness set and its hull recheck, reusable across mesh sizes.
struct PreparedCase {
    WitnessTree tree;
    Sigma sigma;
    bool sigma_verified = false;
};

PreparedCase prepare_case(const BoxSet& k, int cap = kDefaultLevelCap);
Params case_params(const PreparedCase& pc, double h, const CaseOptions& opt);

CaseReport run_case(const BoxSet& k, const Polygon& domain, double h, const CaseOptions& opt = {});
CaseReport run_prepared(const PreparedCase& pc, const Polygon& domain, double h, const CaseOptions& opt = {});

/// Cases run on `jobs` threads; the result does not depend on the thread count.
SweepResult sweep(const BoxSet& k, const Polygon& domain, const std::vector<double>& h_list, const CaseOptions& opt = {},
                  int jobs = 1);

/// Least squares fit of log E against log h over E > 0; needs three such points.
PowerFit fit_power_law(const std::vector<double>& h, const std::vector<double>& e);

/// Bracketed bound expression with unit constant.
double theoretical_bound(const Params& p, double h);

std::string csv_header();
std::string emit_csv(const CaseReport& r);
std::string emit_csv(const SweepResult& s);
nlohmann::json to_json(const CaseReport& r);
nlohmann::json to_json(const SweepResult& s);
CaseReport case_report_from_json(const nlohmann::json& j);
/// Parses a CSV produced by emit_csv back into reports (comment lines ignored).
std::vector<CaseReport> reports_from_csv(std::string_view text);

/// Shortest round-trip decimal.
std::string format_double(double v);

/// Comma-separated values; each is a number, "b^e", or a range "b^e1..b^e2" over integer exponents.
std::vector<double> parse_h_list(std::string_view text);

} // namespace lamlab
