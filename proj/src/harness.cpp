// SPDX-License-Identifier: Apache-2.0
#include "lamlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <numeric>
#include <thread>

#include "lamlab/errors.hpp"
#include "lamlab/log.hpp"

namespace lamlab {

PreparedCase prepare_case(const BoxSet& k, int cap) {
    PreparedCase pc;
    pc.tree = extract_witness(k, cap);
    const std::vector<DiagMatQ> leaves = pc.tree.sigma();
    for (const auto& s : leaves) pc.sigma.push_back(to_double(s));
    pc.sigma_verified =
        verify_tree_arithmetic(pc.tree) &&
        contains(lamination_hull(BoxSet::from_points(leaves), pc.tree.lamination_level), DiagMatQ{});
    return pc;
}

Params case_params(const PreparedCase& pc, double h, const CaseOptions& opt) {
    Params p = select_params(pc.tree.lamination_level, h, pc.tree);
    if (opt.alpha) {
        if (!(*opt.alpha > 0.0 && *opt.alpha < 1.0)) {
            throw ParameterError("alpha must lie in (0, 1)");
        }
        p.alpha = *opt.alpha;
    }
    if (opt.k_list) p.k_list = *opt.k_list;
    return p;
}

double theoretical_bound(const Params& p, double h) {
    const double a = p.alpha;
    if (p.L <= 0) return 0.0;
    if (p.L == 1) return std::pow(h, a) + std::pow(h, 1.0 - a);
    auto k = [&](int i) -> double {
        if (i <= 1) return 1.0;
        const auto idx = static_cast<std::size_t>(i - 2);
        return idx < p.k_list.size() ? static_cast<double>(p.k_list[idx]) : 1.0;
    };
    if (p.L == 2) return std::pow(h, a) + 1.0 / k(2) + k(2) * std::pow(h, 1.0 - a);
    auto alt = [&](int i) {
        double prod = 1.0;
        for (int l = 0; l <= i / 2; ++l) prod *= k(i - 2 * l);
        return prod;
    };
    double even = 0.0, ratio = 0.0;
    for (int i = 1; i <= p.L; ++i) even += alt(i);
    for (int i = 2; i <= p.L; ++i) ratio += alt(i - 1) / alt(i);
    return std::pow(h, a) + std::pow(h, 1.0 - a) * even + ratio;
}

CaseReport run_prepared(const PreparedCase& pc, const Polygon& domain, double h, const CaseOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    const int big_l = pc.tree.lamination_level;
    check_admissible(h, opt.alpha.value_or(1.0 / (1.0 + big_l)), domain);
    const Params p = case_params(pc, h, opt);
    const Field f = build_field(pc.tree, p, h, domain);
    const Mesh m = make_mesh(domain, h);
    const Measurement meas = measure_streaming(f, m, pc.sigma, opt.tol, opt.extra);

    CaseReport r;
    r.h = h;
    r.alpha = p.alpha;
    r.L = big_l;
    r.k_list = p.k_list;
    r.E_h = meas.bad_measure;
    r.bound = theoretical_bound(p, h);
    r.sup_grad = meas.sup_grad;
    r.card_sigma = pc.sigma.size();
    r.mesh_h = m.h;
    r.triangles = meas.triangles;
    r.bad_triangles = meas.bad_triangles;
    r.energy_indicator = meas.energy_indicator;
    r.energy_dist2 = meas.energy_dist2;
    r.lipschitz = f.info().lipschitz;
    r.Lambda = p.Lambda;
    r.top = to_string(pc.tree.top);
    r.unresolved = f.info().unresolved;
    r.sigma_verified = pc.sigma_verified;
    r.extra_energy = meas.extra_energy;
    if (opt.timing) {
        r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
    log_info("h=" + format_double(h) + " E_h=" + format_double(r.E_h) + " triangles=" + std::to_string(r.triangles));
    return r;
}

CaseReport run_case(const BoxSet& k, const Polygon& domain, double h, const CaseOptions& opt) {
    return run_prepared(prepare_case(k, opt.cap), domain, h, opt);
}

PowerFit fit_power_law(const std::vector<double>& h, const std::vector<double>& e) {
    if (h.size() != e.size()) {
        throw ParameterError("fit_power_law: size mismatch");
    }
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (e[i] > 0.0 && h[i] > 0.0) {
            lx.push_back(std::log(h[i]));
            ly.push_back(std::log(e[i]));
        }
    }
    if (lx.size() < 3) {
        throw ParameterError("fit_power_law: at least three points with E > 0 are needed");
    }
    const double n = static_cast<double>(lx.size());
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (!(sxx > 0.0)) {
        throw ParameterError("fit_power_law: mesh sizes must not all coincide");
    }
    PowerFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.C = std::exp(f.intercept);
    f.points = lx.size();
    return f;
}

SweepResult sweep(const BoxSet& k, const Polygon& domain, const std::vector<double>& h_list, const CaseOptions& opt,
                  int jobs) {
    if (jobs < 1) {
        throw ParameterError("jobs must be at least 1");
    }
    const PreparedCase pc = prepare_case(k, opt.cap);
    std::vector<double> hs = h_list;
    std::sort(hs.begin(), hs.end(), std::greater<>());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());

    std::vector<std::optional<CaseReport>> out(hs.size());
    std::vector<std::exception_ptr> errors(hs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < hs.size(); i = next++) {
            try {
                out[i] = run_prepared(pc, domain, hs[i], opt);
            } catch (const AdmissibilityError&) {
                // reported as skipped below
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto nthreads = static_cast<std::size_t>(std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(hs.size(), 1)));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    SweepResult res;
    res.L = pc.tree.lamination_level;
    res.target_rate = 1.0 / (1.0 + res.L);
    std::vector<double> fh, fe;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        if (!out[i]) {
            res.skipped.push_back(hs[i]);
            continue;
        }
        res.cases.push_back(*out[i]);
        if (out[i]->E_h > 0.0) {
            fh.push_back(hs[i]);
            fe.push_back(out[i]->E_h);
        } else {
            res.zero.push_back(hs[i]);
        }
    }
    if (res.cases.empty() && !hs.empty()) {
        throw AdmissibilityError("sweep: no admissible mesh size");
    }
    if (fh.size() >= 3) res.fit = fit_power_law(fh, fe);
    return res;
}

} // namespace lamlab
