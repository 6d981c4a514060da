// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lamlab/construct.hpp"
#include "lamlab/errors.hpp"

namespace lamlab {

namespace {

// k_0 = k_1 = 1; entries from index 2 on are the stage counts chosen so far.
double k_at(const std::vector<double>& k, int i) { return i <= 1 ? 1.0 : k[static_cast<std::size_t>(i)]; }

int to_count(double v) {
    if (!(v < static_cast<double>(std::numeric_limits<int>::max()))) {
        throw ParameterError("strip count overflows");
    }
    return static_cast<int>(v);
}

} // namespace

Params select_params(int L, double h, const WitnessTree& tree) {
    if (!(h > 0.0 && h < 1.0)) {
        throw ParameterError("select_params: h must lie in (0, 1)");
    }
    if (L < 0) {
        throw ParameterError("select_params: level must be nonnegative");
    }
    Params p;
    p.L = L;
    p.alpha = 1.0 / (1.0 + L);

    double m = 0.0;
    double wmin = std::numeric_limits<double>::infinity();
    for (const auto& n : tree.nodes) {
        m = std::max(m, norm(n.value));
        if (!n.is_leaf() && n.weight > 0 && n.weight < 1) {
            const double w = to_double(n.weight);
            wmin = std::min(wmin, std::min(w, 1.0 - w));
        }
    }
    p.M = m;
    p.Lambda = std::isfinite(wmin) ? m / wmin : m;

    std::vector<double> k(static_cast<std::size_t>(std::max(L, 1)) + 1, 1.0);
    for (int i = L - 1; i >= 1; --i) {
        const int stage = L - i + 1;
        double theta = 1.0, gamma = 1.0;
        for (int l = 0; l <= (L - i) / 2; ++l) theta *= k_at(k, L - i - 2 * l);
        for (int l = 0; l <= (L - i - 1) / 2; ++l) gamma *= k_at(k, L - i - 1 - 2 * l);
        const double di = i;
        const double x = std::pow(di, di / (di + 1.0)) * std::pow(h, -(1.0 - p.alpha) / (di + 1.0)) *
                         std::pow(theta, di / (di + 1.0)) / gamma;
        const double khat = std::floor(x) + 1.0;
        const double kmin = std::floor(p.Lambda * k_at(k, stage - 1)) + 1.0;
        k[static_cast<std::size_t>(stage)] = std::max(khat, kmin);
        p.theta.push_back(theta);
        p.gamma.push_back(gamma);
        p.x.push_back(x);
        p.k_hat.push_back(to_count(khat));
        p.k_list.push_back(to_count(k[static_cast<std::size_t>(stage)]));
    }
    check_k_list(p);
    return p;
}

void check_k_list(const Params& p) {
    int prev = 1;
    for (std::size_t i = 0; i < p.k_list.size(); ++i) {
        const int ki = p.k_list[i];
        if (ki < 1 || !(ki > p.Lambda * prev)) {
            throw ParameterError("k_" + std::to_string(i + 2) + " = " + std::to_string(ki) + " violates k > Lambda * k_" +
                                 std::to_string(i + 1) + " (Lambda = " + std::to_string(p.Lambda) + ")");
        }
        prev = ki;
    }
}

} // namespace lamlab
