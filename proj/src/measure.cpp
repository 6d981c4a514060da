// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "lamlab/errors.hpp"
#include "lamlab/fem.hpp"
#include "lamlab/simd/kernels.hpp"

namespace lamlab {

namespace {

double norm2_of(const Mat2& g) { return (g.a11 * g.a11 + g.a12 * g.a12) + (g.a21 * g.a21 + g.a22 * g.a22); }

} // namespace

FEFunction::FEFunction(const Mesh& mesh, std::vector<Vec2> values) : mesh_(&mesh), values_(std::move(values)) {
    if (values_.size() != mesh.vertex_count()) {
        throw ParameterError("FEFunction: one value per vertex expected");
    }
}

Mat2 FEFunction::gradient(std::size_t t) const {
    const Mesh& m = *mesh_;
    const std::size_t c = t / 2;
    const std::size_t i = c % m.nx, j = c / m.nx;
    const Vec2& u00 = values_[m.vertex_index(i, j)];
    const Vec2& u10 = values_[m.vertex_index(i + 1, j)];
    const Vec2& u11 = values_[m.vertex_index(i + 1, j + 1)];
    const Vec2& u01 = values_[m.vertex_index(i, j + 1)];
    return t % 2 == 0 ? gradient_t1(u00, u10, u11, m.s1, m.s2) : gradient_t2(u00, u11, u01, m.s1, m.s2);
}

FEFunction interpolate(const Field& f, const Mesh& m) {
    std::vector<Vec2> vals(m.vertex_count());
    for (std::size_t j = 0; j <= m.ny; ++j) {
        for (std::size_t i = 0; i <= m.nx; ++i) {
            if (!m.is_boundary(i, j)) vals[m.vertex_index(i, j)] = f.value(m.vertex(i, j));
        }
    }
    return FEFunction(m, std::move(vals));
}

bool gradient_in_sigma(const Mat2& g, const Sigma& sigma, double tol) {
    const double offmax = std::max(std::fabs(g.a12), std::fabs(g.a21));
    if (sigma.empty()) return !(std::max(std::max(std::fabs(g.a11), std::fabs(g.a22)), offmax) > tol);
    double best = INFINITY;
    for (const auto& s : sigma) {
        best = std::min(std::max(std::max(std::fabs(g.a11 - s.d1), std::fabs(g.a22 - s.d2)), offmax), best);
    }
    return !(best > tol);
}

double f_dist2(const Mat2& g, const Sigma& sigma) {
    const double off2 = g.a12 * g.a12 + g.a21 * g.a21;
    if (sigma.empty()) return std::min((g.a11 * g.a11 + g.a22 * g.a22) + off2, 1.0);
    double best = INFINITY;
    for (const auto& s : sigma) {
        const double a = g.a11 - s.d1, b = g.a22 - s.d2;
        best = std::min((a * a + b * b) + off2, best);
    }
    return std::min(best, 1.0);
}

Integrand indicator_integrand(Sigma sigma, double tol) {
    return [sigma = std::move(sigma), tol](const Mat2& g) { return gradient_in_sigma(g, sigma, tol) ? 0.0 : 1.0; };
}

Integrand dist2_integrand(Sigma sigma) {
    return [sigma = std::move(sigma)](const Mat2& g) { return f_dist2(g, sigma); };
}

void PairwiseSum::push_block(double v) {
    std::size_t i = 0;
    for (; i < levels_.size() && used_[i]; ++i) {
        v = levels_[i] + v;
        used_[i] = false;
    }
    if (i == levels_.size()) {
        levels_.push_back(0.0);
        used_.push_back(false);
    }
    levels_[i] = v;
    used_[i] = true;
}

void PairwiseSum::add(double v) {
    block_[fill_++] = v;
    if (fill_ == kBlock) {
        double s = 0.0;
        for (double x : block_) s += x;
        push_block(s);
        fill_ = 0;
    }
}

double PairwiseSum::value() const {
    double total = 0.0;
    for (std::size_t i = 0; i < fill_; ++i) total += block_[i];
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (used_[i]) total = levels_[i] + total;
    }
    return total;
}

double energy(const FEFunction& u, const Integrand& f) {
    PairwiseSum s;
    const double area = u.mesh().triangle_area();
    const std::size_t nt = u.mesh().triangle_count();
    for (std::size_t t = 0; t < nt; ++t) s.add(area * f(u.gradient(t)));
    return s.value();
}

double bad_measure(const FEFunction& u, const Sigma& sigma, double tol) {
    if (tol < 0) throw ParameterError("bad_measure: tol must be nonnegative");
    return energy(u, indicator_integrand(sigma, tol));
}

double sup_grad_norm(const FEFunction& u) {
    double m = 0.0;
    const std::size_t nt = u.mesh().triangle_count();
    for (std::size_t t = 0; t < nt; ++t) m = std::max(m, norm2_of(u.gradient(t)));
    return std::sqrt(m);
}

namespace {

// Accumulates the kernel output of consecutive rows in triangle order.
class Accumulator {
public:
    Accumulator(const Mesh& m, const Sigma& sigma, double tol, const std::vector<Integrand>& extra)
        : m_(m), area_(m.triangle_area()), extra_(extra), extra_sums_(extra.size()) {
        for (const auto& s : sigma) {
            sd1_.push_back(s.d1);
            sd2_.push_back(s.d2);
        }
        tol_ = tol;
        bad_.resize(2 * m.nx);
        dist2_.resize(2 * m.nx);
        norm2_.resize(2 * m.nx);
        kernel_ = simd::active_row_kernel();
    }

    void row(const std::vector<double>& b1, const std::vector<double>& b2, const std::vector<double>& t1,
             const std::vector<double>& t2) {
        const simd::RowInput in{b1.data(), b2.data(), t1.data(), t2.data(), m_.nx, m_.s1, m_.s2,
                                sd1_.data(), sd2_.data(), sd1_.size(), tol_};
        const simd::RowOutput out{bad_.data(), dist2_.data(), norm2_.data()};
        kernel_(in, out);
        for (std::size_t t = 0; t < 2 * m_.nx; ++t) {
            bad_sum_.add(area_ * bad_[t]);
            dist_sum_.add(area_ * dist2_[t]);
            sup2_ = std::max(sup2_, norm2_[t]);
            if (bad_[t] != 0.0) ++bad_count_;
        }
        if (!extra_.empty()) {
            for (std::size_t c = 0; c < m_.nx; ++c) {
                const Vec2 u00{b1[c], b2[c]}, u10{b1[c + 1], b2[c + 1]};
                const Vec2 u01{t1[c], t2[c]}, u11{t1[c + 1], t2[c + 1]};
                const Mat2 g1 = gradient_t1(u00, u10, u11, m_.s1, m_.s2);
                const Mat2 g2 = gradient_t2(u00, u11, u01, m_.s1, m_.s2);
                for (std::size_t e = 0; e < extra_.size(); ++e) {
                    extra_sums_[e].add(area_ * extra_[e](g1));
                    extra_sums_[e].add(area_ * extra_[e](g2));
                }
            }
        }
    }

    Measurement result() const {
        Measurement r;
        r.bad_measure = bad_sum_.value();
        r.energy_indicator = r.bad_measure;
        r.energy_dist2 = dist_sum_.value();
        r.sup_grad = std::sqrt(sup2_);
        r.triangles = m_.triangle_count();
        r.bad_triangles = bad_count_;
        for (const auto& s : extra_sums_) r.extra_energy.push_back(s.value());
        return r;
    }

private:
    const Mesh& m_;
    double area_;
    double tol_ = 0;
    const std::vector<Integrand>& extra_;
    std::vector<PairwiseSum> extra_sums_;
    std::vector<double> sd1_, sd2_;
    std::vector<double> bad_, dist2_, norm2_;
    simd::RowKernel kernel_;
    PairwiseSum bad_sum_, dist_sum_;
    double sup2_ = 0.0;
    std::size_t bad_count_ = 0;
};

} // namespace

Measurement measure(const FEFunction& u, const Sigma& sigma, double tol, const std::vector<Integrand>& extra) {
    if (tol < 0) throw ParameterError("measure: tol must be nonnegative");
    const Mesh& m = u.mesh();
    Accumulator acc(m, sigma, tol, extra);
    std::vector<double> b1(m.nx + 1), b2(m.nx + 1), t1(m.nx + 1), t2(m.nx + 1);
    auto load = [&](std::size_t j, std::vector<double>& c1, std::vector<double>& c2) {
        for (std::size_t i = 0; i <= m.nx; ++i) {
            const Vec2& v = u.values()[m.vertex_index(i, j)];
            c1[i] = v.x;
            c2[i] = v.y;
        }
    };
    load(0, b1, b2);
    for (std::size_t j = 0; j < m.ny; ++j) {
        load(j + 1, t1, t2);
        acc.row(b1, b2, t1, t2);
        std::swap(b1, t1);
        std::swap(b2, t2);
    }
    return acc.result();
}

Measurement measure_streaming(const Field& f, const Mesh& m, const Sigma& sigma, double tol,
                              const std::vector<Integrand>& extra) {
    if (tol < 0) throw ParameterError("measure: tol must be nonnegative");
    Accumulator acc(m, sigma, tol, extra);
    std::vector<double> b1(m.nx + 1), b2(m.nx + 1), t1(m.nx + 1), t2(m.nx + 1);
    auto eval = [&](std::size_t j, std::vector<double>& c1, std::vector<double>& c2) {
        for (std::size_t i = 0; i <= m.nx; ++i) {
            if (m.is_boundary(i, j)) {
                c1[i] = 0.0;
                c2[i] = 0.0;
            } else {
                const Vec2 v = f.value(m.vertex(i, j));
                c1[i] = v.x;
                c2[i] = v.y;
            }
        }
    };
    eval(0, b1, b2);
    for (std::size_t j = 0; j < m.ny; ++j) {
        eval(j + 1, t1, t2);
        acc.row(b1, b2, t1, t2);
        std::swap(b1, t1);
        std::swap(b2, t2);
    }
    return acc.result();
}

} // namespace lamlab
