// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "lamlab/errors.hpp"
#include "lamlab/fem.hpp"

namespace lamlab {

Vec2 Mesh::vertex(std::size_t i, std::size_t j) const {
    return {x0 + static_cast<double>(i) * s1, y0 + static_cast<double>(j) * s2};
}

std::array<std::size_t, 3> Mesh::triangle(std::size_t t) const {
    const std::size_t c = t / 2;
    const std::size_t i = c % nx, j = c / nx;
    const std::size_t v00 = vertex_index(i, j), v10 = vertex_index(i + 1, j);
    const std::size_t v11 = vertex_index(i + 1, j + 1), v01 = vertex_index(i, j + 1);
    if (t % 2 == 0) return {v00, v10, v11};
    return {v00, v11, v01};
}

double Mesh::area() const { return (static_cast<double>(nx) * s1) * (static_cast<double>(ny) * s2); }

double Mesh::shape_ratio() const {
    const double c = std::sqrt(s1 * s1 + s2 * s2);
    return c / (0.5 * (s1 + s2 - c));
}

Mesh make_mesh(const Polygon& domain, double h_target) {
    if (!(h_target > 0.0) || !std::isfinite(h_target)) {
        throw ParameterError("make_mesh: target size must be positive");
    }
    const auto r = domain.as_rectangle();
    if (!r) {
        throw UnsupportedDomainError("make_mesh: only axis-aligned rectangles are supported");
    }
    const double w = (*r)[2] - (*r)[0];
    const double hgt = (*r)[3] - (*r)[1];
    // Cells with sides at most h_target / sqrt(2), so every triangle has diameter <= h_target.
    const double cells_x = std::ceil(w * std::sqrt(2.0) / h_target - 1e-9);
    const double cells_y = std::ceil(hgt * std::sqrt(2.0) / h_target - 1e-9);
    if (cells_x * cells_y > 4.0e9) {
        throw ParameterError("make_mesh: mesh too fine");
    }
    Mesh m;
    m.x0 = (*r)[0];
    m.y0 = (*r)[1];
    m.nx = static_cast<std::size_t>(std::max(1.0, cells_x));
    m.ny = static_cast<std::size_t>(std::max(1.0, cells_y));
    m.s1 = w / static_cast<double>(m.nx);
    m.s2 = hgt / static_cast<double>(m.ny);
    m.h = std::sqrt(m.s1 * m.s1 + m.s2 * m.s2);
    return m;
}

} // namespace lamlab
