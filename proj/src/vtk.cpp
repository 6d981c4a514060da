// SPDX-License-Identifier: Apache-2.0
#include <charconv>
#include <fstream>
#include <ostream>
#include <string>

#include "lamlab/errors.hpp"
#include "lamlab/fem.hpp"

namespace lamlab {

namespace {

std::string num(double v) {
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, static_cast<std::size_t>(r.ptr - buf));
}

} // namespace

void write_vtk(std::ostream& os, const FEFunction& u, const Sigma& sigma, double tol) {
    const Mesh& m = u.mesh();
    const std::size_t nv = m.vertex_count();
    const std::size_t nt = m.triangle_count();
    os << "# vtk DataFile Version 3.0\n";
    os << "lamlab P1 candidate\n";
    os << "ASCII\n";
    os << "DATASET UNSTRUCTURED_GRID\n";
    os << "POINTS " << nv << " double\n";
    for (std::size_t v = 0; v < nv; ++v) {
        const Vec2 p = m.vertex(v);
        os << num(p.x) << ' ' << num(p.y) << " 0\n";
    }
    os << "CELLS " << nt << ' ' << 4 * nt << '\n';
    for (std::size_t t = 0; t < nt; ++t) {
        const auto tri = m.triangle(t);
        os << "3 " << tri[0] << ' ' << tri[1] << ' ' << tri[2] << '\n';
    }
    os << "CELL_TYPES " << nt << '\n';
    for (std::size_t t = 0; t < nt; ++t) os << "5\n";

    os << "POINT_DATA " << nv << '\n';
    os << "VECTORS u double\n";
    for (const auto& val : u.values()) os << num(val.x) << ' ' << num(val.y) << " 0\n";

    os << "CELL_DATA " << nt << '\n';
    os << "TENSORS grad double\n";
    for (std::size_t t = 0; t < nt; ++t) {
        const Mat2 g = u.gradient(t);
        os << num(g.a11) << ' ' << num(g.a12) << " 0\n" << num(g.a21) << ' ' << num(g.a22) << " 0\n0 0 0\n";
    }
    os << "SCALARS bad int 1\n";
    os << "LOOKUP_TABLE default\n";
    for (std::size_t t = 0; t < nt; ++t) os << (gradient_in_sigma(u.gradient(t), sigma, tol) ? 0 : 1) << '\n';
}

void write_vtk_file(const std::string& path, const FEFunction& u, const Sigma& sigma, double tol) {
    std::ofstream out(path);
    if (!out) {
        throw ParameterError("cannot write '" + path + "'");
    }
    write_vtk(out, u, sigma, tol);
}

} // namespace lamlab
