// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "lamlab/construct.hpp"
#include "lamlab/geometry.hpp"
#include "lamlab/matgeom.hpp"

namespace lamlab {

inline constexpr double kDefaultTol = 1e-7;

/// Structured triangulation of an axis-aligned rectangle. Cell (i, j) has corners
/// v00 = (i, j), v10 = (i+1, j), v11 = (i+1, j+1), v01 = (i, j+1) and is split along
/// v00-v11 into T1 = (v00, v10, v11) and T2 = (v00, v11, v01). Triangle 2 (j nx + i) + {0, 1}.
struct Mesh {
    double x0 = 0, y0 = 0;
    double s1 = 1, s2 = 1;
    std::size_t nx = 1, ny = 1;
    double h = 0; // triangle diameter

    std::size_t vertex_count() const { return (nx + 1) * (ny + 1); }
    std::size_t triangle_count() const { return 2 * nx * ny; }
    std::size_t vertex_index(std::size_t i, std::size_t j) const { return j * (nx + 1) + i; }
    Vec2 vertex(std::size_t i, std::size_t j) const;
    Vec2 vertex(std::size_t v) const { return vertex(v % (nx + 1), v / (nx + 1)); }
    bool is_boundary(std::size_t i, std::size_t j) const { return i == 0 || j == 0 || i == nx || j == ny; }
    std::array<std::size_t, 3> triangle(std::size_t t) const;
    double triangle_area() const { return 0.5 * (s1 * s2); }
    double area() const;
    /// Inradius-based shape constant h_T / rho_T, identical for every triangle.
    double shape_ratio() const;
};

/// Throws UnsupportedDomainError for anything but an axis-aligned rectangle.
Mesh make_mesh(const Polygon& domain, double h_target);

/// Gradient of the P1 interpolant on T1 / T2 of a cell from its four corner values.
inline Mat2 gradient_t1(const Vec2& u00, const Vec2& u10, const Vec2& u11, double s1, double s2) {
    return {(u10.x - u00.x) / s1, (u11.x - u10.x) / s2, (u10.y - u00.y) / s1, (u11.y - u10.y) / s2};
}
inline Mat2 gradient_t2(const Vec2& u00, const Vec2& u11, const Vec2& u01, double s1, double s2) {
    return {(u11.x - u01.x) / s1, (u01.x - u00.x) / s2, (u11.y - u01.y) / s1, (u01.y - u00.y) / s2};
}

/// Continuous piecewise affine vector function on a mesh.
class FEFunction {
public:
    FEFunction(const Mesh& mesh, std::vector<Vec2> values);

    const Mesh& mesh() const { return *mesh_; }
    const std::vector<Vec2>& values() const { return values_; }
    Mat2 gradient(std::size_t t) const;

private:
    const Mesh* mesh_;
    std::vector<Vec2> values_;
};

/// Nodal interpolation; boundary vertices are set to zero.
FEFunction interpolate(const Field& f, const Mesh& m);

using Sigma = std::vector<DiagMat>;

/// min over S of max(|G11 - S1|, |G22 - S2|, |G12|, |G21|) <= tol. An empty set behaves as {0}.
bool gradient_in_sigma(const Mat2& g, const Sigma& sigma, double tol);
/// min(1, squared Frobenius distance to the set); an empty set behaves as {0}.
double f_dist2(const Mat2& g, const Sigma& sigma);

using Integrand = std::function<double(const Mat2&)>;
Integrand indicator_integrand(Sigma sigma, double tol);
Integrand dist2_integrand(Sigma sigma);

/// Order-dependent but reproducible summation: blocks of fixed size, merged pairwise.
class PairwiseSum {
public:
    void add(double v);
    double value() const;

private:
    static constexpr std::size_t kBlock = 64;
    double block_[kBlock] = {};
    std::size_t fill_ = 0;
    std::vector<double> levels_;
    std::vector<bool> used_;
    void push_block(double v);
};

double bad_measure(const FEFunction& u, const Sigma& sigma, double tol = kDefaultTol);
double energy(const FEFunction& u, const Integrand& f);
double sup_grad_norm(const FEFunction& u);

struct Measurement {
    double bad_measure = 0;
    double energy_indicator = 0;
    double energy_dist2 = 0;
    double sup_grad = 0;
    std::size_t triangles = 0;
    std::size_t bad_triangles = 0;
    std::vector<double> extra_energy; // one per extra integrand, same summation order
};

/// Fused pass over a stored function.
Measurement measure(const FEFunction& u, const Sigma& sigma, double tol = kDefaultTol,
                    const std::vector<Integrand>& extra = {});
/// Same numbers as measure(interpolate(f, m), ...) without storing the function.
Measurement measure_streaming(const Field& f, const Mesh& m, const Sigma& sigma, double tol = kDefaultTol,
                              const std::vector<Integrand>& extra = {});

/// Legacy ASCII VTK unstructured grid with point vectors "u", cell tensors "grad", cell scalars "bad".
void write_vtk(std::ostream& os, const FEFunction& u, const Sigma& sigma, double tol = kDefaultTol);
void write_vtk_file(const std::string& path, const FEFunction& u, const Sigma& sigma, double tol = kDefaultTol);

} // namespace lamlab
