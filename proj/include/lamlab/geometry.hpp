// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

namespace lamlab {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    double operator[](int l) const { return l == 1 ? x : y; }
    double& operator[](int l) { return l == 1 ? x : y; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Distance to the boundary with the gradient of the distance function and a
/// lower bound on the distance to its kink set.
struct BoundaryDistance {
    double dist = 0.0;
    Vec2 grad;
    double margin = 0.0;
};

/// Simple polygon, vertices counterclockwise.
class Polygon {
public:
    /// Throws ParameterError unless the polygon is simple with positive area
    /// (clockwise input is reversed).
    explicit Polygon(std::vector<Vec2> vertices);
    static Polygon rectangle(double x0, double y0, double x1, double y1);
    static Polygon unit_square() { return rectangle(0.0, 0.0, 1.0, 1.0); }

    const std::vector<Vec2>& vertices() const { return v_; }
    double area() const;
    double perimeter() const;
    double diameter() const;
    bool contains(const Vec2& p) const;
    double distance_to_boundary(const Vec2& p) const { return boundary_distance(p).dist; }
    BoundaryDistance boundary_distance(const Vec2& p) const;

    /// Bounds (x0, y0, x1, y1) when the polygon is an axis-aligned rectangle.
    std::optional<std::vector<double>> as_rectangle() const;

private:
    std::vector<Vec2> v_;
    bool rect_ = false;
    double rx0_ = 0, ry0_ = 0, rx1_ = 0, ry1_ = 0;
};

} // namespace lamlab
