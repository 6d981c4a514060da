// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <ostream>

#include "lamlab/rational.hpp"

namespace lamlab {

/// Diagonal 2x2 matrix diag(d1, d2), equivalently the point (d1, d2) of the plane.
template <class T>
struct BasicDiagMat {
    T d1{};
    T d2{};

    /// Entry along axis l (1 or 2).
    const T& operator[](int l) const { return l == 1 ? d1 : d2; }
    T& operator[](int l) { return l == 1 ? d1 : d2; }

    friend bool operator==(const BasicDiagMat&, const BasicDiagMat&) = default;
    friend BasicDiagMat operator+(const BasicDiagMat& a, const BasicDiagMat& b) { return {a.d1 + b.d1, a.d2 + b.d2}; }
    friend BasicDiagMat operator-(const BasicDiagMat& a, const BasicDiagMat& b) { return {a.d1 - b.d1, a.d2 - b.d2}; }
    friend BasicDiagMat operator*(const T& s, const BasicDiagMat& a) { return {s * a.d1, s * a.d2}; }
};

using DiagMat = BasicDiagMat<double>;
using DiagMatQ = BasicDiagMat<Rational>;

inline constexpr DiagMat kE1{1.0, 0.0};
inline constexpr DiagMat kE2{0.0, 1.0};

inline double norm(const DiagMat& a) { return std::hypot(a.d1, a.d2); }
double norm(const DiagMatQ& a);

DiagMat to_double(const DiagMatQ& a);

std::ostream& operator<<(std::ostream& os, const DiagMat& a);
std::ostream& operator<<(std::ostream& os, const DiagMatQ& a);

/// Full 2x2 matrix; row i holds the derivatives of component i.
struct Mat2 {
    double a11 = 0, a12 = 0, a21 = 0, a22 = 0;

    static Mat2 diag(const DiagMat& d) { return {d.d1, 0.0, 0.0, d.d2}; }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline double frobenius(const Mat2& m) { return std::sqrt(m.a11 * m.a11 + m.a12 * m.a12 + m.a21 * m.a21 + m.a22 * m.a22); }

/// Result of the rank-one test for a pair of diagonal matrices.
enum class RankOne { Rank0, Dir1, Dir2, Incompatible };

/// Lamination direction 1 or 2 of Dir1/Dir2, 0 otherwise.
inline int direction_of(RankOne r) { return r == RankOne::Dir1 ? 1 : r == RankOne::Dir2 ? 2 : 0; }

/// Floats compare with absolute tolerance eps (exact for eps = 0).
RankOne rank_one_direction(const DiagMat& a, const DiagMat& b, double eps = 0.0);
RankOne rank_one_direction(const DiagMatQ& a, const DiagMatQ& b);

/// lambda*F + (1-lambda)*G. Throws ParameterError unless 0 <= lambda <= 1.
DiagMat convex_combination(const DiagMat& f, const DiagMat& g, double lambda);
DiagMatQ convex_combination(const DiagMatQ& f, const DiagMatQ& g, const Rational& lambda);

} // namespace lamlab
