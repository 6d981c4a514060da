// SPDX-License-Identifier: Apache-2.0
#include "lamlab/matgeom.hpp"

#include <cmath>

#include "lamlab/errors.hpp"

namespace lamlab {

double norm(const DiagMatQ& a) { return norm(to_double(a)); }

DiagMat to_double(const DiagMatQ& a) { return {to_double(a.d1), to_double(a.d2)}; }

std::ostream& operator<<(std::ostream& os, const DiagMat& a) { return os << "diag(" << a.d1 << ", " << a.d2 << ")"; }

std::ostream& operator<<(std::ostream& os, const DiagMatQ& a) {
    return os << "diag(" << to_string(a.d1) << ", " << to_string(a.d2) << ")";
}

RankOne rank_one_direction(const DiagMat& a, const DiagMat& b, double eps) {
    const bool same1 = std::abs(a.d1 - b.d1) <= eps;
    const bool same2 = std::abs(a.d2 - b.d2) <= eps;
    if (same1 && same2) return RankOne::Rank0;
    if (same2) return RankOne::Dir1;
    if (same1) return RankOne::Dir2;
    return RankOne::Incompatible;
}

RankOne rank_one_direction(const DiagMatQ& a, const DiagMatQ& b) {
    const bool same1 = a.d1 == b.d1;
    const bool same2 = a.d2 == b.d2;
    if (same1 && same2) return RankOne::Rank0;
    if (same2) return RankOne::Dir1;
    if (same1) return RankOne::Dir2;
    return RankOne::Incompatible;
}

DiagMat convex_combination(const DiagMat& f, const DiagMat& g, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw ParameterError("convex_combination: lambda must lie in [0, 1]");
    }
    return {lambda * f.d1 + (1.0 - lambda) * g.d1, lambda * f.d2 + (1.0 - lambda) * g.d2};
}

DiagMatQ convex_combination(const DiagMatQ& f, const DiagMatQ& g, const Rational& lambda) {
    if (lambda < 0 || lambda > 1) {
        throw ParameterError("convex_combination: lambda must lie in [0, 1]");
    }
    const Rational mu = 1 - lambda;
    return {lambda * f.d1 + mu * g.d1, lambda * f.d2 + mu * g.d2};
}

} // namespace lamlab
