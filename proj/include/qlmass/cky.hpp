#pragma once

#include "qlmass/spacetime.hpp"

namespace qlmass {

// Coordinate components of Q = r dr ^ dt at a point: Q_{rt} = -Q_{tr} = r,
// everything else zero, independently of the catalog metric.
struct CKYForm {
    Mat4 components = Mat4::Zero();
    SpacetimePoint point;

    double operator()(const Vec4& x, const Vec4& y) const { return x.dot(components * y); }
};

struct AdaptedFrameNode;  // defined in surface.hpp

// Q evaluated on an adapted frame {e1, e2, e3, e4}: tangent indices b in
// {1, 2} refer to the orthonormal tangents.
struct QContractions {
    double q34 = 0.0;   // Q(e3, e4)
    Vec2 qb3{0.0, 0.0}; // Q(e_b, e3)
    Vec2 qb4{0.0, 0.0}; // Q(e_b, e4)
    double q12 = 0.0;   // Q(e1, e2); the antisymmetric Q_ab has this single entry
};

CKYForm q_at(const StaticMetric& metric, const SpacetimePoint& p);

// divergence xi^nu = D_mu Q^{mu nu}; equals -3 d/dt for every catalog metric
Vec4 div_q(const StaticMetric& metric, const SpacetimePoint& p);

// covariant derivative (D_mu Q)_{nu rho} in coordinates, from closed-form
// Christoffels. deriv index first.
void nabla_q(const StaticMetric& metric, const SpacetimePoint& p, double out[4][4][4]);

// |LHS - RHS| of the conformal Killing-Yano equation
//   D_X Q(Y,Z) + D_Y Q(X,Z)
//     = (1/3) (2 <X,Y><xi,Z> - <X,Z><xi,Y> - <Y,Z><xi,X>)
// evaluated on the coordinate vectors X, Y, Z.
double cky_residual(const StaticMetric& metric, const SpacetimePoint& p, const Vec4& x,
                    const Vec4& y, const Vec4& z);

QContractions contract_q(const CKYForm& form, const Metric4& metric_point,
                         const AdaptedFrameNode& frame);

}  // namespace qlmass
