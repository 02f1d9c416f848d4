#include "qlmass/cky.hpp"

#include <cmath>

#include "qlmass/surface.hpp"

namespace qlmass {

CKYForm q_at(const StaticMetric& metric, const SpacetimePoint& p) {
    metric.require_admissible(p.r);
    CKYForm q;
    q.point = p;
    q.components(kR, kT) = p.r;
    q.components(kT, kR) = -p.r;
    return q;
}

void nabla_q(const StaticMetric& metric, const SpacetimePoint& p, double out[4][4][4]) {
    const CKYForm q = q_at(metric, p);
    const Christoffel4 ch = christoffel_at(metric, p);
    // d_mu Q_{nu rho}: only Q_{rt} = -Q_{tr} = r depends on coordinates
    double dq[4][4][4] = {};
    dq[kR][kR][kT] = 1.0;
    dq[kR][kT][kR] = -1.0;
    for (int m = 0; m < 4; ++m) {
        for (int n = 0; n < 4; ++n) {
            for (int r = 0; r < 4; ++r) {
                double v = dq[m][n][r];
                for (int l = 0; l < 4; ++l) {
                    v -= ch.gamma[l][m][n] * q.components(l, r);
                    v -= ch.gamma[l][m][r] * q.components(n, l);
                }
                out[m][n][r] = v;
            }
        }
    }
}

Vec4 div_q(const StaticMetric& metric, const SpacetimePoint& p) {
    double dQ[4][4][4];
    nabla_q(metric, p, dQ);
    const Metric4 g = metric_at(metric, p);
    Vec4 xi = Vec4::Zero();
    for (int n = 0; n < 4; ++n) {
        double v = 0.0;
        for (int m = 0; m < 4; ++m)
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) v += g.g_inv(m, a) * g.g_inv(n, b) * dQ[m][a][b];
        xi[n] = v;
    }
    return xi;
}

double cky_residual(const StaticMetric& metric, const SpacetimePoint& p, const Vec4& x,
                    const Vec4& y, const Vec4& z) {
    double dQ[4][4][4];
    nabla_q(metric, p, dQ);
    const Metric4 g = metric_at(metric, p);
    const Vec4 xi = div_q(metric, p);

    double lhs = 0.0;
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            for (int r = 0; r < 4; ++r)
                lhs += dQ[m][n][r] * (x[m] * y[n] + y[m] * x[n]) * z[r];

    const double xy = g.dot(x, y);
    const double xz = g.dot(x, z);
    const double yz = g.dot(y, z);
    const double xiz = g.dot(xi, z);
    const double xiy = g.dot(xi, y);
    const double xix = g.dot(xi, x);
    const double rhs = (2.0 * xy * xiz - xz * xiy - yz * xix) / 3.0;
    return std::abs(lhs - rhs);
}

QContractions contract_q(const CKYForm& form, const Metric4& metric_point,
                         const AdaptedFrameNode& frame) {
    const double res = frame_orthonormality_residual(metric_point, frame);
    if (res > 1e-8)
        throw ContractError("contract_q: frame orthonormality residual " + std::to_string(res));
    QContractions out;
    out.q34 = form(frame.e3, frame.e4);
    out.qb3 = Vec2(form(frame.e1, frame.e3), form(frame.e2, frame.e3));
    out.qb4 = Vec2(form(frame.e1, frame.e4), form(frame.e2, frame.e4));
    out.q12 = form(frame.e1, frame.e2);
    return out;
}

}  // namespace qlmass
