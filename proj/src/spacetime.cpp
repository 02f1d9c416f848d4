#include "qlmass/spacetime.hpp"

#include <cmath>
#include <sstream>

namespace qlmass {

namespace {

constexpr double kHorizonMargin = 1e-6;

// positive root of r^3 + r - 2M = 0 (f^2 = 0 for AdS-Schwarzschild)
double ads_schwarzschild_horizon(double mass) {
    double r = std::cbrt(2.0 * mass);
    for (int i = 0; i < 80; ++i) {
        const double f = r * r * r + r - 2.0 * mass;
        const double fp = 3.0 * r * r + 1.0;
        const double step = f / fp;
        r -= step;
        if (std::abs(step) < 1e-16 * (1.0 + std::abs(r))) break;
    }
    return r;
}

}  // namespace

StaticMetric::StaticMetric(MetricKind kind, double mass) : kind_(kind), mass_(mass) {
    if (mass < 0.0) throw DomainError("metric: mass parameter must be >= 0");
    switch (kind_) {
        case MetricKind::Minkowski:
        case MetricKind::AntiDeSitter:
            horizon_ = 0.0;
            break;
        case MetricKind::Schwarzschild:
            horizon_ = 2.0 * mass_;
            break;
        case MetricKind::AdSSchwarzschild:
            horizon_ = mass_ > 0.0 ? ads_schwarzschild_horizon(mass_) : 0.0;
            break;
    }
}

StaticMetric StaticMetric::minkowski() { return StaticMetric(MetricKind::Minkowski, 0.0); }
StaticMetric StaticMetric::anti_de_sitter() { return StaticMetric(MetricKind::AntiDeSitter, 0.0); }
StaticMetric StaticMetric::schwarzschild(double mass) { return StaticMetric(MetricKind::Schwarzschild, mass); }
StaticMetric StaticMetric::ads_schwarzschild(double mass) { return StaticMetric(MetricKind::AdSSchwarzschild, mass); }

StaticMetric StaticMetric::by_name(const std::string& name, double mass) {
    if (name == "minkowski") return minkowski();
    if (name == "ads" || name == "anti_de_sitter") return anti_de_sitter();
    if (name == "schwarzschild") return schwarzschild(mass);
    if (name == "ads_schwarzschild") return ads_schwarzschild(mass);
    throw ConfigError("unknown spacetime '" + name +
                      "' (expected minkowski, ads, schwarzschild, ads_schwarzschild)");
}

StaticMetric StaticMetric::static_product() const {
    StaticMetric m = *this;
    m.unit_lapse_ = true;
    return m;
}

double StaticMetric::f_squared(double r) const {
    switch (kind_) {
        case MetricKind::Minkowski: return 1.0;
        case MetricKind::AntiDeSitter: return 1.0 + r * r;
        case MetricKind::Schwarzschild: return 1.0 - 2.0 * mass_ / r;
        case MetricKind::AdSSchwarzschild: return 1.0 + r * r - 2.0 * mass_ / r;
    }
    return 1.0;
}

double StaticMetric::df_squared(double r) const {
    switch (kind_) {
        case MetricKind::Minkowski: return 0.0;
        case MetricKind::AntiDeSitter: return 2.0 * r;
        case MetricKind::Schwarzschild: return 2.0 * mass_ / (r * r);
        case MetricKind::AdSSchwarzschild: return 2.0 * r + 2.0 * mass_ / (r * r);
    }
    return 0.0;
}

double StaticMetric::ddf_squared(double r) const {
    switch (kind_) {
        case MetricKind::Minkowski: return 0.0;
        case MetricKind::AntiDeSitter: return 2.0;
        case MetricKind::Schwarzschild: return -4.0 * mass_ / (r * r * r);
        case MetricKind::AdSSchwarzschild: return 2.0 - 4.0 * mass_ / (r * r * r);
    }
    return 0.0;
}

bool StaticMetric::admissible(double r) const {
    if (horizon_ > 0.0) return r > horizon_ + kHorizonMargin;
    return r > kHorizonMargin;
}

void StaticMetric::require_admissible(double r) const {
    if (admissible(r)) return;
    std::ostringstream os;
    os << name() << ": r = " << r << " outside admissible domain (require r > ";
    if (horizon_ > 0.0)
        os << horizon_ << " + " << kHorizonMargin << ", horizon at r = " << horizon_ << ")";
    else
        os << kHorizonMargin << ")";
    throw DomainError(os.str());
}

std::string StaticMetric::name() const {
    std::string base;
    switch (kind_) {
        case MetricKind::Minkowski: base = "minkowski"; break;
        case MetricKind::AntiDeSitter: base = "ads"; break;
        case MetricKind::Schwarzschild: base = "schwarzschild"; break;
        case MetricKind::AdSSchwarzschild: base = "ads_schwarzschild"; break;
    }
    if (unit_lapse_) base += "(unit lapse)";
    return base;
}

Metric4 metric_at(const StaticMetric& metric, const SpacetimePoint& p) {
    metric.require_admissible(p.r);
    const double A = metric.lapse_squared(p.r);
    const double B = 1.0 / metric.f_squared(p.r);
    const double s = std::sin(p.theta);
    Metric4 out;
    out.g = Mat4::Zero();
    out.g(kT, kT) = -A;
    out.g(kR, kR) = B;
    out.g(kTheta, kTheta) = p.r * p.r;
    out.g(kPhi, kPhi) = p.r * p.r * s * s;
    out.g_inv = Mat4::Zero();
    out.g_inv(kT, kT) = -1.0 / A;
    out.g_inv(kR, kR) = 1.0 / B;
    out.g_inv(kTheta, kTheta) = 1.0 / (p.r * p.r);
    out.g_inv(kPhi, kPhi) = 1.0 / (p.r * p.r * s * s);
    return out;
}

Christoffel4 christoffel_at(const StaticMetric& metric, const SpacetimePoint& p) {
    metric.require_admissible(p.r);
    const double r = p.r;
    const double A = metric.lapse_squared(r);
    const double Ap = metric.dlapse_squared(r);
    const double App = metric.ddlapse_squared(r);
    const double F = metric.f_squared(r);
    const double Fp = metric.df_squared(r);
    const double Fpp = metric.ddf_squared(r);
    const double B = 1.0 / F;
    const double Bp = -Fp / (F * F);
    const double Bpp = (2.0 * Fp * Fp - F * Fpp) / (F * F * F);
    const double s = std::sin(p.theta);
    const double c = std::cos(p.theta);

    Christoffel4 ch;
    auto set = [&ch](int l, int i, int j, double v) {
        ch.gamma[l][i][j] = v;
        ch.gamma[l][j][i] = v;
    };
    auto dset = [&ch](int k, int l, int i, int j, double v) {
        ch.dgamma[k][l][i][j] = v;
        ch.dgamma[k][l][j][i] = v;
    };

    set(kT, kT, kR, Ap / (2.0 * A));
    set(kR, kT, kT, Ap / (2.0 * B));
    set(kR, kR, kR, Bp / (2.0 * B));
    set(kR, kTheta, kTheta, -r / B);
    set(kR, kPhi, kPhi, -r * s * s / B);
    set(kTheta, kR, kTheta, 1.0 / r);
    set(kTheta, kPhi, kPhi, -s * c);
    set(kPhi, kR, kPhi, 1.0 / r);
    set(kPhi, kTheta, kPhi, c / s);

    dset(kR, kT, kT, kR, App / (2.0 * A) - Ap * Ap / (2.0 * A * A));
    dset(kR, kR, kT, kT, App / (2.0 * B) - Ap * Bp / (2.0 * B * B));
    dset(kR, kR, kR, kR, Bpp / (2.0 * B) - Bp * Bp / (2.0 * B * B));
    dset(kR, kR, kTheta, kTheta, -(B - r * Bp) / (B * B));
    dset(kR, kR, kPhi, kPhi, -(B - r * Bp) * s * s / (B * B));
    dset(kTheta, kR, kPhi, kPhi, -2.0 * r * s * c / B);
    dset(kR, kTheta, kR, kTheta, -1.0 / (r * r));
    dset(kTheta, kTheta, kPhi, kPhi, -(c * c - s * s));
    dset(kR, kPhi, kR, kPhi, -1.0 / (r * r));
    dset(kTheta, kPhi, kTheta, kPhi, -1.0 / (s * s));
    return ch;
}

namespace {

// R^l_{bnm} = d_n Gamma^l_{mb} - d_m Gamma^l_{nb}
//           + Gamma^l_{ns} Gamma^s_{mb} - Gamma^l_{ms} Gamma^s_{nb},
// lowered on the first index. Sign pinned so a round sphere carries
// R_{theta phi theta phi} = +r^2 sin^2(theta) and anti-de Sitter satisfies
// R_{abcd} = -(g_ac g_bd - g_ad g_bc).
template <int N, typename Gamma, typename DGamma>
RiemannTensor<N> assemble_riemann(const Gamma& gamma, const DGamma& dgamma,
                                  const Eigen::Matrix<double, N, N>& g) {
    RiemannTensor<N> out;
    for (int l = 0; l < N; ++l) {
        for (int b = 0; b < N; ++b) {
            for (int n = 0; n < N; ++n) {
                for (int m = 0; m < N; ++m) {
                    double v = dgamma[n][l][m][b] - dgamma[m][l][n][b];
                    for (int sidx = 0; sidx < N; ++sidx) {
                        v += gamma[l][n][sidx] * gamma[sidx][m][b] -
                             gamma[l][m][sidx] * gamma[sidx][n][b];
                    }
                    for (int a = 0; a < N; ++a) out.at(a, b, n, m) += g(a, l) * v;
                }
            }
        }
    }
    return out;
}

}  // namespace

CurvatureAtPoint riemann_at(const StaticMetric& metric, const SpacetimePoint& p) {
    const Metric4 m4 = metric_at(metric, p);
    const Christoffel4 ch = christoffel_at(metric, p);
    CurvatureAtPoint out;
    out.riemann = assemble_riemann<4>(ch.gamma, ch.dgamma, m4.g);
    out.ricci = Mat4::Zero();
    for (int k = 0; k < 4; ++k) {
        for (int m = 0; m < 4; ++m) {
            double v = 0.0;
            for (int a = 0; a < 4; ++a)
                for (int l = 0; l < 4; ++l) v += m4.g_inv(a, l) * out.riemann(a, k, l, m);
            out.ricci(k, m) = v;
        }
    }
    out.scalar = 0.0;
    for (int k = 0; k < 4; ++k)
        for (int m = 0; m < 4; ++m) out.scalar += m4.g_inv(k, m) * out.ricci(k, m);
    out.slice_riemann = slice_curvature_at(metric, p.r, p.theta).riemann;
    return out;
}

SliceCurvature slice_curvature_at(const StaticMetric& metric, double r, double theta) {
    metric.require_admissible(r);
    const double F = metric.f_squared(r);
    const double Fp = metric.df_squared(r);
    const double Fpp = metric.ddf_squared(r);
    const double B = 1.0 / F;
    const double Bp = -Fp / (F * F);
    const double Bpp = (2.0 * Fp * Fp - F * Fpp) / (F * F * F);
    const double s = std::sin(theta);
    const double c = std::cos(theta);

    // slice indices: 0 = r, 1 = theta, 2 = phi
    double gamma[3][3][3] = {};
    double dgamma[3][3][3][3] = {};
    auto set = [&gamma](int l, int i, int j, double v) {
        gamma[l][i][j] = v;
        gamma[l][j][i] = v;
    };
    auto dset = [&dgamma](int k, int l, int i, int j, double v) {
        dgamma[k][l][i][j] = v;
        dgamma[k][l][j][i] = v;
    };
    set(0, 0, 0, Bp / (2.0 * B));
    set(0, 1, 1, -r / B);
    set(0, 2, 2, -r * s * s / B);
    set(1, 0, 1, 1.0 / r);
    set(1, 2, 2, -s * c);
    set(2, 0, 2, 1.0 / r);
    set(2, 1, 2, c / s);

    dset(0, 0, 0, 0, Bpp / (2.0 * B) - Bp * Bp / (2.0 * B * B));
    dset(0, 0, 1, 1, -(B - r * Bp) / (B * B));
    dset(0, 0, 2, 2, -(B - r * Bp) * s * s / (B * B));
    dset(1, 0, 2, 2, -2.0 * r * s * c / B);
    dset(0, 1, 0, 1, -1.0 / (r * r));
    dset(1, 1, 2, 2, -(c * c - s * s));
    dset(0, 2, 0, 2, -1.0 / (r * r));
    dset(1, 2, 1, 2, -1.0 / (s * s));

    SliceCurvature out;
    out.metric = Mat3::Zero();
    out.metric(0, 0) = B;
    out.metric(1, 1) = r * r;
    out.metric(2, 2) = r * r * s * s;
    out.riemann = assemble_riemann<3>(gamma, dgamma, out.metric);
    Mat3 g_inv = Mat3::Zero();
    g_inv(0, 0) = 1.0 / B;
    g_inv(1, 1) = 1.0 / (r * r);
    g_inv(2, 2) = 1.0 / (r * r * s * s);
    out.ricci = Mat3::Zero();
    for (int k = 0; k < 3; ++k) {
        for (int m = 0; m < 3; ++m) {
            double v = 0.0;
            for (int a = 0; a < 3; ++a)
                for (int l = 0; l < 3; ++l) v += g_inv(a, l) * out.riemann(a, k, l, m);
            out.ricci(k, m) = v;
        }
    }
    out.scalar = 0.0;
    for (int k = 0; k < 3; ++k)
        for (int m = 0; m < 3; ++m) out.scalar += g_inv(k, m) * out.ricci(k, m);
    return out;
}

double kretschmann(const StaticMetric& metric, const SpacetimePoint& p) {
    const Metric4 m4 = metric_at(metric, p);
    const CurvatureAtPoint cur = riemann_at(metric, p);
    double total = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    // diagonal metric: raising is componentwise
                    const double up = m4.g_inv(a, a) * m4.g_inv(b, b) * m4.g_inv(c, c) *
                                      m4.g_inv(d, d) * cur.riemann(a, b, c, d);
                    total += cur.riemann(a, b, c, d) * up;
                }
    return total;
}

}  // namespace qlmass
