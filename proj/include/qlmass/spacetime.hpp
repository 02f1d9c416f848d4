#pragma once

#include <Eigen/Dense>
#include <string>

#include "qlmass/errors.hpp"

namespace qlmass {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

enum class MetricKind { Minkowski, AntiDeSitter, Schwarzschild, AdSSchwarzschild };

// Coordinates (t, r, theta, phi) for the line element
//   -f(r)^2 dt^2 + dr^2/f(r)^2 + r^2 (dtheta^2 + sin^2 theta dphi^2),
// index order 0..3. Geometric units G = c = 1, AdS radius fixed to 1.
inline constexpr int kT = 0;
inline constexpr int kR = 1;
inline constexpr int kTheta = 2;
inline constexpr int kPhi = 3;

struct SpacetimePoint {
    double t = 0.0;
    double r = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

template <int N>
struct RiemannTensor {
    double c[N][N][N][N] = {};
    double operator()(int a, int b, int cc, int d) const { return c[a][b][cc][d]; }
    double& at(int a, int b, int cc, int d) { return c[a][b][cc][d]; }
};

using Riemann4 = RiemannTensor<4>;
using Riemann3 = RiemannTensor<3>;

// Catalog of static spherically symmetric metrics with exact f^2 and its
// two radial derivatives. static_product() swaps the lapse for 1, giving
// the auxiliary spacetime -dt^2 + gbar over the same t = const slice.
class StaticMetric {
  public:
    static StaticMetric minkowski();
    static StaticMetric anti_de_sitter();
    static StaticMetric schwarzschild(double mass);
    static StaticMetric ads_schwarzschild(double mass);
    static StaticMetric by_name(const std::string& name, double mass);

    MetricKind kind() const { return kind_; }
    double mass_param() const { return mass_; }
    bool unit_lapse() const { return unit_lapse_; }
    StaticMetric static_product() const;

    double f_squared(double r) const;
    double df_squared(double r) const;
    double ddf_squared(double r) const;

    // lapse-squared A and radial coefficient B of -A dt^2 + B dr^2 + r^2 dS^2
    double lapse_squared(double r) const { return unit_lapse_ ? 1.0 : f_squared(r); }
    double dlapse_squared(double r) const { return unit_lapse_ ? 0.0 : df_squared(r); }
    double ddlapse_squared(double r) const { return unit_lapse_ ? 0.0 : ddf_squared(r); }

    double horizon_radius() const { return horizon_; }
    bool admissible(double r) const;
    void require_admissible(double r) const;

    std::string name() const;

    bool same_spacetime(const StaticMetric& o) const {
        return kind_ == o.kind_ && mass_ == o.mass_ && unit_lapse_ == o.unit_lapse_;
    }

  private:
    StaticMetric(MetricKind kind, double mass);
    MetricKind kind_;
    double mass_ = 0.0;
    double horizon_ = 0.0;
    bool unit_lapse_ = false;
};

struct Metric4 {
    Mat4 g;
    Mat4 g_inv;
    double dot(const Vec4& x, const Vec4& y) const { return x.dot(g * y); }
};

struct Christoffel4 {
    // gamma[l][i][j] = Gamma^l_{ij}, dgamma[k][l][i][j] = d_k Gamma^l_{ij}
    double gamma[4][4][4] = {};
    double dgamma[4][4][4][4] = {};
};

struct CurvatureAtPoint {
    Riemann4 riemann;  // fully lowered R_{abcd}; R_{theta phi theta phi} > 0 on spheres
    Mat4 ricci;
    double scalar = 0.0;
    Riemann3 slice_riemann;  // curvature of gbar = dr^2/f^2 + r^2 dS^2, indices (r,theta,phi)
};

struct SliceCurvature {
    Riemann3 riemann;
    Mat3 ricci;
    double scalar = 0.0;
    Mat3 metric;  // gbar at the evaluation point (theta enters only through sin^2)
};

Metric4 metric_at(const StaticMetric& metric, const SpacetimePoint& p);
Christoffel4 christoffel_at(const StaticMetric& metric, const SpacetimePoint& p);
CurvatureAtPoint riemann_at(const StaticMetric& metric, const SpacetimePoint& p);
SliceCurvature slice_curvature_at(const StaticMetric& metric, double r, double theta);

// Kretschmann scalar R_{abcd} R^{abcd}
double kretschmann(const StaticMetric& metric, const SpacetimePoint& p);

}  // namespace qlmass
