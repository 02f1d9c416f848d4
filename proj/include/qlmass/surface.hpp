#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qlmass/cky.hpp"
#include "qlmass/quadrature.hpp"
#include "qlmass/spacetime.hpp"

namespace qlmass {

// 2-jet of an axisymmetric chart at parameter theta: the surface is
//   X(theta, phi) = (t(theta), r(theta), vartheta(theta), phi)
// in the ambient coordinates. vartheta == theta for catalog charts; embedded
// generators carry a nontrivial polar profile.
struct ChartJet {
    double t = 0.0, dt = 0.0, ddt = 0.0;
    double r = 0.0, dr = 0.0, ddr = 0.0;
    double vartheta = 0.0, dvartheta = 1.0, ddvartheta = 0.0;
};

class SurfaceChart {
  public:
    static SurfaceChart coordinate_sphere(double radius);
    // r(theta), t(theta) as polynomials in cos(theta); coeffs[k] multiplies cos^k
    static SurfaceChart axisym_graph(const std::vector<double>& r_coeffs,
                                     const std::vector<double>& t_coeffs);
    static SurfaceChart from_jets(const std::string& kind, std::function<ChartJet(double)> jets);

    ChartJet at(double theta) const { return jets_(theta); }
    const std::string& kind() const { return kind_; }

  private:
    SurfaceChart(std::string kind, std::function<ChartJet(double)> jets)
        : kind_(std::move(kind)), jets_(std::move(jets)) {}
    std::string kind_;
    std::function<ChartJet(double)> jets_;
};

struct AdaptedFrameNode {
    Vec4 e1 = Vec4::Zero();  // tangent along theta, unit
    Vec4 e2 = Vec4::Zero();  // tangent along phi, unit
    Vec4 e3 = Vec4::Zero();  // outward spacelike normal
    Vec4 e4 = Vec4::Zero();  // future timelike normal
};

struct AdaptedFrame {
    const Grid* grid = nullptr;
    std::vector<AdaptedFrameNode> nodes;

    const AdaptedFrameNode& at(int i, int j) const { return nodes[grid->node_index(i, j)]; }
};

// worst deviation of the Gram matrix from diag(1,1,1,-1)
double frame_orthonormality_residual(const Metric4& g, const AdaptedFrameNode& f);

// Full pointwise geometry of the surface in the frame it was built with.
// 2x2 objects are in the coordinate basis (theta, phi) of the parameter
// domain; sigma is diagonal for axisymmetric charts.
//
// Conventions (pinned by the round-sphere tests):
//   h_n(a,b) = <D_a e_n, e_b>, so tr h3 = +2/R on a round R-sphere with
//   outward e3; alpha(.) = <D_(.) e3, e4>;
//   H = (tr h3) e3 - (tr h4) e4 and J = -(tr h4) e3 + (tr h3) e4, so that
//   <J,H> = 0, <J,J> = -<H,H>, and J is future for mean-convex surfaces.
struct SurfaceGeometry {
    const Grid* grid = nullptr;
    StaticMetric metric;
    SurfaceChart chart;

    std::vector<SpacetimePoint> points;
    std::vector<Vec4> tangent_theta;  // dX/dtheta, coordinate components
    std::vector<Vec4> tangent_phi;

    std::vector<Mat2> sigma;
    std::vector<Mat2> sigma_inv;
    std::vector<double> area_element;  // dSigma / (dcos(theta) dphi)
    std::vector<Mat2> h3, h4;
    std::vector<Vec2> alpha;
    std::vector<double> tr_h3, tr_h4;
    std::vector<Vec4> mean_curv_H, dual_J;
    std::vector<double> gauss_K;

    ScalarField scalar(const std::vector<double>& v) const;
    ScalarField area_field() const;

    // h projected on the orthonormal tangents {e1, e2}
    Mat2 h3_frame(int node) const;
    Mat2 h4_frame(int node) const;
    Vec2 alpha_frame(int node) const;
    double det_frame(const Mat2& h, int node) const;
};

enum class FrameChoice { SliceAdapted, MeanCurvature };

std::pair<AdaptedFrame, SurfaceGeometry> build_geometry(const StaticMetric& metric,
                                                        const SurfaceChart& chart,
                                                        const Grid& grid,
                                                        FrameChoice choice);

// geometry of the same chart with a caller-supplied normal frame
SurfaceGeometry geometry_for_frame(const StaticMetric& metric, const SurfaceChart& chart,
                                   const Grid& grid, const AdaptedFrame& frame);

// nodewise hyperbolic rotation of the normal frame by s
AdaptedFrame boost_frame(const AdaptedFrame& frame, const std::vector<double>& s);

// exact transformation law applied to an existing geometry: h's rotate
// pointwise, alpha shifts by ds (spectral). Used as the second route in the
// frame-covariance tests.
SurfaceGeometry boost_geometry(const SurfaceGeometry& geom, const AdaptedFrame& frame,
                               const std::vector<double>& s);

// Reference gauge: e4 proportional to the normal projection of d/dt (the
// time-translation pushforward of the projected surface's slice normal
// reproduces exactly this frame in a static ambient), e3 its outward
// complement. Checks that the t = const projection of the chart is embedded.
std::pair<AdaptedFrame, SurfaceGeometry> canonical_frame(const StaticMetric& metric,
                                                         const SurfaceChart& chart,
                                                         const Grid& grid);

// Unique boost of the geometry's frame with <H, e4_new> = target. Solvable
// whenever H is spacelike; the geometry must carry the frame it was built in.
AdaptedFrame matched_frame(const SurfaceGeometry& geom, const AdaptedFrame& frame,
                           const ScalarField& target, std::vector<double>* boost_param = nullptr);

struct GaussCodazziResiduals {
    ScalarField gauss;     // K - [det h3 - det h4 + R_1212]
    ScalarField codazzi3;  // nabla_a h3_bc antisymmetrized vs R_abc3 + alpha terms
    ScalarField codazzi4;
};

GaussCodazziResiduals gauss_codazzi_residual(const StaticMetric& metric,
                                             const AdaptedFrame& frame,
                                             const SurfaceGeometry& geom);

}  // namespace qlmass
