#include "qlmass/surface.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qlmass {

namespace {

// polynomial in u = cos(theta) with d/dtheta chain rule
struct CosPoly {
    std::vector<double> coeffs;

    double eval(double u) const {
        double v = 0.0;
        for (size_t k = coeffs.size(); k-- > 0;) v = v * u + coeffs[k];
        return v;
    }
    double deriv(double u) const {
        double v = 0.0;
        for (size_t k = coeffs.size(); k-- > 1;) v = v * u + k * coeffs[k];
        return v;
    }
    double deriv2(double u) const {
        double v = 0.0;
        for (size_t k = coeffs.size(); k-- > 2;) v = v * u + k * (k - 1) * coeffs[k];
        return v;
    }
};

Vec4 covariant_dir(const Christoffel4& ch, const Vec4& along, const Vec4& dcomp,
                   const Vec4& field) {
    Vec4 out = dcomp;
    for (int m = 0; m < 4; ++m) {
        double v = 0.0;
        for (int n = 0; n < 4; ++n)
            for (int r = 0; r < 4; ++r) v += ch.gamma[m][n][r] * along[n] * field[r];
        out[m] += v;
    }
    return out;
}

double project_riemann(const Riemann4& R, const Vec4& a, const Vec4& b, const Vec4& c,
                       const Vec4& d) {
    double v = 0.0;
    for (int i = 0; i < 4; ++i) {
        if (a[i] == 0.0) continue;
        for (int j = 0; j < 4; ++j) {
            if (b[j] == 0.0) continue;
            for (int k = 0; k < 4; ++k) {
                if (c[k] == 0.0) continue;
                for (int l = 0; l < 4; ++l) v += R(i, j, k, l) * a[i] * b[j] * c[k] * d[l];
            }
        }
    }
    return v;
}

}  // namespace

SurfaceChart SurfaceChart::coordinate_sphere(double radius) {
    if (radius <= 0.0) throw ConfigError("coordinate_sphere: radius must be positive");
    auto jets = [radius](double theta) {
        ChartJet j;
        j.r = radius;
        j.vartheta = theta;
        return j;
    };
    return SurfaceChart("coordinate_sphere", jets);
}

SurfaceChart SurfaceChart::axisym_graph(const std::vector<double>& r_coeffs,
                                        const std::vector<double>& t_coeffs) {
    if (r_coeffs.empty()) throw ConfigError("axisym_graph: empty r coefficient list");
    CosPoly rp{r_coeffs};
    CosPoly tp{t_coeffs.empty() ? std::vector<double>{0.0} : t_coeffs};
    auto jets = [rp, tp](double theta) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        ChartJet j;
        j.r = rp.eval(c);
        j.dr = -s * rp.deriv(c);
        j.ddr = s * s * rp.deriv2(c) - c * rp.deriv(c);
        j.t = tp.eval(c);
        j.dt = -s * tp.deriv(c);
        j.ddt = s * s * tp.deriv2(c) - c * tp.deriv(c);
        j.vartheta = theta;
        return j;
    };
    return SurfaceChart("axisym_graph", jets);
}

SurfaceChart SurfaceChart::from_jets(const std::string& kind, std::function<ChartJet(double)> jets) {
    return SurfaceChart(kind, std::move(jets));
}

double frame_orthonormality_residual(const Metric4& g, const AdaptedFrameNode& f) {
    const Vec4* e[4] = {&f.e1, &f.e2, &f.e3, &f.e4};
    const double target[4] = {1.0, 1.0, 1.0, -1.0};
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double want = (i == j) ? target[i] : 0.0;
            worst = std::max(worst, std::abs(g.dot(*e[i], *e[j]) - want));
        }
    }
    return worst;
}

ScalarField SurfaceGeometry::scalar(const std::vector<double>& v) const {
    ScalarField f(*grid);
    f.values = v;
    return f;
}

ScalarField SurfaceGeometry::area_field() const { return scalar(area_element); }

Mat2 SurfaceGeometry::h3_frame(int node) const {
    const double su = std::sqrt(sigma[node](0, 0));
    const double sp = std::sqrt(sigma[node](1, 1));
    Mat2 out;
    out(0, 0) = h3[node](0, 0) / (su * su);
    out(0, 1) = out(1, 0) = h3[node](0, 1) / (su * sp);
    out(1, 1) = h3[node](1, 1) / (sp * sp);
    return out;
}

Mat2 SurfaceGeometry::h4_frame(int node) const {
    const double su = std::sqrt(sigma[node](0, 0));
    const double sp = std::sqrt(sigma[node](1, 1));
    Mat2 out;
    out(0, 0) = h4[node](0, 0) / (su * su);
    out(0, 1) = out(1, 0) = h4[node](0, 1) / (su * sp);
    out(1, 1) = h4[node](1, 1) / (sp * sp);
    return out;
}

Vec2 SurfaceGeometry::alpha_frame(int node) const {
    return Vec2(alpha[node][0] / std::sqrt(sigma[node](0, 0)),
                alpha[node][1] / std::sqrt(sigma[node](1, 1)));
}

double SurfaceGeometry::det_frame(const Mat2& h, int node) const {
    return h.determinant() / sigma[node].determinant();
}

namespace {

struct RowData {
    ChartJet jet;
    SpacetimePoint point;
    Metric4 g;
    Christoffel4 ch;
    Vec4 tan_u, tan_p;       // dX/dtheta, dX/dphi
    Vec4 ddX_uu;             // second parameter derivative of X, theta-theta
    double sig_uu = 0.0, sig_pp = 0.0;
    double dG_closed = 0.0;  // d(sigma_phiphi)/dtheta from the jet
};

RowData row_data(const StaticMetric& metric, const SurfaceChart& chart, double theta) {
    RowData d;
    d.jet = chart.at(theta);
    d.point = SpacetimePoint{d.jet.t, d.jet.r, d.jet.vartheta, 0.0};
    metric.require_admissible(d.point.r);
    if (!(d.point.theta > 0.0 && d.point.theta < std::numbers::pi))
        throw DomainError("chart leaves the polar strip: vartheta = " + std::to_string(d.point.theta));
    d.g = metric_at(metric, d.point);
    d.ch = christoffel_at(metric, d.point);
    d.tan_u = Vec4(d.jet.dt, d.jet.dr, d.jet.dvartheta, 0.0);
    d.tan_p = Vec4(0.0, 0.0, 0.0, 1.0);
    d.ddX_uu = Vec4(d.jet.ddt, d.jet.ddr, d.jet.ddvartheta, 0.0);
    d.sig_uu = d.g.dot(d.tan_u, d.tan_u);
    d.sig_pp = d.g(3, 3);
    const double sv = std::sin(d.jet.vartheta);
    const double cv = std::cos(d.jet.vartheta);
    d.dG_closed = 2.0 * d.jet.r * d.jet.dr * sv * sv +
                  2.0 * d.jet.r * d.jet.r * sv * cv * d.jet.dvartheta;
    return d;
}

// frame-independent part: points, tangents, sigma, area, K
void fill_intrinsic(const StaticMetric& metric, const SurfaceChart& chart, const Grid& grid,
                    SurfaceGeometry& geom, std::vector<RowData>& rows) {
    const int nt = grid.n_theta();
    const int np = grid.n_phi();
    rows.clear();
    rows.reserve(nt);
    for (int i = 0; i < nt; ++i) rows.push_back(row_data(metric, chart, grid.theta(i)));

    const int n = grid.size();
    geom.points.resize(n);
    geom.tangent_theta.resize(n);
    geom.tangent_phi.resize(n);
    geom.sigma.resize(n);
    geom.sigma_inv.resize(n);
    geom.area_element.resize(n);
    geom.gauss_K.resize(n);

    std::vector<double> e_row(nt), g_row(nt), ratio(nt);
    for (int i = 0; i < nt; ++i) {
        const RowData& d = rows[i];
        const double cross = d.g.dot(d.tan_u, d.tan_p);
        if (std::abs(cross) > 1e-10)
            throw ConfigError("surface: chart is not axisymmetric (sigma_theta_phi != 0)");
        Mat2 s;
        s << d.sig_uu, 0.0, 0.0, d.sig_pp;
        if (!(s(0, 0) > 0.0) || !(s(1, 1) > 0.0) ||
            std::min(s(0, 0), s(1, 1)) <= 1e-10) {
            std::ostringstream os;
            os << "surface: chart not spacelike at theta = " << grid.theta(i)
               << " (sigma diag " << s(0, 0) << ", " << s(1, 1) << ")";
            throw GaugeError(os.str());
        }
        e_row[i] = d.sig_uu;
        g_row[i] = d.sig_pp;
        ratio[i] = d.dG_closed / std::sqrt(d.sig_uu * d.sig_pp);
    }
    const std::vector<double> dratio = grid.d_dtheta(ratio);

    for (int i = 0; i < nt; ++i) {
        const RowData& d = rows[i];
        const double k = -dratio[i] / (2.0 * std::sqrt(e_row[i] * g_row[i]));
        const double area = std::sqrt(e_row[i] * g_row[i]) / std::sin(grid.theta(i));
        Mat2 s, si;
        s << d.sig_uu, 0.0, 0.0, d.sig_pp;
        si << 1.0 / d.sig_uu, 0.0, 0.0, 1.0 / d.sig_pp;
        for (int j = 0; j < np; ++j) {
            const int node = grid.node_index(i, j);
            geom.points[node] = SpacetimePoint{d.point.t, d.point.r, d.point.theta, grid.phi(j)};
            geom.tangent_theta[node] = d.tan_u;
            geom.tangent_phi[node] = d.tan_p;
            geom.sigma[node] = s;
            geom.sigma_inv[node] = si;
            geom.area_element[node] = area;
            geom.gauss_K[node] = k;
        }
    }
}

AdaptedFrame slice_adapted_frame(const StaticMetric& metric, const Grid& grid,
                                 const std::vector<RowData>& rows) {
    const int nt = grid.n_theta();
    const int np = grid.n_phi();
    AdaptedFrame frame;
    frame.grid = &grid;
    frame.nodes.resize(grid.size());
    for (int i = 0; i < nt; ++i) {
        const RowData& d = rows[i];
        AdaptedFrameNode f;
        f.e1 = d.tan_u / std::sqrt(d.sig_uu);
        f.e2 = d.tan_p / std::sqrt(d.sig_pp);
        // normal projection of d/dt
        Vec4 v = Vec4(1.0, 0.0, 0.0, 0.0);
        v -= d.g.dot(v, f.e1) * f.e1;
        v -= d.g.dot(v, f.e2) * f.e2;
        const double vv = d.g.dot(v, v);
        if (!(vv < -1e-12)) {
            std::ostringstream os;
            os << "frame: normal projection of d/dt is not timelike at theta = "
               << grid.theta(i) << " (<v,v> = " << vv << ")";
            throw GaugeError(os.str());
        }
        f.e4 = v / std::sqrt(-vv);
        if (f.e4[kT] < 0.0) f.e4 = -f.e4;
        // spacelike complement, oriented outward
        Vec4 w = Vec4(0.0, 1.0, 0.0, 0.0);
        w -= d.g.dot(w, f.e1) * f.e1;
        w -= d.g.dot(w, f.e2) * f.e2;
        w += d.g.dot(w, f.e4) * f.e4;
        const double ww = d.g.dot(w, w);
        if (!(ww > 1e-12))
            throw GaugeError("frame: outward normal degenerate at theta = " +
                             std::to_string(grid.theta(i)));
        f.e3 = w / std::sqrt(ww);
        if (d.g.dot(f.e3, Vec4(0.0, 1.0, 0.0, 0.0)) < 0.0) f.e3 = -f.e3;
        for (int j = 0; j < np; ++j) frame.nodes[grid.node_index(i, j)] = f;
    }
    return frame;
}

// h's and alpha with respect to the given frame; fills the frame-dependent
// part of geom. rows must match the grid.
void fill_extrinsic(const Grid& grid, const std::vector<RowData>& rows, const AdaptedFrame& frame,
                    SurfaceGeometry& geom) {
    const int nt = grid.n_theta();
    const int np = grid.n_phi();
    const int n = grid.size();
    geom.h3.resize(n);
    geom.h4.resize(n);
    geom.alpha.resize(n);
    geom.tr_h3.resize(n);
    geom.tr_h4.resize(n);
    geom.mean_curv_H.resize(n);
    geom.dual_J.resize(n);

    // spectral theta-derivative of the e3 component functions
    std::vector<std::vector<double>> de3(4, std::vector<double>(nt));
    {
        std::vector<double> row(nt);
        for (int mu = 0; mu < 4; ++mu) {
            for (int i = 0; i < nt; ++i) row[i] = frame.at(i, 0).e3[mu];
            de3[mu] = grid.d_dtheta(row);
        }
    }

    for (int i = 0; i < nt; ++i) {
        const RowData& d = rows[i];
        const AdaptedFrameNode& f = frame.at(i, 0);

        // second-derivative vectors D_a dX_b
        const Vec4 Duu = covariant_dir(d.ch, d.tan_u, d.ddX_uu, d.tan_u);
        const Vec4 Dup = covariant_dir(d.ch, d.tan_u, Vec4::Zero(), d.tan_p);
        const Vec4 Dpp = covariant_dir(d.ch, d.tan_p, Vec4::Zero(), d.tan_p);

        Mat2 h3c, h4c;
        h3c(0, 0) = -d.g.dot(f.e3, Duu);
        h3c(0, 1) = h3c(1, 0) = -d.g.dot(f.e3, Dup);
        h3c(1, 1) = -d.g.dot(f.e3, Dpp);
        h4c(0, 0) = -d.g.dot(f.e4, Duu);
        h4c(0, 1) = h4c(1, 0) = -d.g.dot(f.e4, Dup);
        h4c(1, 1) = -d.g.dot(f.e4, Dpp);

        Vec4 de3_u;
        for (int mu = 0; mu < 4; ++mu) de3_u[mu] = de3[mu][i];
        const Vec4 D_u_e3 = covariant_dir(d.ch, d.tan_u, de3_u, f.e3);
        const Vec4 D_p_e3 = covariant_dir(d.ch, d.tan_p, Vec4::Zero(), f.e3);
        const Vec2 alpha(d.g.dot(D_u_e3, f.e4), d.g.dot(D_p_e3, f.e4));

        const double trh3 = h3c(0, 0) / d.sig_uu + h3c(1, 1) / d.sig_pp;
        const double trh4 = h4c(0, 0) / d.sig_uu + h4c(1, 1) / d.sig_pp;
        const Vec4 H = trh3 * f.e3 - trh4 * f.e4;
        const Vec4 J = -trh4 * f.e3 + trh3 * f.e4;

        for (int j = 0; j < np; ++j) {
            const int node = grid.node_index(i, j);
            geom.h3[node] = h3c;
            geom.h4[node] = h4c;
            geom.alpha[node] = alpha;
            geom.tr_h3[node] = trh3;
            geom.tr_h4[node] = trh4;
            geom.mean_curv_H[node] = H;
            geom.dual_J[node] = J;
        }
    }
}

}  // namespace

SurfaceGeometry geometry_for_frame(const StaticMetric& metric, const SurfaceChart& chart,
                                   const Grid& grid, const AdaptedFrame& frame) {
    SurfaceGeometry geom{&grid, metric, chart};
    std::vector<RowData> rows;
    fill_intrinsic(metric, chart, grid, geom, rows);
    for (int i = 0; i < grid.n_theta(); ++i) {
        const double res = frame_orthonormality_residual(rows[i].g, frame.at(i, 0));
        if (res > 1e-8)
            throw ContractError("geometry_for_frame: frame not orthonormal, residual " +
                                std::to_string(res));
    }
    fill_extrinsic(grid, rows, frame, geom);
    return geom;
}

std::pair<AdaptedFrame, SurfaceGeometry> build_geometry(const StaticMetric& metric,
                                                        const SurfaceChart& chart,
                                                        const Grid& grid, FrameChoice choice) {
    SurfaceGeometry geom{&grid, metric, chart};
    std::vector<RowData> rows;
    fill_intrinsic(metric, chart, grid, geom, rows);
    AdaptedFrame frame = slice_adapted_frame(metric, grid, rows);
    fill_extrinsic(grid, rows, frame, geom);
    if (choice == FrameChoice::SliceAdapted) return {std::move(frame), std::move(geom)};

    // mean-curvature gauge: e3 along H, e4 along J
    AdaptedFrame mc;
    mc.grid = &grid;
    mc.nodes.resize(grid.size());
    for (int i = 0; i < grid.n_theta(); ++i) {
        const int node0 = grid.node_index(i, 0);
        const double a = geom.tr_h3[node0];
        const double b = -geom.tr_h4[node0];
        const double hh = a * a - b * b;
        if (!(hh > 1e-10)) {
            std::ostringstream os;
            os << "gauge: mean curvature vector not spacelike at theta = " << grid.theta(i)
               << " (<H,H> = " << hh << ")";
            throw GaugeError(os.str());
        }
        if (!(a > 0.0))
            throw GaugeError("gauge: surface not mean-convex (tr h3 <= 0) at theta = " +
                             std::to_string(grid.theta(i)));
        const double norm = std::sqrt(hh);
        const AdaptedFrameNode& f = frame.at(i, 0);
        AdaptedFrameNode m = f;
        m.e3 = (a * f.e3 + b * f.e4) / norm;   // H / |H|
        m.e4 = (b * f.e3 + a * f.e4) / norm;   // J / |H|
        for (int j = 0; j < grid.n_phi(); ++j) mc.nodes[grid.node_index(i, j)] = m;
    }
    SurfaceGeometry mc_geom = geometry_for_frame(metric, chart, grid, mc);
    return {std::move(mc), std::move(mc_geom)};
}

AdaptedFrame boost_frame(const AdaptedFrame& frame, const std::vector<double>& s) {
    if (s.size() != frame.nodes.size())
        throw ConfigError("boost_frame: boost parameter field size mismatch");
    AdaptedFrame out = frame;
    for (size_t k = 0; k < frame.nodes.size(); ++k) {
        const double ch = std::cosh(s[k]);
        const double sh = std::sinh(s[k]);
        out.nodes[k].e3 = ch * frame.nodes[k].e3 + sh * frame.nodes[k].e4;
        out.nodes[k].e4 = sh * frame.nodes[k].e3 + ch * frame.nodes[k].e4;
    }
    return out;
}

SurfaceGeometry boost_geometry(const SurfaceGeometry& geom, const AdaptedFrame& frame,
                               const std::vector<double>& s) {
    const Grid& grid = *geom.grid;
    SurfaceGeometry out = geom;
    std::vector<double> s_row(grid.n_theta());
    for (int i = 0; i < grid.n_theta(); ++i) s_row[i] = s[grid.node_index(i, 0)];
    const std::vector<double> ds_row = grid.d_dtheta(s_row);
    for (int i = 0; i < grid.n_theta(); ++i) {
        for (int j = 0; j < grid.n_phi(); ++j) {
            const int node = grid.node_index(i, j);
            const double ch = std::cosh(s[node]);
            const double sh = std::sinh(s[node]);
            out.h3[node] = ch * geom.h3[node] + sh * geom.h4[node];
            out.h4[node] = sh * geom.h3[node] + ch * geom.h4[node];
            out.alpha[node] = geom.alpha[node] + Vec2(ds_row[i], 0.0);
            out.tr_h3[node] = ch * geom.tr_h3[node] + sh * geom.tr_h4[node];
            out.tr_h4[node] = sh * geom.tr_h3[node] + ch * geom.tr_h4[node];
        }
    }
    return out;
}

std::pair<AdaptedFrame, SurfaceGeometry> canonical_frame(const StaticMetric& metric,
                                                         const SurfaceChart& chart,
                                                         const Grid& grid) {
    // the projection onto the t = const slice must itself be an embedded
    // surface: its induced metric is the spatial part of sigma
    for (int i = 0; i < grid.n_theta(); ++i) {
        const ChartJet j = chart.at(grid.theta(i));
        const double F = metric.f_squared(j.r);
        const double proj_uu = j.dr * j.dr / F + j.r * j.r * j.dvartheta * j.dvartheta;
        if (!(proj_uu > 1e-10))
            throw GaugeError("canonical_frame: degenerate slice projection at theta = " +
                             std::to_string(grid.theta(i)));
    }
    return build_geometry(metric, chart, grid, FrameChoice::SliceAdapted);
}

AdaptedFrame matched_frame(const SurfaceGeometry& geom, const AdaptedFrame& frame,
                           const ScalarField& target, std::vector<double>* boost_param) {
    const Grid& grid = *geom.grid;
    if (target.grid == nullptr || !target.grid->same_layout(grid))
        throw ConfigError("matched_frame: target field grid mismatch");
    std::vector<double> s(grid.size());
    for (int i = 0; i < grid.n_theta(); ++i) {
        for (int j = 0; j < grid.n_phi(); ++j) {
            const int node = grid.node_index(i, j);
            const double a = geom.tr_h3[node];
            const double b = -geom.tr_h4[node];
            const double hh = a * a - b * b;
            if (!(hh > 1e-10))
                throw GaugeError("matched_frame: H not spacelike at theta = " +
                                 std::to_string(grid.theta(i)));
            if (!(a > 0.0))
                throw GaugeError("matched_frame: tr h3 <= 0 at theta = " +
                                 std::to_string(grid.theta(i)));
            const double beta = std::atanh(b / a);
            s[node] = beta + std::asinh(target.values[node] / std::sqrt(hh));
        }
    }
    if (boost_param != nullptr) *boost_param = s;
    return boost_frame(frame, s);
}

GaussCodazziResiduals gauss_codazzi_residual(const StaticMetric& metric,
                                             const AdaptedFrame& frame,
                                             const SurfaceGeometry& geom) {
    const Grid& grid = *geom.grid;
    const int nt = grid.n_theta();
    const int np = grid.n_phi();

    GaussCodazziResiduals out{ScalarField(grid), ScalarField(grid), ScalarField(grid)};

    // induced-connection Christoffels from spectral derivatives of sigma
    std::vector<double> E(nt), G(nt);
    for (int i = 0; i < nt; ++i) {
        E[i] = geom.sigma[grid.node_index(i, 0)](0, 0);
        G[i] = geom.sigma[grid.node_index(i, 0)](1, 1);
    }
    const std::vector<double> dE = grid.d_dtheta(E);
    const std::vector<double> dG = grid.d_dtheta(G);

    // spectral theta-derivatives of the h components
    auto drow = [&](auto get) {
        std::vector<double> row(nt);
        for (int i = 0; i < nt; ++i) row[i] = get(grid.node_index(i, 0));
        return grid.d_dtheta(row);
    };
    const std::vector<double> dh3up = drow([&](int n) { return geom.h3[n](0, 1); });
    const std::vector<double> dh3pp = drow([&](int n) { return geom.h3[n](1, 1); });
    const std::vector<double> dh4up = drow([&](int n) { return geom.h4[n](0, 1); });
    const std::vector<double> dh4pp = drow([&](int n) { return geom.h4[n](1, 1); });

    for (int i = 0; i < nt; ++i) {
        const int node0 = grid.node_index(i, 0);
        const RowData d = row_data(metric, geom.chart, grid.theta(i));
        const CurvatureAtPoint cur = riemann_at(metric, d.point);
        const AdaptedFrameNode& f = frame.at(i, 0);

        // Gauss: K = det h3 - det h4 + R(e1,e2,e1,e2)
        const double r1212 = project_riemann(cur.riemann, f.e1, f.e2, f.e1, f.e2);
        const double gauss_res = geom.gauss_K[node0] -
                                 (geom.det_frame(geom.h3[node0], node0) -
                                  geom.det_frame(geom.h4[node0], node0) + r1212);

        // Codazzi in the coordinate basis, (a,b) = (theta,phi), c free.
        // Gamma^u_{uu} = E'/2E, Gamma^u_{pp} = -G'/2E, Gamma^p_{up} = G'/2G
        const double Guuu = dE[i] / (2.0 * E[i]);
        const double Gupp = -dG[i] / (2.0 * E[i]);
        const double Gpup = dG[i] / (2.0 * G[i]);

        // Codazzi with (a, b) = (theta, phi); c runs over {theta, phi}:
        //   nabla_u h_{pc} - nabla_p h_{uc}
        //     = R(tan_u, tan_p, tan_c, n) + alpha_p oth_{uc} - alpha_u oth_{pc}
        auto codazzi = [&](const Mat2& h, const std::vector<double>& dhup,
                           const std::vector<double>& dhpp, const Mat2& oth, const Vec4& normal,
                           double* res_c) {
            // nabla_u h_{pu} = d_theta h_{up} - Gamma^p_{up} h_{pu} - Gamma^u_{uu} h_{pu}
            const double nu_pu = dhup[i] - Gpup * h(0, 1) - Guuu * h(0, 1);
            // nabla_p h_{uu} = -2 Gamma^p_{pu} h_{pu}
            const double np_uu = -2.0 * Gpup * h(0, 1);
            // nabla_u h_{pp} = d_theta h_{pp} - 2 Gamma^p_{up} h_{pp}
            const double nu_pp = dhpp[i] - 2.0 * Gpup * h(1, 1);
            // nabla_p h_{up} = -Gamma^p_{pu} h_{pp} - Gamma^u_{pp} h_{uu}
            const double np_up = -Gpup * h(1, 1) - Gupp * h(0, 0);

            const Vec2& al = geom.alpha[node0];
            const double R_upun = project_riemann(cur.riemann, d.tan_u, d.tan_p, d.tan_u, normal);
            const double R_uppn = project_riemann(cur.riemann, d.tan_u, d.tan_p, d.tan_p, normal);

            res_c[0] = (nu_pu - np_uu) - (R_upun + al[1] * oth(0, 0) - al[0] * oth(1, 0));
            res_c[1] = (nu_pp - np_up) - (R_uppn + al[1] * oth(0, 1) - al[0] * oth(1, 1));
        };

        double r3[2], r4[2];
        codazzi(geom.h3[node0], dh3up, dh3pp, geom.h4[node0], f.e3, r3);
        codazzi(geom.h4[node0], dh4up, dh4pp, geom.h3[node0], f.e4, r4);

        // orthonormal normalization so tolerances are scale-free
        const double su = std::sqrt(E[i]);
        const double sp = std::sqrt(G[i]);
        const double res3 = std::max(std::abs(r3[0]) / (sp * su * su), std::abs(r3[1]) / (sp * su * sp));
        const double res4 = std::max(std::abs(r4[0]) / (sp * su * su), std::abs(r4[1]) / (sp * su * sp));

        for (int j = 0; j < np; ++j) {
            const int node = grid.node_index(i, j);
            out.gauss.values[node] = gauss_res;
            out.codazzi3.values[node] = res3;
            out.codazzi4.values[node] = res4;
        }
    }
    return out;
}

}  // namespace qlmass
