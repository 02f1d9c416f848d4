#include "qlmass/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace qlmass {

namespace {

// Newton iteration on Legendre polynomials; nodes returned increasing.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 1; i <= m; ++i) {
        double z = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        x[i - 1] = -z;
        x[n - i] = z;
        w[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - i] = w[i - 1];
    }
}

double pairwise_sum(const double* a, int n) {
    if (n <= 8) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += a[i];
        return s;
    }
    const int h = n / 2;
    return pairwise_sum(a, h) + pairwise_sum(a + h, n - h);
}

}  // namespace

Grid::Grid(int n_theta, int n_phi) : n_theta_(n_theta), n_phi_(n_phi) {
    if (n_theta < 4) throw ConfigError("grid: n_theta must be >= 4, got " + std::to_string(n_theta));
    if (n_phi < 8) throw ConfigError("grid: n_phi must be >= 8, got " + std::to_string(n_phi));

    gauss_legendre(n_theta_, x_, w_theta_);
    theta_.resize(n_theta_);
    for (int i = 0; i < n_theta_; ++i) theta_[i] = std::acos(x_[i]);

    w_phi_ = 2.0 * std::numbers::pi / n_phi_;
    phi_.resize(n_phi_);
    for (int j = 0; j < n_phi_; ++j) phi_[j] = j * w_phi_;

    // barycentric weights for GL nodes (Berrut-Trefethen): stable up to
    // common scale, b_i = (-1)^i sqrt((1 - x_i^2) w_i)
    std::vector<double> b(n_theta_);
    for (int i = 0; i < n_theta_; ++i) {
        b[i] = ((i % 2) ? -1.0 : 1.0) * std::sqrt((1.0 - x_[i] * x_[i]) * w_theta_[i]);
    }
    diff_.assign(static_cast<size_t>(n_theta_) * n_theta_, 0.0);
    for (int i = 0; i < n_theta_; ++i) {
        double diag = 0.0;
        for (int j = 0; j < n_theta_; ++j) {
            if (i == j) continue;
            const double d = (b[j] / b[i]) / (x_[i] - x_[j]);
            diff_[static_cast<size_t>(i) * n_theta_ + j] = d;
            diag -= d;
        }
        diff_[static_cast<size_t>(i) * n_theta_ + i] = diag;
    }
}

std::vector<double> Grid::d_dtheta(const std::vector<double>& row) const {
    if (static_cast<int>(row.size()) != n_theta_)
        throw ConfigError("d_dtheta: row length does not match n_theta");
    std::vector<double> out(n_theta_, 0.0);
    for (int i = 0; i < n_theta_; ++i) {
        double s = 0.0;
        const double* d = &diff_[static_cast<size_t>(i) * n_theta_];
        for (int j = 0; j < n_theta_; ++j) s += d[j] * row[j];
        // df/dtheta = -sin(theta) df/dx
        out[i] = -std::sqrt(1.0 - x_[i] * x_[i]) * s;
    }
    return out;
}

std::vector<double> Grid::d2_dtheta2(const std::vector<double>& row) const {
    return d_dtheta(d_dtheta(row));
}

Grid make_grid(int n_theta, int n_phi) { return Grid(n_theta, n_phi); }

double integrate(const ScalarField& field, const ScalarField& area_element) {
    if (field.grid == nullptr || area_element.grid == nullptr)
        throw ConfigError("integrate: field without grid");
    if (field.grid != area_element.grid && !field.grid->same_layout(*area_element.grid))
        throw ConfigError("integrate: field and area element live on different grids");
    const Grid& g = *field.grid;
    std::vector<double> terms(g.size());
    for (int i = 0; i < g.n_theta(); ++i) {
        for (int j = 0; j < g.n_phi(); ++j) {
            const int k = g.node_index(i, j);
            terms[k] = field.values[k] * area_element.values[k] * g.weight(i);
        }
    }
    return pairwise_sum(terms.data(), static_cast<int>(terms.size()));
}

double surface_area(const ScalarField& area_element) {
    ScalarField one(*area_element.grid);
    for (auto& v : one.values) v = 1.0;
    return integrate(one, area_element);
}

}  // namespace qlmass
