#pragma once

#include <memory>
#include <vector>

#include "qlmass/errors.hpp"

namespace qlmass {

// Product grid on the 2-sphere parameter domain: Gauss-Legendre nodes in
// x = cos(theta) crossed with uniform phi nodes. Node weights combine the
// GL weight with 2*pi/n_phi, so sum(w) integrates against d(cos theta) dphi
// and equals 4*pi for the constant 1. No node sits at theta = 0 or pi.
class Grid {
  public:
    Grid(int n_theta, int n_phi);

    int n_theta() const { return n_theta_; }
    int n_phi() const { return n_phi_; }
    int size() const { return n_theta_ * n_phi_; }

    double theta(int i) const { return theta_[i]; }
    double cos_theta(int i) const { return x_[i]; }
    double phi(int j) const { return phi_[j]; }
    // combined weight for node (i, j); independent of j by construction
    double weight(int i) const { return w_theta_[i] * w_phi_; }

    int node_index(int i, int j) const { return i * n_phi_ + j; }

    // d/dtheta of a theta-row of samples (length n_theta), by collocation
    // differentiation of the polynomial interpolant in x = cos(theta).
    std::vector<double> d_dtheta(const std::vector<double>& row) const;

    // second theta derivative (two applications of d_dtheta)
    std::vector<double> d2_dtheta2(const std::vector<double>& row) const;

    bool same_layout(const Grid& other) const {
        return n_theta_ == other.n_theta_ && n_phi_ == other.n_phi_;
    }

  private:
    int n_theta_ = 0;
    int n_phi_ = 0;
    std::vector<double> x_;        // GL nodes in (-1,1), increasing
    std::vector<double> theta_;    // acos(x), decreasing from near pi
    std::vector<double> w_theta_;  // GL weights
    double w_phi_ = 0.0;
    std::vector<double> phi_;
    std::vector<double> diff_;     // n_theta x n_theta d/dx matrix, row-major
};

// Per-node scalar samples tied to a grid.
struct ScalarField {
    const Grid* grid = nullptr;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const Grid& g) : grid(&g), values(g.size(), 0.0) {}

    double& at(int i, int j) { return values[grid->node_index(i, j)]; }
    double at(int i, int j) const { return values[grid->node_index(i, j)]; }
};

Grid make_grid(int n_theta, int n_phi);

// sum over nodes of value * area_element * weight, pairwise-summed for a
// deterministic, well-conditioned reduction. area_element is the surface
// measure relative to d(cos theta) dphi (R^2 for a round R-sphere).
double integrate(const ScalarField& field, const ScalarField& area_element);

// integral of 1 * area_element
double surface_area(const ScalarField& area_element);

}  // namespace qlmass
