#pragma once

#include <string>
#include <vector>

#include "spinpair/qmath.hpp"
#include "spinpair/states.hpp"

// One-dimensional two-proton spatial toy model.  Each proton lives in a
// normalized Gaussian localized on one of two sites separated by R; the
// delocalized one-proton orbitals are the even/odd combinations of the two
// site functions, and the two-proton wavefunction is their symmetrized or
// antisymmetrized product on a square grid.

namespace spinpair {

struct SpatialModel {
    double separation_angstrom = 2.86;  // N...N distance
    double sigma_angstrom = 0.3;        // Gaussian width
    double grid_min = -1.5;
    double grid_max = 4.36;
    int grid_points = 201;
    SpatialParity parity = SpatialParity::Antisymmetric;
};

struct SpatialWavefunction {
    SpatialModel model;
    Eigen::VectorXd x;       // grid, size n
    Eigen::MatrixXd psi;     // psi(x1, x2), n x n, real by construction
    double cell_area = 0.0;  // dx * dx used for grid normalization

    double density(int i, int j) const { return psi(i, j) * psi(i, j); }
    /// sum_ij |psi|^2 dx^2
    double grid_norm() const;
};

/// Builds the two-proton amplitude for the requested exchange parity.
/// Throws PhysicsError for degenerate models (sigma <= 0, coincident sites,
/// vanishing odd orbital) and when the grid does not cover both sites.
SpatialWavefunction spatial_two_proton(const SpatialModel& model);

/// Writes "x1,x2,re,im,abs2" rows (17 significant digits).
void write_spatial_csv(const SpatialWavefunction& wf, const std::string& path);

}  // namespace spinpair
