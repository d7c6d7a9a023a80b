#pragma once

#include <array>
#include <vector>

#include "spinpair/qmath.hpp"

// Variational ground-state search for the six-term two-qubit Hamiltonian
// g0 I + g1 Z0 + g2 Z1 + g3 Z0 Z1 + g4 Y0 Y1 + g5 X0 X1 with the one-
// parameter ansatz exp(-i theta X0 Y1) |01>, which sweeps the real rotations
// of span{|01>, |10>}.

namespace spinpair {

struct VqeOptions {
    int max_iter = 200;
    double theta_tol = 1e-12;
};

struct VqeIterate {
    double theta;
    double energy;
};

struct VqeResult {
    double energy = 0.0;
    double theta = 0.0;
    int iterations = 0;
    bool ground_in_manifold = true;  // false when the true ground state is
                                     // outside span{|01>, |10>}
    std::vector<VqeIterate> trace;
};

/// Dense 4x4 matrix of the six-term Hamiltonian.
Matrix six_term_matrix(const std::array<double, 6>& g);

/// Ansatz state cos(theta)|01> - sin(theta)|10>.
PureState vqe_ansatz(double theta);

double vqe_energy(const std::array<double, 6>& g, double theta);

/// Coarse scan plus golden-section refinement; deterministic.  Raises
/// PhysicsError if the bracket fails to shrink within max_iter (the result
/// so far is carried in the exception message).
VqeResult vqe(const std::array<double, 6>& g, const VqeOptions& opts = {});

}  // namespace spinpair
