#pragma once

#include "spinpair/qmath.hpp"

// Two-proton spin Hamiltonians in angular-frequency units (hbar = 1):
// point dipole-dipole coupling, its secular reduction, the phenomenological
// zero-field splitting on the triplet space, scalar J-coupling, Zeeman term
// and the secular total split into a diagonal part plus a flip-flop part.

namespace spinpair {

/// Larmor frequency, J-coupling and secular dipolar constant.
/// omega_a = pi J + d and omega_b = pi J - d.
struct SpinSystemParams {
    double omega0 = 0.0;  // rad/s
    double j_hz = 0.0;    // Hz
    double d = 0.0;       // rad/s

    double pi_j() const;
    double omega_a() const;
    double omega_b() const;
};

struct ZfsParams {
    double d_zfs = 0.0;  // rad/s, axial
    double e_zfs = 0.0;  // rad/s, transverse
};

struct PairGeometry {
    double r_angstrom = 2.86;     // inter-proton distance
    double theta = 0.0;           // angle between r and the z axis
    double gamma = 2.6752218744e8;  // rad s^-1 T^-1
};

/// Dipolar prefactor b = (mu0/4pi) gamma^2 hbar / r^3 in rad/s.
double dipolar_b_constant(const PairGeometry& geom);

/// Full point-dipole Hamiltonian b [ S1.S2 - 3 (S1.r)(S2.r) ] on the
/// two-spin space.  Traceless and Hermitian.
Matrix dipolar_pair_h(const PairGeometry& geom);

/// Secular dipolar constant d = -(b/2)(3 cos^2 theta - 1), the unique scalar
/// for which d (3 S1z S2z - S1.S2) reproduces the part of the dipolar
/// Hamiltonian that commutes with total Sz.
double secular_dipolar_d(const PairGeometry& geom);

/// d (3 S1z S2z - S1.S2).
Matrix secular_dipolar_h(double d);

/// Zero-field splitting D(Sz^2 - S^2/3) + E(Sx^2 - Sy^2) on the spin-1
/// space in the |m = +1, 0, -1> basis.  Eigenvectors are the zero-field
/// triplets with eigenvalues -2D/3 (Tz), D/3 - E (Tx) and D/3 + E (Ty).
Matrix zfs_h(const ZfsParams& z);

/// 2 pi J S1.S2 with J in Hz.
Matrix j_h(double j_hz);

/// omega0 (S1z + S2z).
Matrix zeeman_h(double omega0);

struct SecularParts {
    Matrix diagonal;   // omega0 (S1z + S2z) + 2 omega_a S1z S2z
    Matrix flip_flop;  // (w/2)(S1+ S2- + S1- S2+)
    Matrix total() const { return diagonal + flip_flop; }
};

/// Secular Hamiltonian with the flip-flop coefficient omega_b/2 taken from
/// the packaged definition omega_b = pi J - d.
SecularParts secular_h(const SpinSystemParams& p);

/// Secular Hamiltonian obtained by expanding Zeeman + 2 pi J S1.S2 +
/// d (3 S1z S2z - S1.S2) directly; here the flip-flop half-coefficient is
/// pi J - d/2 instead of (pi J - d)/2.  The diagonal part is identical.
/// See the tests for the pinned difference between the two forms.
SecularParts secular_h_expanded(const SpinSystemParams& p);

/// Diagonal triplet-subspace Hamiltonian over {T+, T0, T-}:
/// diag( (2 omega0 + pi J + d)/2, (pi J - 2d)/2, (-2 omega0 + pi J + d)/2 ).
/// Equals the triplet projection of secular_h_expanded.
Matrix triplet_block(const SpinSystemParams& p);

}  // namespace spinpair
