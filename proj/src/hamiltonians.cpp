#include "spinpair/hamiltonians.hpp"

#include <cmath>
#include <numbers>

#include "spinpair/constants.hpp"
#include "spinpair/spin_ops.hpp"

namespace spinpair {

double SpinSystemParams::pi_j() const { return std::numbers::pi * j_hz; }
double SpinSystemParams::omega_a() const { return pi_j() + d; }
double SpinSystemParams::omega_b() const { return pi_j() - d; }

double dipolar_b_constant(const PairGeometry& geom) {
    if (geom.r_angstrom <= 0.0)
        throw PhysicsError("dipolar_b_constant: distance must be positive");
    const double r = geom.r_angstrom * si::angstrom;
    return si::mu0_over_4pi * geom.gamma * geom.gamma * si::hbar / (r * r * r);
}

Matrix dipolar_pair_h(const PairGeometry& geom) {
    const double b = dipolar_b_constant(geom);
    const double sx = std::sin(geom.theta);
    const double cz = std::cos(geom.theta);
    // r-hat in the xz plane; the azimuth is irrelevant for a single pair.
    Matrix s1r = sx * s1('x') + cz * s1('z');
    Matrix s2r = sx * s2('x') + cz * s2('z');
    Matrix h = b * (s1_dot_s2() - 3.0 * (s1r * s2r));
    return (h + h.adjoint()) / 2.0;  // exact Hermiticity
}

double secular_dipolar_d(const PairGeometry& geom) {
    const double b = dipolar_b_constant(geom);
    const double c = std::cos(geom.theta);
    return -(b / 2.0) * (3.0 * c * c - 1.0);
}

Matrix secular_dipolar_h(double d) {
    return d * (3.0 * (s1('z') * s2('z')) - s1_dot_s2());
}

Matrix zfs_h(const ZfsParams& z) {
    Matrix sx = spin1('x'), sy = spin1('y'), sz = spin1('z');
    Matrix s2 = sx * sx + sy * sy + sz * sz;
    Matrix h = z.d_zfs * (sz * sz - s2 / 3.0) + z.e_zfs * (sx * sx - sy * sy);
    return (h + h.adjoint()) / 2.0;
}

Matrix j_h(double j_hz) {
    return 2.0 * std::numbers::pi * j_hz * s1_dot_s2();
}

Matrix zeeman_h(double omega0) {
    return omega0 * (s1('z') + s2('z'));
}

namespace {

SecularParts secular_parts(double omega0, double omega_a, double flip_half) {
    Matrix diag = zeeman_h(omega0) + 2.0 * omega_a * (s1('z') * s2('z'));
    Matrix s1p = two_spin_op(spin_half_plus(), 1);
    Matrix s1m = two_spin_op(spin_half_minus(), 1);
    Matrix s2p = two_spin_op(spin_half_plus(), 2);
    Matrix s2m = two_spin_op(spin_half_minus(), 2);
    Matrix ff = flip_half * (s1p * s2m + s1m * s2p);
    return {std::move(diag), (ff + ff.adjoint()) / 2.0};
}

}  // namespace

SecularParts secular_h(const SpinSystemParams& p) {
    return secular_parts(p.omega0, p.omega_a(), p.omega_b() / 2.0);
}

SecularParts secular_h_expanded(const SpinSystemParams& p) {
    return secular_parts(p.omega0, p.omega_a(), p.pi_j() - p.d / 2.0);
}

Matrix triplet_block(const SpinSystemParams& p) {
    Matrix h = Matrix::Zero(3, 3);
    h(0, 0) = (2.0 * p.omega0 + p.pi_j() + p.d) / 2.0;
    h(1, 1) = (p.pi_j() - 2.0 * p.d) / 2.0;
    h(2, 2) = (-2.0 * p.omega0 + p.pi_j() + p.d) / 2.0;
    return h;
}

}  // namespace spinpair
