#include "spinpair/states.hpp"

#include <cmath>

#include "spinpair/spin_ops.hpp"

namespace spinpair {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

Vector basis4(int k) {
    Vector v = Vector::Zero(4);
    v(k) = 1.0;
    return v;
}
}  // namespace

std::string to_string(StateLabel label) {
    switch (label) {
        case StateLabel::ZeemanTPlus: return "T+";
        case StateLabel::ZeemanT0: return "T0";
        case StateLabel::ZeemanTMinus: return "T-";
        case StateLabel::Singlet: return "S";
        case StateLabel::TripletX: return "Tx";
        case StateLabel::TripletY: return "Ty";
        case StateLabel::TripletZ: return "Tz";
        case StateLabel::Custom: return "custom";
    }
    return "custom";
}

std::array<SpinPairState, 3> zeeman_triplets() {
    Vector t0 = kInvSqrt2 * (basis4(1) + basis4(2));
    return {SpinPairState{PureState(basis4(0)), StateLabel::ZeemanTPlus, {}},
            SpinPairState{PureState(t0), StateLabel::ZeemanT0, {}},
            SpinPairState{PureState(basis4(3)), StateLabel::ZeemanTMinus, {}}};
}

SpinPairState singlet() {
    Vector s = kInvSqrt2 * (basis4(1) - basis4(2));
    return {PureState(s), StateLabel::Singlet, {}};
}

std::array<SpinPairState, 3> zfs_triplets() {
    Vector tx = kInvSqrt2 * (basis4(3) - basis4(0));
    Vector ty = kI * kInvSqrt2 * (basis4(3) + basis4(0));
    Vector tz = kInvSqrt2 * (basis4(1) + basis4(2));
    return {SpinPairState{PureState(tx), StateLabel::TripletX, {}},
            SpinPairState{PureState(ty), StateLabel::TripletY, {}},
            SpinPairState{PureState(tz), StateLabel::TripletZ, {}}};
}

std::array<Vector, 3> zfs_triplets_in_zeeman_basis() {
    Vector tx(3), ty(3), tz(3);
    tx << -kInvSqrt2, 0, kInvSqrt2;
    ty << kI * kInvSqrt2, 0, kI * kInvSqrt2;
    tz << 0, 1, 0;
    return {tx, ty, tz};
}

Matrix triplet_basis() {
    Matrix b = Matrix::Zero(4, 3);
    b(0, 0) = 1.0;
    b(1, 1) = kInvSqrt2;
    b(2, 1) = kInvSqrt2;
    b(3, 2) = 1.0;
    return b;
}

SpinPairState general_triplet(TripletVariant variant) {
    Vector v(4);
    v << kInvSqrt3, kInvSqrt3 * kInvSqrt2, kInvSqrt3 * kInvSqrt2, kInvSqrt3;
    const char* name =
        variant == TripletVariant::Canonical ? "general triplet (canonical)"
                                             : "general triplet (tautomeric)";
    return {PureState(v), StateLabel::Custom, name};
}

PureState WcqsState::state() const {
    Vector v = a * cqs.state.amplitudes() + b * tqs.state.amplitudes();
    return PureState::normalized(v);
}

DensityMatrix WcqsState::density_matrix() const {
    return DensityMatrix::from_pure(state());
}

WcqsState wcqs(Complex a, Complex b, SpinPairState cqs, SpinPairState tqs,
               std::optional<double> temperature_K) {
    const double total = std::norm(a) + std::norm(b);
    if (std::abs(total - 1.0) > kWeightTol)
        throw PhysicsError("wcqs: |a|^2 + |b|^2 must be 1");
    return {a, b, std::move(cqs), std::move(tqs), temperature_K};
}

WcqsState wcqs_from_occupation(double p_tautomer, SpinPairState cqs,
                               SpinPairState tqs,
                               std::optional<double> temperature_K) {
    if (p_tautomer < 0.0 || p_tautomer > 1.0)
        throw PhysicsError("wcqs_from_occupation: probability outside [0,1]");
    return {std::sqrt(1.0 - p_tautomer), std::sqrt(p_tautomer), std::move(cqs),
            std::move(tqs), temperature_K};
}

TripletPairState fission_singlet() {
    Vector v = Vector::Zero(9);
    v(0) = kInvSqrt3;  // |Tx Tx*>
    v(4) = kInvSqrt3;  // |Ty Ty*>
    v(8) = kInvSqrt3;  // |Tz Tz*>
    return {PureState(v)};
}

Matrix triplet_pair_total_spin_squared() {
    Matrix sq = Matrix::Zero(9, 9);
    Matrix id = Matrix::Identity(3, 3);
    for (char a : {'x', 'y', 'z'}) {
        Matrix j = spin1_cartesian(a);
        Matrix tot = kron(j, id) + kron(id, j);
        sq += tot * tot;
    }
    return sq;
}

namespace {

// +1 symmetric, -1 antisymmetric, 0 otherwise.
int swap_symmetry(const PureState& s) {
    Vector swapped = swap_op() * s.amplitudes();
    if ((swapped - s.amplitudes()).norm() < 1e-9) return 1;
    if ((swapped + s.amplitudes()).norm() < 1e-9) return -1;
    return 0;
}

}  // namespace

CompositeState assemble_cqs(SpatialParity parity, const SpinPairState& spin) {
    const int spin_sym = swap_symmetry(spin.state);
    if (spin_sym == 0)
        throw PhysicsError("assemble_cqs: spin state has no definite exchange symmetry");
    const bool spatial_sym = parity == SpatialParity::Symmetric;
    // Total state must be antisymmetric under simultaneous exchange.
    if (!spatial_sym && spin_sym == 1)
        return {parity, spin, "ground"};
    if (spatial_sym && spin_sym == -1)
        return {parity, spin, "excited (transition-state)"};
    throw PhysicsError(
        "assemble_cqs: spatial parity and spin symmetry violate two-fermion antisymmetry");
}

}  // namespace spinpair
