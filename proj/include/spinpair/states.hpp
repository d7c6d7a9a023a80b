#pragma once

#include <array>
#include <optional>
#include <string>

#include "spinpair/qmath.hpp"

// Named two-proton spin states: the Zeeman triplet basis, the singlet, the
// zero-field triplet basis, the thermal canonical/tautomer superposition,
// the nine-dimensional triplet-pair fission state and the general triplet.

namespace spinpair {

enum class StateLabel {
    ZeemanTPlus,
    ZeemanT0,
    ZeemanTMinus,
    Singlet,
    TripletX,
    TripletY,
    TripletZ,
    Custom,
};

std::string to_string(StateLabel label);

struct SpinPairState {
    PureState state;
    StateLabel label = StateLabel::Custom;
    std::string name;  // free-form tag for Custom states
};

/// |1,1> = |uu>, |1,0> = (|ud>+|du>)/sqrt2, |1,-1> = |dd>.
std::array<SpinPairState, 3> zeeman_triplets();

/// (|ud> - |du>)/sqrt2.
SpinPairState singlet();

/// Zero-field triplet basis:
///   Tx = (|dd> - |uu>)/sqrt2, Ty = i(|dd> + |uu>)/sqrt2, Tz = (|ud> + |du>)/sqrt2.
std::array<SpinPairState, 3> zfs_triplets();

/// The zero-field triplets written in the Zeeman triplet basis
/// {|1,1>, |1,0>, |1,-1>} as 3-component vectors (same order Tx, Ty, Tz).
std::array<Vector, 3> zfs_triplets_in_zeeman_basis();

/// 4x3 isometry whose columns are |1,1>, |1,0>, |1,-1>.
Matrix triplet_basis();

enum class TripletVariant { Canonical, Tautomeric };

/// (1/sqrt3)[|00> + |11> + (1/sqrt2)(|01> + |10>)].  The tautomeric variant
/// is the same vector; the two are distinguished by label only.
SpinPairState general_triplet(TripletVariant variant);

// ---------------------------------------------------------------------------
// Thermal canonical/tautomer superposition

struct WcqsState {
    Complex a;  // canonical weight
    Complex b;  // tautomer weight
    SpinPairState cqs;
    SpinPairState tqs;
    std::optional<double> temperature_K;  // metadata only

    /// a|cqs> + b|tqs>, renormalized (the two branches may be non-orthogonal).
    PureState state() const;
    /// Projector onto state(); purity is 1 by construction.
    DensityMatrix density_matrix() const;
};

/// Requires |a|^2 + |b|^2 = 1 within 1e-12.
WcqsState wcqs(Complex a, Complex b, SpinPairState cqs, SpinPairState tqs,
               std::optional<double> temperature_K = std::nullopt);

/// Real non-negative weights from a tautomer occupation probability:
/// b = sqrt(p), a = sqrt(1-p).
WcqsState wcqs_from_occupation(double p_tautomer, SpinPairState cqs,
                               SpinPairState tqs,
                               std::optional<double> temperature_K = std::nullopt);

// ---------------------------------------------------------------------------
// Triplet-pair space (dimension 9)

/// State on the product of two zero-field triplet spaces.  Basis order is
/// |T_u T_v*> with index 3u + v, u/v = 0,1,2 for x,y,z.
struct TripletPairState {
    PureState state;
};

/// (|Tx Tx*> + |Ty Ty*> + |Tz Tz*>)/sqrt3, the spin-zero combination created
/// when a singlet splits into a correlated triplet pair.
TripletPairState fission_singlet();

/// Total-spin-squared on the 9-dimensional pair space (sum of two spin-1
/// operator triples in the Cartesian basis).
Matrix triplet_pair_total_spin_squared();

// ---------------------------------------------------------------------------
// Composite spatial x spin assembly

enum class SpatialParity { Symmetric, Antisymmetric };

struct CompositeState {
    SpatialParity parity;
    SpinPairState spin;
    std::string role;  // "ground" or "excited (transition-state)"
};

/// Pairs a spatial exchange parity with a spin state such that the total
/// two-fermion state is antisymmetric.  Accepts (antisymmetric, triplet) as
/// the ground state and (symmetric, singlet) as the excited transition-state
/// combination; anything else raises PhysicsError.
CompositeState assemble_cqs(SpatialParity parity, const SpinPairState& spin);

}  // namespace spinpair
