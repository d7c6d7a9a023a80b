#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "spinpair/hamiltonians.hpp"
#include "spinpair/qmath.hpp"

// Time evolution of two-spin states and density matrices, hard pulses,
// the entangling exchange (Ramsey-type) sequence, Markovian pure dephasing
// and transition spectra of the triplet manifold.

namespace spinpair {

// ---------------------------------------------------------------------------
// Pulses

struct Rotation {
    char axis = 'x';
    double angle = 0.0;            // radians
    bool on_spin1 = true;
    bool on_spin2 = true;
};

struct FreeEvolution {
    double duration = 0.0;  // seconds
    SpinSystemParams params;
};

using SequenceStep = std::variant<Rotation, FreeEvolution>;

/// Ordered hard pulses and free-evolution intervals; durations must be
/// non-negative and at least one step is required.
struct PulseSequence {
    std::vector<SequenceStep> steps;
    void validate() const;
};

/// exp(-i angle n.S) applied to each targeted spin (hard-pulse limit).
PureState apply_pulse(const PureState& state, const Rotation& rot);

PureState run_sequence(const PureState& input, const PulseSequence& seq);

// ---------------------------------------------------------------------------
// Closed- and open-system evolution

/// U rho U^dag with U = exp(-i h t); trace and purity preserved.
DensityMatrix evolve_density(const Matrix& h, const DensityMatrix& rho0, double t);

struct StBlocks {
    Matrix triplet;        // 3x3 block over {T+, T0, T-}
    Complex singlet;       // 1x1 block
    double offblock_norm;  // max |triplet-singlet element|
};

/// Splits a two-spin density matrix in the {T+, T0, T-, S} basis.
StBlocks st_blocks(const DensityMatrix& rho);

struct DephasingRates {
    double gamma1 = 0.0;  // 1/s, spin 1
    double gamma2 = 0.0;  // 1/s, spin 2
};

/// Integrates d rho/dt = -i[h, rho] + sum_k gamma_k (S_kz rho S_kz - rho/4)
/// with fixed-step RK4.  steps is a lower bound on the step count; the
/// actual step is capped well below 1/(50 max|eig h|).
DensityMatrix lindblad_dephase(const Matrix& h, const DensityMatrix& rho0,
                               const DephasingRates& rates, double t, int steps);

// ---------------------------------------------------------------------------
// Time series

/// Populations in the Zeeman product basis, concurrence, and one tracked
/// coherence per sample.  Populations sum to 1 within 1e-9 at every sample.
struct TimeSeries {
    std::vector<double> t;
    std::vector<std::array<double, 4>> populations;  // uu, ud, du, dd
    std::vector<double> concurrence;
    std::vector<Complex> coherence;
};

void write_timeseries_csv(const TimeSeries& ts, const std::string& path);

/// Exchange-oscillation Ramsey sequence: pi pulse about x on spin 2, free
/// evolution under the secular Hamiltonian for t, inverse pi pulse.  From
/// |uu> the interferometer arms are T0 and the singlet, so the population
/// returns entirely to span{|uu>, |dd>} with
///   P_dd(t) = sin^2(omega_b t / 2),
/// one full population cycle per 2 pi / omega_b, and maximal entanglement at
/// the quarter cycle.  The tracked coherence is <uu|rho|dd>.
TimeSeries ramsey_entangle(const SpinSystemParams& p, const std::vector<double>& times);

/// Populations of rho(t) evolved from rho0 under h, optionally with pure
/// dephasing.  The tracked coherence is <ud|rho|du>.
TimeSeries evolve_populations(const Matrix& h, const DensityMatrix& rho0,
                              const std::vector<double>& times,
                              const DephasingRates& rates = {});

/// <T0| exp(-i H_ff t) |T0> for the flip-flop part alone; equals
/// exp(-i omega_b t / 2) with this module's conventions.
Complex evolve_t0_phase(const SpinSystemParams& p, double t);

// ---------------------------------------------------------------------------
// Spectra and readout

struct Transition {
    double frequency;  // rad/s, non-negative gap
    std::string level_a;
    std::string level_b;
};

/// All pairwise gaps of the zero-field triplet levels {Tz, Tx, Ty},
/// ascending.
std::vector<Transition> transition_spectrum(const ZfsParams& z);

/// All pairwise gaps of the diagonal triplet block over {T+, T0, T-},
/// ascending.
std::vector<Transition> transition_spectrum(const SpinSystemParams& p);

/// Born-rule probabilities in the Zeeman product basis (uu, ud, du, dd).
std::array<double, 4> measure_zeeman(const PureState& state);

}  // namespace spinpair
