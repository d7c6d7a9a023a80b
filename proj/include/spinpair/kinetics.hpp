#pragma once

// Scalar estimators for the proton-transfer process: quasiclassical
// tunneling time, barrier-limited decoherence time and the thermal tautomer
// occupation used for the canonical/tautomer superposition weights.

namespace spinpair {

struct KineticsParams {
    double nu_tilde_cm = 3225.0;   // N-H stretch wavenumber, cm^-1
    double transfer_angstrom = 2.86;  // transfer distance R
    double radius_angstrom = 1.03;    // localization radius r
    double barrier_ev = 0.7;          // forward barrier
    double barrier_reverse_ev = 0.6;  // reverse barrier (pass-through input)
    double gap_ev = 0.2239;           // canonical/tautomer asymmetry
};

/// tau = 1/(c nu_tilde) * exp(R / r), seconds.
double pt_time(double nu_tilde_cm, double transfer_angstrom, double radius_angstrom);

/// hbar / deltaE, seconds, with deltaE in eV.
double decoherence_time(double delta_e_ev);

/// Tautomer occupation 1/(1 + exp(gap / kB T)).
double occupation(double temperature_k, double gap_ev);

/// Inverse of occupation at fixed temperature: gap = kB T ln((1-p)/p),
/// valid for 0 < p < 1/2.
double calibrate_gap(double p_target, double temperature_k);

}  // namespace spinpair
