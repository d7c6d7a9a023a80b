#include "spinpair/kinetics.hpp"

#include <cmath>

#include "spinpair/constants.hpp"
#include "spinpair/errors.hpp"

namespace spinpair {

double pt_time(double nu_tilde_cm, double transfer_angstrom, double radius_angstrom) {
    if (nu_tilde_cm <= 0.0 || transfer_angstrom <= 0.0 || radius_angstrom <= 0.0)
        throw PhysicsError("pt_time: all inputs must be positive");
    const double nu = si::speed_of_light_cm * nu_tilde_cm;  // Hz
    return std::exp(transfer_angstrom / radius_angstrom) / nu;
}

double decoherence_time(double delta_e_ev) {
    if (delta_e_ev <= 0.0) throw PhysicsError("decoherence_time: barrier must be positive");
    return si::hbar / (delta_e_ev * si::electron_volt);
}

double occupation(double temperature_k, double gap_ev) {
    if (temperature_k <= 0.0) throw PhysicsError("occupation: temperature must be positive");
    const double kt = si::boltzmann * temperature_k;
    return 1.0 / (1.0 + std::exp(gap_ev * si::electron_volt / kt));
}

double calibrate_gap(double p_target, double temperature_k) {
    if (temperature_k <= 0.0)
        throw PhysicsError("calibrate_gap: temperature must be positive");
    if (p_target <= 0.0 || p_target >= 0.5)
        throw PhysicsError("calibrate_gap: target probability must lie in (0, 1/2)");
    const double kt_ev = si::boltzmann * temperature_k / si::electron_volt;
    return kt_ev * std::log((1.0 - p_target) / p_target);
}

}  // namespace spinpair
