#include "spinpair/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "spinpair/spin_ops.hpp"
#include "spinpair/states.hpp"

namespace spinpair {

void PulseSequence::validate() const {
    if (steps.empty()) throw PhysicsError("PulseSequence: at least one step required");
    for (const auto& step : steps) {
        if (const auto* ev = std::get_if<FreeEvolution>(&step)) {
            if (ev->duration < 0.0)
                throw PhysicsError("PulseSequence: negative free-evolution duration");
        }
    }
}

PureState apply_pulse(const PureState& state, const Rotation& rot) {
    if (state.dim() != 4) throw PhysicsError("apply_pulse: two-spin state required");
    // exp(-i theta S) on one spin-1/2: cos(theta/2) I - 2 i sin(theta/2) S.
    Matrix axis_op = spin_half(rot.axis);
    Matrix single = std::cos(rot.angle / 2.0) * Matrix::Identity(2, 2) -
                    2.0 * kI * std::sin(rot.angle / 2.0) * axis_op;
    Matrix u1 = rot.on_spin1 ? single : Matrix::Identity(2, 2);
    Matrix u2 = rot.on_spin2 ? single : Matrix::Identity(2, 2);
    return PureState(kron(u1, u2) * state.amplitudes());
}

PureState run_sequence(const PureState& input, const PulseSequence& seq) {
    seq.validate();
    PureState psi = input;
    for (const auto& step : seq.steps) {
        if (const auto* rot = std::get_if<Rotation>(&step)) {
            psi = apply_pulse(psi, *rot);
        } else {
            const auto& ev = std::get<FreeEvolution>(step);
            Matrix u = propagator(secular_h(ev.params).total(), ev.duration);
            psi = PureState(u * psi.amplitudes());
        }
    }
    return psi;
}

DensityMatrix evolve_density(const Matrix& h, const DensityMatrix& rho0, double t) {
    Matrix u = propagator(h, t);
    Matrix r = u * rho0.matrix() * u.adjoint();
    return DensityMatrix((r + r.adjoint()) / 2.0);
}

StBlocks st_blocks(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw PhysicsError("st_blocks: two-spin state required");
    Matrix basis(4, 4);  // columns T+, T0, T-, S
    basis.setZero();
    const double r = 1.0 / std::sqrt(2.0);
    basis(0, 0) = 1.0;
    basis(1, 1) = r;
    basis(2, 1) = r;
    basis(3, 2) = 1.0;
    basis(1, 3) = r;
    basis(2, 3) = -r;
    Matrix rr = basis.adjoint() * rho.matrix() * basis;
    double off = 0.0;
    for (int k = 0; k < 3; ++k)
        off = std::max({off, std::abs(rr(k, 3)), std::abs(rr(3, k))});
    return {rr.topLeftCorner(3, 3), rr(3, 3), off};
}

namespace {

Matrix lindblad_rhs(const Matrix& h, const Matrix& s1z, const Matrix& s2z,
                    const DephasingRates& g, const Matrix& rho) {
    Matrix out = -kI * (h * rho - rho * h);
    if (g.gamma1 > 0.0) out += g.gamma1 * (s1z * rho * s1z - 0.25 * rho);
    if (g.gamma2 > 0.0) out += g.gamma2 * (s2z * rho * s2z - 0.25 * rho);
    return out;
}

}  // namespace

DensityMatrix lindblad_dephase(const Matrix& h, const DensityMatrix& rho0,
                               const DephasingRates& rates, double t, int steps) {
    if (rates.gamma1 < 0.0 || rates.gamma2 < 0.0)
        throw PhysicsError("lindblad_dephase: negative dephasing rate");
    if (steps < 1) throw PhysicsError("lindblad_dephase: steps must be >= 1");
    require_hermitian(h, "lindblad_dephase");
    if (h.rows() != rho0.dim())
        throw PhysicsError("lindblad_dephase: dimension mismatch");
    if (t == 0.0) return rho0;

    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    const double scale = std::max({es.eigenvalues().cwiseAbs().maxCoeff(),
                                   rates.gamma1, rates.gamma2, 1e-30});
    // Step kept well inside the stability/accuracy region.
    const int needed = static_cast<int>(std::ceil(std::abs(t) * scale * 100.0));
    const int n = std::max(steps, std::max(needed, 1));
    const double dt = t / n;

    Matrix s1z = s1('z'), s2z = s2('z');
    Matrix rho = rho0.matrix();
    for (int k = 0; k < n; ++k) {
        Matrix k1 = lindblad_rhs(h, s1z, s2z, rates, rho);
        Matrix k2 = lindblad_rhs(h, s1z, s2z, rates, rho + 0.5 * dt * k1);
        Matrix k3 = lindblad_rhs(h, s1z, s2z, rates, rho + 0.5 * dt * k2);
        Matrix k4 = lindblad_rhs(h, s1z, s2z, rates, rho + dt * k3);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    rho = (rho + rho.adjoint()) / 2.0;
    return DensityMatrix(rho);
}

void write_timeseries_csv(const TimeSeries& ts, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("write_timeseries_csv: cannot open " + path);
    out << "t,p_uu,p_ud,p_du,p_dd,concurrence,coh_re,coh_im\n";
    char buf[320];
    for (size_t k = 0; k < ts.t.size(); ++k) {
        const auto& p = ts.populations[k];
        std::snprintf(buf, sizeof(buf),
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", ts.t[k],
                      p[0], p[1], p[2], p[3], ts.concurrence[k],
                      ts.coherence[k].real(), ts.coherence[k].imag());
        out << buf;
    }
    if (!out) throw IoError("write_timeseries_csv: write failed for " + path);
}

TimeSeries ramsey_entangle(const SpinSystemParams& p, const std::vector<double>& times) {
    TimeSeries ts;
    ts.t = times;
    ts.populations.reserve(times.size());
    ts.concurrence.reserve(times.size());
    ts.coherence.reserve(times.size());

    Vector uu = Vector::Zero(4);
    uu(0) = 1.0;
    const PureState start{uu};
    const Rotation flip{'x', std::numbers::pi, false, true};
    const Rotation unflip{'x', -std::numbers::pi, false, true};
    const Matrix h = secular_h(p).total();

    for (double t : times) {
        PureState psi = apply_pulse(start, flip);
        psi = PureState(propagator(h, t) * psi.amplitudes());
        psi = apply_pulse(psi, unflip);
        const Vector& a = psi.amplitudes();
        ts.populations.push_back({std::norm(a(0)), std::norm(a(1)), std::norm(a(2)),
                                  std::norm(a(3))});
        ts.concurrence.push_back(concurrence(psi));
        ts.coherence.push_back(a(0) * std::conj(a(3)));
    }
    return ts;
}

TimeSeries evolve_populations(const Matrix& h, const DensityMatrix& rho0,
                              const std::vector<double>& times,
                              const DephasingRates& rates) {
    const bool open_system = rates.gamma1 > 0.0 || rates.gamma2 > 0.0;
    TimeSeries ts;
    ts.t = times;
    for (double t : times) {
        DensityMatrix rho = open_system ? lindblad_dephase(h, rho0, rates, t, 1)
                                        : evolve_density(h, rho0, t);
        const Matrix& r = rho.matrix();
        ts.populations.push_back({r(0, 0).real(), r(1, 1).real(), r(2, 2).real(),
                                  r(3, 3).real()});
        ts.concurrence.push_back(concurrence(rho));
        ts.coherence.push_back(r(1, 2));
    }
    return ts;
}

Complex evolve_t0_phase(const SpinSystemParams& p, double t) {
    Matrix h_ff = secular_h(p).flip_flop;
    Vector t0 = zeeman_triplets()[1].state.amplitudes();
    return t0.dot(propagator(h_ff, t) * t0);
}

namespace {

std::vector<Transition> pairwise_gaps(const std::array<double, 3>& levels,
                                      const std::array<std::string, 3>& names) {
    std::vector<Transition> out;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            out.push_back({std::abs(levels[i] - levels[j]), names[i], names[j]});
    std::sort(out.begin(), out.end(),
              [](const Transition& a, const Transition& b) {
                  return a.frequency < b.frequency;
              });
    return out;
}

}  // namespace

std::vector<Transition> transition_spectrum(const ZfsParams& z) {
    const double tz = -2.0 * z.d_zfs / 3.0;
    const double tx = z.d_zfs / 3.0 - z.e_zfs;
    const double ty = z.d_zfs / 3.0 + z.e_zfs;
    return pairwise_gaps({tz, tx, ty}, {"Tz", "Tx", "Ty"});
}

std::vector<Transition> transition_spectrum(const SpinSystemParams& p) {
    Matrix h = triplet_block(p);
    return pairwise_gaps({h(0, 0).real(), h(1, 1).real(), h(2, 2).real()},
                         {"T+", "T0", "T-"});
}

std::array<double, 4> measure_zeeman(const PureState& state) {
    if (state.dim() != 4) throw PhysicsError("measure_zeeman: two-spin state required");
    const Vector& a = state.amplitudes();
    return {std::norm(a(0)), std::norm(a(1)), std::norm(a(2)), std::norm(a(3))};
}

}  // namespace spinpair
