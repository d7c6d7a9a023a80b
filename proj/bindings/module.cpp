// Python bindings for the main operations: states, Hamiltonians, dynamics,
// gate circuits, fermion-qubit encodings, the variational solver and the
// kinetics estimators.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinpair/dynamics.hpp"
#include "spinpair/fermion.hpp"
#include "spinpair/gates.hpp"
#include "spinpair/kinetics.hpp"
#include "spinpair/spatial.hpp"
#include "spinpair/states.hpp"
#include "spinpair/vqe.hpp"

namespace py = pybind11;
using namespace spinpair;

namespace {

PureState to_state(const Vector& amplitudes) { return PureState(amplitudes); }

DensityMatrix to_density(const Matrix& rho) { return DensityMatrix(rho); }

BellVariant bell_variant_from(const std::string& name) {
    if (name == "Tx") return BellVariant::Tx;
    if (name == "Ty") return BellVariant::Ty;
    if (name == "Tz") return BellVariant::Tz;
    if (name == "Tz_star") return BellVariant::TzStar;
    throw ConfigError("unknown Bell variant '" + name + "'");
}

py::dict timeseries_to_dict(const TimeSeries& ts) {
    const size_t n = ts.t.size();
    Eigen::VectorXd t(n), p_uu(n), p_ud(n), p_du(n), p_dd(n), conc(n);
    Vector coh(n);
    for (size_t k = 0; k < n; ++k) {
        t(k) = ts.t[k];
        p_uu(k) = ts.populations[k][0];
        p_ud(k) = ts.populations[k][1];
        p_du(k) = ts.populations[k][2];
        p_dd(k) = ts.populations[k][3];
        conc(k) = ts.concurrence[k];
        coh(k) = ts.coherence[k];
    }
    py::dict out;
    out["t"] = t;
    out["p_uu"] = p_uu;
    out["p_ud"] = p_ud;
    out["p_du"] = p_du;
    out["p_dd"] = p_dd;
    out["concurrence"] = conc;
    out["coherence"] = coh;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two-proton spin pair simulator: states, Hamiltonians, dynamics, "
              "gates, fermion-qubit encodings, kinetics";

    py::register_exception<PhysicsError>(m, "PhysicsError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigurationError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_IOError);

    // ------------------------------------------------------------------ math
    m.def("kron",
          [](const Matrix& a, const Matrix& b) { return kron(a, b); },
          "Tensor product of two operators");
    m.def("propagator", &propagator, py::arg("h"), py::arg("t"),
          "exp(-i h t) for a Hermitian operator");
    m.def("eigh",
          [](const Matrix& h) {
              EighResult r = eigh(h);
              return py::make_tuple(r.values, r.vectors);
          },
          "Eigenvalues (ascending) and orthonormal eigenvectors");
    m.def("concurrence",
          [](const Vector& amplitudes) { return concurrence(to_state(amplitudes)); },
          "Wootters concurrence of a two-qubit pure state");
    m.def("concurrence_density",
          [](const Matrix& rho) { return concurrence(to_density(rho)); },
          "Wootters concurrence of a two-qubit density matrix");
    m.def("fidelity_up_to_phase",
          [](const Vector& a, const Vector& b) {
              return fidelity_up_to_phase(to_state(a), to_state(b));
          });
    m.def("partial_trace",
          [](const Matrix& rho, int dim_a, int dim_b, const std::string& keep) {
              KeepFactor f = keep == "A" ? KeepFactor::A : KeepFactor::B;
              return partial_trace(to_density(rho), dim_a, dim_b, f).matrix();
          },
          py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"), py::arg("keep") = "A");
    m.def("purity", [](const Matrix& rho) { return purity(to_density(rho)); });

    // ---------------------------------------------------------------- states
    m.def("zeeman_triplets", [] {
        auto t = zeeman_triplets();
        return py::make_tuple(t[0].state.amplitudes(), t[1].state.amplitudes(),
                              t[2].state.amplitudes());
    });
    m.def("singlet", [] { return singlet().state.amplitudes(); });
    m.def("zfs_triplets", [] {
        auto t = zfs_triplets();
        return py::make_tuple(t[0].state.amplitudes(), t[1].state.amplitudes(),
                              t[2].state.amplitudes());
    });
    m.def("general_triplet",
          [](const std::string& variant) {
              return general_triplet(variant == "tautomeric"
                                         ? TripletVariant::Tautomeric
                                         : TripletVariant::Canonical)
                  .state.amplitudes();
          },
          py::arg("variant") = "canonical");
    m.def("fission_singlet", [] { return fission_singlet().state.amplitudes(); });
    m.def("triplet_pair_total_spin_squared", &triplet_pair_total_spin_squared);
    m.def("wcqs_weights",
          [](double p_tautomer) {
              auto t = zfs_triplets();
              WcqsState w = wcqs_from_occupation(p_tautomer, t[2], t[2]);
              return py::make_tuple(w.a, w.b);
          },
          "Canonical/tautomer weights (a, b) for a tautomer occupation");

    py::class_<SpatialModel>(m, "SpatialModel")
        .def(py::init<>())
        .def_readwrite("separation_angstrom", &SpatialModel::separation_angstrom)
        .def_readwrite("sigma_angstrom", &SpatialModel::sigma_angstrom)
        .def_readwrite("grid_min", &SpatialModel::grid_min)
        .def_readwrite("grid_max", &SpatialModel::grid_max)
        .def_readwrite("grid_points", &SpatialModel::grid_points);
    m.def("spatial_two_proton",
          [](const SpatialModel& model, const std::string& parity) {
              SpatialModel mm = model;
              mm.parity = parity == "symmetric" ? SpatialParity::Symmetric
                                                : SpatialParity::Antisymmetric;
              SpatialWavefunction wf = spatial_two_proton(mm);
              py::dict out;
              out["x"] = wf.x;
              out["psi"] = wf.psi;
              return out;
          },
          py::arg("model"), py::arg("parity") = "antisymmetric");

    // ------------------------------------------------------------ Hamiltonians
    py::class_<SpinSystemParams>(m, "SpinSystemParams")
        .def(py::init([](double omega0, double j_hz, double d) {
                 return SpinSystemParams{omega0, j_hz, d};
             }),
             py::arg("omega0") = 0.0, py::arg("j_hz") = 0.0, py::arg("d") = 0.0)
        .def_readwrite("omega0", &SpinSystemParams::omega0)
        .def_readwrite("j_hz", &SpinSystemParams::j_hz)
        .def_readwrite("d", &SpinSystemParams::d)
        .def_property_readonly("omega_a", &SpinSystemParams::omega_a)
        .def_property_readonly("omega_b", &SpinSystemParams::omega_b);

    py::class_<PairGeometry>(m, "PairGeometry")
        .def(py::init([](double r, double theta, double gamma) {
                 return PairGeometry{r, theta, gamma};
             }),
             py::arg("r_angstrom") = 2.86, py::arg("theta") = 0.0,
             py::arg("gamma") = 2.6752218744e8)
        .def_readwrite("r_angstrom", &PairGeometry::r_angstrom)
        .def_readwrite("theta", &PairGeometry::theta)
        .def_readwrite("gamma", &PairGeometry::gamma);

    m.def("dipolar_b_constant", &dipolar_b_constant);
    m.def("dipolar_pair_h", &dipolar_pair_h);
    m.def("secular_dipolar_d", &secular_dipolar_d);
    m.def("zfs_h",
          [](double d, double e) { return zfs_h({d, e}); }, py::arg("d"), py::arg("e"));
    m.def("j_h", &j_h);
    m.def("zeeman_h", &zeeman_h);
    m.def("secular_h",
          [](const SpinSystemParams& p) {
              SecularParts parts = secular_h(p);
              return py::make_tuple(parts.diagonal, parts.flip_flop);
          },
          "Diagonal and flip-flop parts of the secular Hamiltonian");
    m.def("secular_h_total",
          [](const SpinSystemParams& p) { return secular_h(p).total(); });
    m.def("secular_h_expanded_total",
          [](const SpinSystemParams& p) { return secular_h_expanded(p).total(); });
    m.def("triplet_block", &triplet_block);

    // -------------------------------------------------------------- dynamics
    m.def("evolve_density",
          [](const Matrix& h, const Matrix& rho0, double t) {
              return evolve_density(h, to_density(rho0), t).matrix();
          });
    m.def("st_blocks",
          [](const Matrix& rho) {
              StBlocks b = st_blocks(to_density(rho));
              return py::make_tuple(b.triplet, b.singlet, b.offblock_norm);
          },
          "Triplet block, singlet element and off-block norm");
    m.def("lindblad_dephase",
          [](const Matrix& h, const Matrix& rho0, double gamma1, double gamma2,
             double t, int steps) {
              return lindblad_dephase(h, to_density(rho0), {gamma1, gamma2}, t, steps)
                  .matrix();
          },
          py::arg("h"), py::arg("rho0"), py::arg("gamma1"), py::arg("gamma2"),
          py::arg("t"), py::arg("steps") = 1);
    m.def("apply_pulse",
          [](const Vector& amplitudes, const std::string& axis, double angle,
             bool on_spin1, bool on_spin2) {
              Rotation rot{axis.at(0), angle, on_spin1, on_spin2};
              return apply_pulse(to_state(amplitudes), rot).amplitudes();
          },
          py::arg("state"), py::arg("axis"), py::arg("angle"),
          py::arg("on_spin1") = true, py::arg("on_spin2") = true);
    m.def("ramsey_entangle",
          [](const SpinSystemParams& p, const std::vector<double>& times) {
              return timeseries_to_dict(ramsey_entangle(p, times));
          });
    m.def("evolve_populations",
          [](const Matrix& h, const Matrix& rho0, const std::vector<double>& times,
             double gamma1, double gamma2) {
              return timeseries_to_dict(
                  evolve_populations(h, to_density(rho0), times, {gamma1, gamma2}));
          },
          py::arg("h"), py::arg("rho0"), py::arg("times"), py::arg("gamma1") = 0.0,
          py::arg("gamma2") = 0.0);
    m.def("evolve_t0_phase", &evolve_t0_phase);
    m.def("transition_spectrum_zfs",
          [](double d, double e) {
              std::vector<py::tuple> out;
              for (const Transition& t : transition_spectrum(ZfsParams{d, e}))
                  out.push_back(py::make_tuple(t.frequency, t.level_a, t.level_b));
              return out;
          });
    m.def("transition_spectrum_secular",
          [](const SpinSystemParams& p) {
              std::vector<py::tuple> out;
              for (const Transition& t : transition_spectrum(p))
                  out.push_back(py::make_tuple(t.frequency, t.level_a, t.level_b));
              return out;
          });
    m.def("measure_zeeman",
          [](const Vector& amplitudes) { return measure_zeeman(to_state(amplitudes)); });

    // ----------------------------------------------------------------- gates
    m.def("bell_prep",
          [](const std::string& variant) {
              BellVariant v = bell_variant_from(variant);
              Circuit c = bell_prep(v);
              py::dict out;
              out["circuit"] = circuit_to_text(c);
              out["input"] = bell_prep_input(v).amplitudes();
              out["state"] = apply_circuit(c, bell_prep_input(v)).amplitudes();
              out["target"] = bell_prep_target(v).amplitudes();
              return out;
          });
    m.def("apply_circuit_text",
          [](const std::string& text, int n_qubits, const Vector& amplitudes) {
              return apply_circuit(circuit_from_text(text, n_qubits),
                                   to_state(amplitudes))
                  .amplitudes();
          },
          py::arg("text"), py::arg("n_qubits"), py::arg("state"));
    m.def("tautomer_flip",
          [](const Vector& amplitudes) {
              return tautomer_flip(to_state(amplitudes)).amplitudes();
          });

    // --------------------------------------------------------------- fermion
    py::class_<FermionIntegrals>(m, "FermionIntegrals")
        .def(py::init([](int m_orbitals, const Eigen::MatrixXd& h,
                         const std::vector<std::tuple<int, int, int, int, double>>& v) {
                 FermionIntegrals ints;
                 ints.m_orbitals = m_orbitals;
                 ints.h = h;
                 for (const auto& [p, q, r, s, val] : v)
                     ints.v.push_back({p, q, r, s, val});
                 ints.validate();
                 return ints;
             }),
             py::arg("m_orbitals"), py::arg("h"), py::arg("v"))
        .def_readonly("m_orbitals", &FermionIntegrals::m_orbitals)
        .def_readonly("h", &FermionIntegrals::h);
    m.def("load_integrals", &load_integrals);
    m.def("save_integrals", &save_integrals);
    m.def("build_fermion_h",
          [](const FermionIntegrals& ints) { return build_fermion_h(ints).matrix; });
    m.def("jordan_wigner",
          [](const FermionIntegrals& ints) {
              std::vector<py::tuple> out;
              for (const PauliTerm& t : jordan_wigner(ints).terms)
                  out.push_back(py::make_tuple(t.coefficient, t.word));
              return out;
          });
    m.def("bravyi_kitaev",
          [](const FermionIntegrals& ints) {
              std::vector<py::tuple> out;
              for (const PauliTerm& t : bravyi_kitaev(ints).terms)
                  out.push_back(py::make_tuple(t.coefficient, t.word));
              return out;
          });
    m.def("pauli_word_matrix", &pauli_word_matrix);
    m.def("taper_two_qubit",
          [](const FermionIntegrals& ints) { return taper_two_qubit(ints); });
    m.def("exact_ground",
          [](const FermionIntegrals& ints, int n_particles, double sz) {
              GroundState g = exact_ground(build_fermion_h(ints), n_particles, sz);
              return py::make_tuple(g.energy, g.state);
          },
          py::arg("integrals"), py::arg("n_particles"), py::arg("sz"));
    m.def("six_term_matrix", &six_term_matrix);
    m.def("vqe",
          [](const std::array<double, 6>& g) {
              VqeResult r = vqe(g);
              py::dict out;
              out["energy"] = r.energy;
              out["theta"] = r.theta;
              out["iterations"] = r.iterations;
              out["ground_in_manifold"] = r.ground_in_manifold;
              return out;
          },
          "Minimize the six-term two-qubit Hamiltonian over the one-parameter "
          "exchange ansatz");

    // -------------------------------------------------------------- kinetics
    m.def("pt_time", &pt_time, py::arg("nu_tilde_cm"), py::arg("transfer_angstrom"),
          py::arg("radius_angstrom"));
    m.def("decoherence_time", &decoherence_time, py::arg("delta_e_ev"));
    m.def("occupation", &occupation, py::arg("temperature_k"), py::arg("gap_ev"));
    m.def("calibrate_gap", &calibrate_gap, py::arg("p_target"), py::arg("temperature_k"));

    m.attr("__version__") = "0.1.0";
}
