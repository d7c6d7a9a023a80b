// Command line front end: subcommand dispatch, JSON configuration with
// dotted-path overrides, deterministic CSV/JSON outputs.
//
// Exit codes: 0 success, 2 configuration error, 3 physics/validation error,
// 4 I/O error.  Failures print one line "E_CONFIG|E_PHYS|E_IO: message" to
// stderr.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "spinpair/dynamics.hpp"
#include "spinpair/fermion.hpp"
#include "spinpair/gates.hpp"
#include "spinpair/kinetics.hpp"
#include "spinpair/spatial.hpp"
#include "spinpair/states.hpp"
#include "spinpair/vqe.hpp"

namespace sp = spinpair;
using nlohmann::json;

namespace {

struct Cli {
    std::string subcommand;
    std::string config_path;
    std::vector<std::string> overrides;
    std::string output_path;  // overrides config output.path
    std::string bell_variant; // bell only
    long seed = -1;           // overrides config seed
};

// ---------------------------------------------------------------------------
// Config handling

json load_config(const Cli& cli) {
    json cfg = json::object();
    if (!cli.config_path.empty()) {
        std::ifstream in(cli.config_path);
        if (!in) throw sp::IoError("cannot open config file " + cli.config_path);
        try {
            in >> cfg;
        } catch (const json::parse_error& e) {
            throw sp::ConfigError(std::string("config parse: ") + e.what());
        }
        if (!cfg.is_object()) throw sp::ConfigError("config root must be an object");
    }
    for (const std::string& ov : cli.overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos)
            throw sp::ConfigError("--set expects key.path=value, got " + ov);
        const std::string path = ov.substr(0, eq);
        const std::string raw = ov.substr(eq + 1);
        json value;
        try {
            value = json::parse(raw);
        } catch (const json::parse_error&) {
            value = raw;  // bare strings allowed
        }
        json* node = &cfg;
        size_t start = 0;
        while (true) {
            const auto dot = path.find('.', start);
            const std::string key = path.substr(start, dot - start);
            if (key.empty()) throw sp::ConfigError("--set has an empty key in " + path);
            if (dot == std::string::npos) {
                (*node)[key] = value;
                break;
            }
            node = &(*node)[key];
            if (!node->is_object() && !node->is_null())
                throw sp::ConfigError("--set path crosses a non-object at " + key);
            start = dot + 1;
        }
    }
    if (cfg.contains("subcommand")) {
        const std::string sub = cfg.at("subcommand").get<std::string>();
        if (!cli.subcommand.empty() && sub != cli.subcommand)
            throw sp::ConfigError("config subcommand '" + sub +
                                  "' disagrees with command line '" + cli.subcommand +
                                  "'");
    }
    return cfg;
}

// Strict key check; catches unit-less frequency/energy inputs by name.
void check_keys(const json& section, const std::string& name,
                const std::vector<std::string>& known) {
    if (section.is_null()) return;
    if (!section.is_object())
        throw sp::ConfigError("section '" + name + "' must be an object");
    for (const auto& [key, _] : section.items()) {
        if (std::find(known.begin(), known.end(), key) != known.end()) continue;
        std::string msg = "unknown key '" + key + "' in section '" + name + "'";
        for (const std::string& k : known) {
            if (k.rfind(key + "_", 0) == 0) {
                msg += " (inputs must carry units; did you mean '" + k + "'?)";
                break;
            }
        }
        throw sp::ConfigError(msg);
    }
}

double get_num(const json& section, const std::string& key, double fallback) {
    if (!section.is_object() || !section.contains(key)) return fallback;
    if (!section.at(key).is_number())
        throw sp::ConfigError("key '" + key + "' must be a number");
    return section.at(key).get<double>();
}

int get_int(const json& section, const std::string& key, int fallback) {
    if (!section.is_object() || !section.contains(key)) return fallback;
    return section.at(key).get<int>();
}

std::string get_str(const json& section, const std::string& key,
                    const std::string& fallback) {
    if (!section.is_object() || !section.contains(key)) return fallback;
    return section.at(key).get<std::string>();
}

sp::SpinSystemParams spin_params(const json& cfg) {
    const json sec = cfg.value("spin_system", json::object());
    check_keys(sec, "spin_system", {"omega0_rad_s", "j_hz", "d_rad_s"});
    sp::SpinSystemParams p;
    p.omega0 = get_num(sec, "omega0_rad_s", 0.0);
    p.j_hz = get_num(sec, "j_hz", 0.0);
    p.d = get_num(sec, "d_rad_s", 0.0);
    return p;
}

std::vector<double> linspace(double t_max, int points) {
    if (points < 2) throw sp::ConfigError("points must be >= 2");
    if (t_max <= 0.0) throw sp::ConfigError("t_max_s must be positive");
    std::vector<double> t(points);
    for (int k = 0; k < points; ++k) t[k] = t_max * k / (points - 1);
    return t;
}

// Output sink: file when a path is configured, stdout otherwise.
struct Output {
    std::string path;    // empty for stdout
    std::string format;  // "csv" or "json"
};

Output resolve_output(const json& cfg, const Cli& cli, const std::string& native) {
    const json sec = cfg.value("output", json::object());
    check_keys(sec, "output", {"path", "format"});
    Output out;
    out.path = !cli.output_path.empty() ? cli.output_path : get_str(sec, "path", "");
    out.format = get_str(sec, "format", native);
    if (out.format != native)
        throw sp::ConfigError("subcommand emits " + native + ", not " + out.format);
    return out;
}

void emit_json(const json& report, const Output& out) {
    const std::string text = report.dump(2) + "\n";
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out.path);
    if (!f) throw sp::IoError("cannot open output file " + out.path);
    f << text;
    if (!f) throw sp::IoError("write failed for " + out.path);
}

// ---------------------------------------------------------------------------
// Subcommands

int run_ramsey(const json& cfg, const Cli& cli) {
    const json sec = cfg.value("ramsey", json::object());
    check_keys(sec, "ramsey", {"t_max_s", "points"});
    const auto p = spin_params(cfg);
    const auto times = linspace(get_num(sec, "t_max_s", 10.0), get_int(sec, "points", 200));
    sp::TimeSeries ts = sp::ramsey_entangle(p, times);
    Output out = resolve_output(cfg, cli, "csv");
    if (out.path.empty()) throw sp::ConfigError("ramsey requires output.path");
    sp::write_timeseries_csv(ts, out.path);
    return 0;
}

sp::PureState named_state(const std::string& name) {
    using sp::Vector;
    auto basis = [](int k) {
        Vector v = Vector::Zero(4);
        v(k) = 1.0;
        return sp::PureState(v);
    };
    if (name == "uu") return basis(0);
    if (name == "ud") return basis(1);
    if (name == "du") return basis(2);
    if (name == "dd") return basis(3);
    if (name == "singlet") return sp::singlet().state;
    if (name == "tx") return sp::zfs_triplets()[0].state;
    if (name == "ty") return sp::zfs_triplets()[1].state;
    if (name == "tz" || name == "t0") return sp::zfs_triplets()[2].state;
    if (name == "general_triplet")
        return sp::general_triplet(sp::TripletVariant::Canonical).state;
    throw sp::ConfigError("unknown initial state '" + name + "'");
}

int run_evolve(const json& cfg, const Cli& cli) {
    const json sec = cfg.value("evolve", json::object());
    check_keys(sec, "evolve",
               {"initial", "t_max_s", "points", "gamma1_per_s", "gamma2_per_s"});
    const auto p = spin_params(cfg);
    const auto times = linspace(get_num(sec, "t_max_s", 10.0), get_int(sec, "points", 200));
    sp::PureState psi = named_state(get_str(sec, "initial", "ud"));
    sp::DephasingRates rates{get_num(sec, "gamma1_per_s", 0.0),
                             get_num(sec, "gamma2_per_s", 0.0)};
    if (rates.gamma1 < 0.0 || rates.gamma2 < 0.0)
        throw sp::PhysicsError("dephasing rates must be non-negative");
    sp::TimeSeries ts = sp::evolve_populations(
        sp::secular_h(p).total(), sp::DensityMatrix::from_pure(psi), times, rates);
    Output out = resolve_output(cfg, cli, "csv");
    if (out.path.empty()) throw sp::ConfigError("evolve requires output.path");
    sp::write_timeseries_csv(ts, out.path);
    return 0;
}

int run_bell(const json& cfg, const Cli& cli) {
    const json sec = cfg.value("bell", json::object());
    check_keys(sec, "bell", {"variant"});
    std::string variant = !cli.bell_variant.empty() ? cli.bell_variant
                                                    : get_str(sec, "variant", "Tz");
    sp::BellVariant v;
    if (variant == "Tx") v = sp::BellVariant::Tx;
    else if (variant == "Ty") v = sp::BellVariant::Ty;
    else if (variant == "Tz") v = sp::BellVariant::Tz;
    else if (variant == "Tz_star") v = sp::BellVariant::TzStar;
    else throw sp::ConfigError("unknown bell variant '" + variant + "'");

    sp::Circuit circuit = sp::bell_prep(v);
    sp::PureState input = sp::bell_prep_input(v);
    sp::PureState produced = sp::apply_circuit(circuit, input);
    sp::PureState target = sp::bell_prep_target(v);
    const double fidelity = sp::fidelity_up_to_phase(produced, target);

    json report;
    report["variant"] = variant;
    report["input"] = v == sp::BellVariant::TzStar ? "11" : "00";
    json lines = json::array();
    std::istringstream text(sp::circuit_to_text(circuit));
    for (std::string line; std::getline(text, line);) lines.push_back(line);
    report["circuit"] = lines;
    report["fidelity"] = fidelity;
    report["concurrence"] = sp::concurrence(produced);
    json re = json::array(), im = json::array();
    for (int k = 0; k < 4; ++k) {
        re.push_back(produced.amplitude(k).real());
        im.push_back(produced.amplitude(k).imag());
    }
    report["state_re"] = re;
    report["state_im"] = im;
    emit_json(report, resolve_output(cfg, cli, "json"));
    return 0;
}

int run_spectrum(const json& cfg, const Cli& cli) {
    const json sec = cfg.value("spectrum", json::object());
    check_keys(sec, "spectrum", {"source"});
    const std::string source = get_str(sec, "source", "zfs");
    std::vector<sp::Transition> transitions;
    json report;
    report["source"] = source;
    if (source == "zfs") {
        const json z = cfg.value("zfs", json::object());
        check_keys(z, "zfs", {"d_rad_s", "e_rad_s"});
        sp::ZfsParams zp{get_num(z, "d_rad_s", 0.0), get_num(z, "e_rad_s", 0.0)};
        transitions = sp::transition_spectrum(zp);
    } else if (source == "secular") {
        transitions = sp::transition_spectrum(spin_params(cfg));
    } else {
        throw sp::ConfigError("spectrum source must be 'zfs' or 'secular'");
    }
    json list = json::array();
    for (const auto& t : transitions)
        list.push_back({{"frequency_rad_s", t.frequency},
                        {"levels", json::array({t.level_a, t.level_b})}});
    report["transitions"] = list;
    emit_json(report, resolve_output(cfg, cli, "json"));
    return 0;
}

int run_vqe(const json& cfg, const Cli& cli) {
    const json sec = cfg.value("vqe", json::object());
    check_keys(sec, "vqe", {"integrals_path", "max_iter"});
    const std::string path = get_str(sec, "integrals_path", "");
    if (path.empty()) throw sp::ConfigError("vqe requires vqe.integrals_path");
    sp::FermionIntegrals ints = sp::load_integrals(path);
    const auto g = sp::taper_two_qubit(ints);
    sp::VqeOptions opts;
    opts.max_iter = get_int(sec, "max_iter", 200);
    sp::VqeResult res = sp::vqe(g, opts);
    sp::FermionHamiltonian fh = sp::build_fermion_h(ints);
    sp::GroundState exact = sp::exact_ground(fh, 2, 0.0);

    json report;
    report["integrals_path"] = path;
    report["g"] = json::array();
    for (double gk : g) report["g"].push_back(gk);
    report["energy_vqe"] = res.energy;
    report["theta"] = res.theta;
    report["iterations"] = res.iterations;
    report["ground_in_manifold"] = res.ground_in_manifold;
    report["energy_exact_sector"] = exact.energy;
    report["seed"] = cli.seed >= 0 ? cli.seed : static_cast<long>(cfg.value("seed", 0));
    emit_json(report, resolve_output(cfg, cli, "json"));
    return 0;
}

int run_kinetics(const json& cfg, const Cli& cli) {
    const json sec = cfg.value("kinetics", json::object());
    check_keys(sec, "kinetics",
               {"nu_tilde_cm", "R_angstrom", "r_angstrom", "deltaE_eV",
                "deltaE_star_eV", "gap_eV", "temperature_K", "p_target"});
    sp::KineticsParams p;
    p.nu_tilde_cm = get_num(sec, "nu_tilde_cm", p.nu_tilde_cm);
    p.transfer_angstrom = get_num(sec, "R_angstrom", p.transfer_angstrom);
    p.radius_angstrom = get_num(sec, "r_angstrom", p.radius_angstrom);
    p.barrier_ev = get_num(sec, "deltaE_eV", p.barrier_ev);
    p.barrier_reverse_ev = get_num(sec, "deltaE_star_eV", p.barrier_reverse_ev);
    const double temperature = get_num(sec, "temperature_K", 300.0);
    double gap = get_num(sec, "gap_eV", p.gap_ev);
    if (sec.is_object() && sec.contains("p_target"))
        gap = sp::calibrate_gap(sec.at("p_target").get<double>(), temperature);

    json report;
    report["tau_pt_s"] = sp::pt_time(p.nu_tilde_cm, p.transfer_angstrom, p.radius_angstrom);
    report["tau_s_s"] = sp::decoherence_time(p.barrier_ev);
    report["occupation"] = sp::occupation(temperature, gap);
    report["gap_eV"] = gap;
    emit_json(report, resolve_output(cfg, cli, "json"));
    return 0;
}

int run_spatial(const json& cfg, const Cli& cli) {
    const json sec = cfg.value("spatial", json::object());
    check_keys(sec, "spatial",
               {"R_angstrom", "sigma_angstrom", "grid_min_angstrom",
                "grid_max_angstrom", "points", "parity"});
    sp::SpatialModel model;
    model.separation_angstrom = get_num(sec, "R_angstrom", model.separation_angstrom);
    model.sigma_angstrom = get_num(sec, "sigma_angstrom", model.sigma_angstrom);
    model.grid_min = get_num(sec, "grid_min_angstrom", model.grid_min);
    model.grid_max = get_num(sec, "grid_max_angstrom", model.grid_max);
    model.grid_points = get_int(sec, "points", model.grid_points);
    const std::string parity = get_str(sec, "parity", "antisymmetric");
    if (parity == "symmetric") model.parity = sp::SpatialParity::Symmetric;
    else if (parity == "antisymmetric") model.parity = sp::SpatialParity::Antisymmetric;
    else throw sp::ConfigError("spatial parity must be symmetric or antisymmetric");

    sp::SpatialWavefunction wf = sp::spatial_two_proton(model);
    Output out = resolve_output(cfg, cli, "csv");
    if (out.path.empty()) throw sp::ConfigError("spatial requires output.path");
    sp::write_spatial_csv(wf, out.path);
    return 0;
}

int dispatch(const Cli& cli) {
    json cfg = load_config(cli);
    std::string sub = cli.subcommand;
    if (sub.empty()) sub = cfg.value("subcommand", "");
    if (sub.empty()) throw sp::ConfigError("no subcommand given");
    if (sub == "ramsey") return run_ramsey(cfg, cli);
    if (sub == "evolve") return run_evolve(cfg, cli);
    if (sub == "bell") return run_bell(cfg, cli);
    if (sub == "spectrum") return run_spectrum(cfg, cli);
    if (sub == "vqe") return run_vqe(cfg, cli);
    if (sub == "kinetics") return run_kinetics(cfg, cli);
    if (sub == "spatial") return run_spatial(cfg, cli);
    throw sp::ConfigError("unknown subcommand '" + sub + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-proton spin system simulator"};
    app.require_subcommand(0, 1);

    Cli cli;
    app.add_option("--config", cli.config_path, "JSON configuration file");
    app.add_option("--set", cli.overrides, "Override config values, key.path=value");
    app.add_option("--output", cli.output_path, "Output file path");
    app.add_option("--seed", cli.seed, "Seed recorded in reports");

    const char* subs[] = {"evolve", "ramsey", "bell", "spectrum",
                          "vqe", "kinetics", "spatial"};
    for (const char* name : subs) {
        CLI::App* s = app.add_subcommand(name);
        s->add_option("--config", cli.config_path, "JSON configuration file");
        s->add_option("--set", cli.overrides, "Override config values");
        s->add_option("--output", cli.output_path, "Output file path");
        s->add_option("--seed", cli.seed, "Seed recorded in reports");
        if (std::string(name) == "bell")
            s->add_option("--variant", cli.bell_variant, "Tx, Ty, Tz or Tz_star");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "E_CONFIG: " << e.what() << "\n";
        return 2;
    }

    for (CLI::App* s : app.get_subcommands()) cli.subcommand = s->get_name();

    try {
        return dispatch(cli);
    } catch (const sp::ConfigError& e) {
        std::cerr << "E_CONFIG: " << e.what() << "\n";
        return 2;
    } catch (const sp::IoError& e) {
        std::cerr << "E_IO: " << e.what() << "\n";
        return 4;
    } catch (const sp::PhysicsError& e) {
        std::cerr << "E_PHYS: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "E_PHYS: " << e.what() << "\n";
        return 3;
    }
}
