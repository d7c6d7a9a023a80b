#include "spinpair/gates.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "spinpair/spin_ops.hpp"
#include "spinpair/states.hpp"

namespace spinpair {

namespace {

const char* kind_name(GateKind k) {
    switch (k) {
        case GateKind::I: return "I";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::S: return "S";
        case GateKind::T: return "T";
        case GateKind::H: return "H";
        case GateKind::CNOT: return "CNOT";
        case GateKind::Rotation: return "ROT";
    }
    return "?";
}

}  // namespace

Matrix Gate::single_qubit_matrix() const {
    switch (kind) {
        case GateKind::I: return pauli_i();
        case GateKind::X: return pauli_x();
        case GateKind::Y: return pauli_y();
        case GateKind::Z: return pauli_z();
        case GateKind::S: {
            Matrix m = Matrix::Identity(2, 2);
            m(1, 1) = kI;
            return m;
        }
        case GateKind::T: {
            Matrix m = Matrix::Identity(2, 2);
            m(1, 1) = std::exp(kI * (std::numbers::pi / 4.0));
            return m;
        }
        case GateKind::H: {
            Matrix m(2, 2);
            const double r = 1.0 / std::sqrt(2.0);
            m << r, r, r, -r;
            return m;
        }
        case GateKind::Rotation: {
            return std::cos(angle / 2.0) * Matrix::Identity(2, 2) -
                   2.0 * kI * std::sin(angle / 2.0) * spin_half(axis);
        }
        case GateKind::CNOT:
            throw PhysicsError("Gate: CNOT has no single-qubit matrix");
    }
    throw PhysicsError("Gate: unknown kind");
}

Gate make_gate(GateKind kind, int target) {
    if (kind == GateKind::CNOT) throw PhysicsError("make_gate: use make_cnot");
    Gate g;
    g.kind = kind;
    g.target = target;
    return g;
}

Gate make_cnot(int control, int target) {
    if (control == target) throw PhysicsError("make_cnot: control equals target");
    Gate g;
    g.kind = GateKind::CNOT;
    g.control = control;
    g.target = target;
    return g;
}

Gate make_rotation(char axis, double angle, int target) {
    Gate g;
    g.kind = GateKind::Rotation;
    g.axis = axis;
    g.angle = angle;
    g.target = target;
    return g;
}

void Circuit::validate() const {
    if (n_qubits < 1 || n_qubits > 10)
        throw PhysicsError("Circuit: qubit count out of range");
    for (const Gate& g : gates) {
        if (g.target < 0 || g.target >= n_qubits)
            throw PhysicsError("Circuit: gate target out of range");
        if (g.kind == GateKind::CNOT &&
            (g.control < 0 || g.control >= n_qubits || g.control == g.target))
            throw PhysicsError("Circuit: CNOT control out of range");
    }
}

namespace {

// Applies a single gate in place by direct index manipulation.
// Qubit q's bit value in a basis index is 1 << (n - 1 - q).
void apply_gate(Vector& amps, const Gate& g, int n_qubits) {
    const Eigen::Index dim = amps.size();
    if (g.kind == GateKind::CNOT) {
        const Eigen::Index cbit = Eigen::Index{1} << (n_qubits - 1 - g.control);
        const Eigen::Index tbit = Eigen::Index{1} << (n_qubits - 1 - g.target);
        for (Eigen::Index i = 0; i < dim; ++i)
            if ((i & cbit) && !(i & tbit)) std::swap(amps(i), amps(i | tbit));
        return;
    }
    const Matrix u = g.single_qubit_matrix();
    const Eigen::Index tbit = Eigen::Index{1} << (n_qubits - 1 - g.target);
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (i & tbit) continue;
        const Complex a0 = amps(i);
        const Complex a1 = amps(i | tbit);
        amps(i) = u(0, 0) * a0 + u(0, 1) * a1;
        amps(i | tbit) = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

}  // namespace

Matrix Circuit::unitary() const {
    validate();
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    Matrix u = Matrix::Identity(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        Vector v = u.col(col);
        for (const Gate& g : gates) apply_gate(v, g, n_qubits);
        u.col(col) = v;
    }
    return u;
}

PureState apply_circuit(const Circuit& c, const PureState& input) {
    c.validate();
    if (input.dim() != (Eigen::Index{1} << c.n_qubits))
        throw PhysicsError("apply_circuit: state dimension does not match circuit");
    Vector amps = input.amplitudes();
    for (const Gate& g : c.gates) apply_gate(amps, g, c.n_qubits);
    return PureState(amps);
}

std::string circuit_to_text(const Circuit& c) {
    c.validate();
    std::ostringstream out;
    for (const Gate& g : c.gates) {
        if (g.kind == GateKind::Rotation)
            throw PhysicsError("circuit_to_text: rotations are not representable");
        out << kind_name(g.kind) << ' ' << g.target;
        if (g.kind == GateKind::CNOT) out << ' ' << g.control;
        out << '\n';
    }
    return out.str();
}

Circuit circuit_from_text(const std::string& text, int n_qubits) {
    Circuit c;
    c.n_qubits = n_qubits;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string name;
        ls >> name;
        if (name.empty()) continue;
        auto bad = [&](const std::string& why) {
            throw ConfigError("circuit_from_text: line " + std::to_string(lineno) +
                              ": " + why);
        };
        int target = -1;
        if (!(ls >> target)) bad("missing target");
        if (name == "CNOT") {
            int control = -1;
            if (!(ls >> control)) bad("CNOT needs a control");
            c.gates.push_back(make_cnot(control, target));
            continue;
        }
        static const std::pair<const char*, GateKind> table[] = {
            {"I", GateKind::I}, {"X", GateKind::X}, {"Y", GateKind::Y},
            {"Z", GateKind::Z}, {"S", GateKind::S}, {"T", GateKind::T},
            {"H", GateKind::H}};
        bool found = false;
        for (const auto& [nm, kind] : table) {
            if (name == nm) {
                c.gates.push_back(make_gate(kind, target));
                found = true;
                break;
            }
        }
        if (!found) bad("unknown gate " + name);
    }
    c.validate();
    return c;
}

Circuit bell_prep(BellVariant variant) {
    Circuit c;
    c.n_qubits = 2;
    switch (variant) {
        case BellVariant::Tx:
            // |00> -> (|00> - |11>)/sqrt2 ~ Tx up to sign.
            c.gates = {make_gate(GateKind::H, 0), make_cnot(0, 1),
                       make_gate(GateKind::Z, 0)};
            break;
        case BellVariant::Ty:
            // |00> -> (|00> + |11>)/sqrt2 ~ Ty up to the phase i.
            c.gates = {make_gate(GateKind::H, 0), make_cnot(0, 1)};
            break;
        case BellVariant::Tz:
            // |00> -> (|01> + |10>)/sqrt2.
            c.gates = {make_gate(GateKind::H, 0), make_cnot(0, 1),
                       make_gate(GateKind::X, 1)};
            break;
        case BellVariant::TzStar:
            // |11> -> -(|01> + |10>)/sqrt2.
            c.gates = {make_gate(GateKind::H, 1), make_cnot(1, 0),
                       make_gate(GateKind::Z, 0)};
            break;
    }
    return c;
}

PureState bell_prep_input(BellVariant variant) {
    Vector v = Vector::Zero(4);
    v(variant == BellVariant::TzStar ? 3 : 0) = 1.0;
    return PureState(v);
}

PureState bell_prep_target(BellVariant variant) {
    auto zfs = zfs_triplets();
    switch (variant) {
        case BellVariant::Tx: return zfs[0].state;
        case BellVariant::Ty: return zfs[1].state;
        case BellVariant::Tz: return zfs[2].state;
        case BellVariant::TzStar: return zfs[2].state;
    }
    throw PhysicsError("bell_prep_target: unknown variant");
}

PureState tautomer_flip(const PureState& state) {
    if (state.dim() != 4) throw PhysicsError("tautomer_flip: two-qubit state required");
    Vector a = state.amplitudes();
    Vector out(4);
    out(0) = a(3);
    out(1) = a(2);
    out(2) = a(1);
    out(3) = a(0);
    return PureState(out);
}

}  // namespace spinpair
