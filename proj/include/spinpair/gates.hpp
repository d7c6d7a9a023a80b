#pragma once

#include <string>
#include <vector>

#include "spinpair/qmath.hpp"

// Qubit gate layer: the standard single-qubit set, CNOT, axis rotations,
// circuits over up to a handful of qubits with a line-based text format,
// the Bell-preparation circuits for the zero-field triplet targets, and
// the X(x)X tautomer map.

namespace spinpair {

enum class GateKind { I, X, Y, Z, S, T, H, CNOT, Rotation };

struct Gate {
    GateKind kind = GateKind::I;
    int target = 0;
    int control = -1;     // CNOT only
    char axis = 'x';      // Rotation only
    double angle = 0.0;   // Rotation only

    /// 2x2 matrix for single-qubit kinds; throws for CNOT.
    Matrix single_qubit_matrix() const;
};

Gate make_gate(GateKind kind, int target);
Gate make_cnot(int control, int target);
Gate make_rotation(char axis, double angle, int target);

/// Qubit 0 is the leftmost tensor factor (most significant bit).
struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;

    void validate() const;
    /// Full unitary of the circuit.
    Matrix unitary() const;
};

/// Applies the circuit; the input dimension must be 2^n_qubits.
PureState apply_circuit(const Circuit& c, const PureState& input);

/// One gate per line, "GATE target [control]", e.g. "H 0" or "CNOT 1 0".
/// Rotations are not representable in this format.
std::string circuit_to_text(const Circuit& c);
Circuit circuit_from_text(const std::string& text, int n_qubits);

enum class BellVariant { Tx, Ty, Tz, TzStar };

/// Two-qubit preparation circuits: from |00| the Tx/Ty/Tz variants produce
/// the corresponding zero-field triplet, and from |11> the TzStar variant
/// produces T0, each up to a global phase.
Circuit bell_prep(BellVariant variant);

/// Input state the bell_prep circuit expects (|00> or |11>).
PureState bell_prep_input(BellVariant variant);

/// Target state of the bell_prep circuit.
PureState bell_prep_target(BellVariant variant);

/// X (x) X.
PureState tautomer_flip(const PureState& state);

}  // namespace spinpair
