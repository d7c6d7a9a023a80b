#pragma once

#include "spinpair/qmath.hpp"

// Spin operator matrices (hbar = 1).
//
// Two-spin basis ordering is (|uu>, |ud>, |du>, |dd>) with the qubit
// encoding |up> = |0>, |down> = |1>; the first spin is the leftmost
// tensor factor.  S+|down> = |up>, S-|up> = |down>.

namespace spinpair {

Matrix pauli_i();
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

// Spin-1/2 operators, Pauli/2.
Matrix spin_half(char axis);  // axis in {'x','y','z'}
Matrix spin_half_plus();
Matrix spin_half_minus();

// One-spin operator lifted into the two-spin space (spin = 1 or 2).
Matrix two_spin_op(const Matrix& single, int spin);

// Convenience: S_{1a}, S_{2a}, total S_a = S_1a + S_2a.
Matrix s1(char axis);
Matrix s2(char axis);
Matrix total_spin(char axis);

// S1 . S2 and total S^2 on the two-spin space.
Matrix s1_dot_s2();
Matrix total_spin_squared();

// Spin swap operator on the two-spin space.
Matrix swap_op();

// Spin-1 operators in the |m = +1, 0, -1> basis.
Matrix spin1(char axis);

// Spin-1 operators in the Cartesian zero-field triplet basis {Tx, Ty, Tz},
// (J_a)_{bc} = -i eps_{abc}.
Matrix spin1_cartesian(char axis);

}  // namespace spinpair
