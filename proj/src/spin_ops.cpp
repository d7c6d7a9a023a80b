#include "spinpair/spin_ops.hpp"

namespace spinpair {

Matrix pauli_i() { return Matrix::Identity(2, 2); }

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix spin_half(char axis) {
    switch (axis) {
        case 'x': return 0.5 * pauli_x();
        case 'y': return 0.5 * pauli_y();
        case 'z': return 0.5 * pauli_z();
        default: throw PhysicsError("spin_half: axis must be x, y or z");
    }
}

Matrix spin_half_plus() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;  // S+|down> = |up>
    return m;
}

Matrix spin_half_minus() {
    Matrix m = Matrix::Zero(2, 2);
    m(1, 0) = 1.0;
    return m;
}

Matrix two_spin_op(const Matrix& single, int spin) {
    if (spin == 1) return kron(single, pauli_i());
    if (spin == 2) return kron(pauli_i(), single);
    throw PhysicsError("two_spin_op: spin index must be 1 or 2");
}

Matrix s1(char axis) { return two_spin_op(spin_half(axis), 1); }
Matrix s2(char axis) { return two_spin_op(spin_half(axis), 2); }
Matrix total_spin(char axis) { return s1(axis) + s2(axis); }

Matrix s1_dot_s2() {
    return s1('x') * s2('x') + s1('y') * s2('y') + s1('z') * s2('z');
}

Matrix total_spin_squared() {
    Matrix sq = Matrix::Zero(4, 4);
    for (char a : {'x', 'y', 'z'}) {
        Matrix t = total_spin(a);
        sq += t * t;
    }
    return sq;
}

Matrix swap_op() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(3, 3) = 1;
    return m;
}

Matrix spin1(char axis) {
    const double r = 1.0 / std::sqrt(2.0);
    Matrix m = Matrix::Zero(3, 3);
    switch (axis) {
        case 'x':
            m(0, 1) = r; m(1, 0) = r; m(1, 2) = r; m(2, 1) = r;
            return m;
        case 'y':
            m(0, 1) = Complex(0, -r); m(1, 0) = Complex(0, r);
            m(1, 2) = Complex(0, -r); m(2, 1) = Complex(0, r);
            return m;
        case 'z':
            m(0, 0) = 1; m(2, 2) = -1;
            return m;
        default: throw PhysicsError("spin1: axis must be x, y or z");
    }
}

Matrix spin1_cartesian(char axis) {
    auto eps = [](int a, int b, int c) -> double {
        if (a == b || b == c || a == c) return 0.0;
        // parity of the permutation (a,b,c) of (0,1,2)
        return ((b - a + 3) % 3 == 1) ? 1.0 : -1.0;
    };
    int u;
    switch (axis) {
        case 'x': u = 0; break;
        case 'y': u = 1; break;
        case 'z': u = 2; break;
        default: throw PhysicsError("spin1_cartesian: axis must be x, y or z");
    }
    Matrix m = Matrix::Zero(3, 3);
    for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) m(b, c) = Complex(0, -eps(u, b, c));
    return m;
}

}  // namespace spinpair
