#pragma once

#include <array>
#include <string>
#include <vector>

#include "spinpair/pauli.hpp"
#include "spinpair/qmath.hpp"

// Second-quantized two-proton Hamiltonian on a small spatial-orbital basis,
// Jordan-Wigner and Bravyi-Kitaev qubit encodings, the symmetry-sector
// reduction of the M = 2 problem to two qubits, and exact sector ground
// states.
//
// Spin-orbital ordering is (orb0 up, orb0 down, orb1 up, orb1 down, ...);
// mode j maps to spatial orbital j/2 with spin up for even j.  In Fock
// basis indices, mode 0 is the most significant bit and |1> means occupied.

namespace spinpair {

struct TwoBodyEntry {
    int p = 0, q = 0, r = 0, s = 0;
    double value = 0.0;
};

/// One- and two-proton integrals over M spatial orbitals.  Two-body values
/// use the physicists' convention <pq|rs> (r pairs with p on particle 1,
/// s with q on particle 2) and must satisfy <pq|rs> = <qp|sr>.
struct FermionIntegrals {
    int m_orbitals = 2;
    Eigen::MatrixXd h;             // M x M, symmetric
    std::vector<TwoBodyEntry> v;   // sparse list, unique index quadruples

    int n_modes() const { return 2 * m_orbitals; }
    /// Dense M^4 view of v (index p, q, r, s).
    std::vector<double> dense_v() const;
    void validate() const;
};

/// Reads the UTF-8 JSON schema
///   {"units": "...", "convention": "physicists", "M": m,
///    "h": [[...], ...], "v": [[p, q, r, s, value], ...]}.
/// Schema problems raise ConfigError, symmetry violations PhysicsError,
/// missing files IoError.
FermionIntegrals load_integrals(const std::string& path);
void save_integrals(const FermionIntegrals& ints, const std::string& path);

/// Dense Fock-space annihilation operator for one mode, with the usual
/// ordered-product sign convention.
Matrix fock_annihilation(int mode, int n_modes);
Matrix fock_number_op(int n_modes);
Matrix fock_sz_op(int n_modes);

struct FermionHamiltonian {
    int n_modes = 0;
    Matrix matrix;  // 2^n_modes square, Hermitian
};

/// H = sum_pq h_pq a+_p a_q + 1/2 sum_pqrs <pq|rs> a+_p a+_q a_s a_r with
/// spin-conserving expansion over spin orbitals.  Commutes with the number
/// and Sz operators.
FermionHamiltonian build_fermion_h(const FermionIntegrals& ints);

/// Jordan-Wigner qubit form of the same Hamiltonian: one qubit per mode,
/// a_j = Z_0 .. Z_{j-1} (X_j + i Y_j)/2.
PauliSum jordan_wigner(const FermionIntegrals& ints);

/// Bravyi-Kitaev qubit form built from the binary-tree update, parity and
/// flip index sets.
PauliSum bravyi_kitaev(const FermionIntegrals& ints);

// Index sets of the Bravyi-Kitaev encoding (exposed for tests).
std::vector<int> bk_update_set(int j, int n);
std::vector<int> bk_parity_set(int j, int n);
std::vector<int> bk_flip_set(int j, int n);
/// Encoded bit string of an occupation bit string (mode 0 = MSB in both).
long bk_encode_occupation(long occupation_index, int n);

/// Fock indices of the (n_particles, sz) symmetry sector, ascending.
std::vector<long> sector_basis(int n_modes, int n_particles, double sz);

/// Two-qubit coefficients of H projected onto the (N = 2, Sz = 0) sector of
/// an M = 2 problem, ordered (I, Z0, Z1, Z0Z1, Y0Y1, X0X1).  The sector
/// basis maps |ab> to "up proton in orbital a, down proton in orbital b".
/// If the projection contains any other Pauli word above 1e-10 the
/// integrals lie outside the assumed symmetry class and a PhysicsError is
/// raised.
std::array<double, 6> taper_two_qubit(const FermionIntegrals& ints);

struct GroundState {
    double energy = 0.0;
    Vector state;  // in the full Fock space
};

/// Lowest eigenpair within one (N, Sz) sector; empty sectors raise.
GroundState exact_ground(const FermionHamiltonian& fh, int n_particles, double sz);

}  // namespace spinpair
