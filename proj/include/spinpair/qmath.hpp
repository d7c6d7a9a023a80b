#pragma once

#include <Eigen/Dense>
#include <complex>

#include "spinpair/constants.hpp"
#include "spinpair/errors.hpp"

// Dense complex linear algebra and quantum-information measures for the
// small Hilbert spaces used throughout (dimensions 2..16).

namespace spinpair {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

// ---------------------------------------------------------------------------
// Domain value types

/// Normalized state vector.  Construction validates the norm; use
/// PureState::normalized to build from an unnormalized amplitude vector.
class PureState {
  public:
    explicit PureState(Vector amplitudes);
    static PureState normalized(Vector amplitudes);

    Eigen::Index dim() const { return amps_.size(); }
    const Vector& amplitudes() const { return amps_; }
    Complex amplitude(Eigen::Index i) const { return amps_(i); }

  private:
    Vector amps_;
};

/// Hermitian, unit-trace, positive-semidefinite matrix.  Construction
/// validates all three invariants.
class DensityMatrix {
  public:
    explicit DensityMatrix(Matrix rho);
    static DensityMatrix from_pure(const PureState& psi);

    Eigen::Index dim() const { return rho_.rows(); }
    const Matrix& matrix() const { return rho_; }

  private:
    Matrix rho_;
};

// ---------------------------------------------------------------------------
// Predicates

bool is_hermitian(const Matrix& a, double tol = kHermTol);
bool is_unitary(const Matrix& u, double tol = kUnitTol);
void require_hermitian(const Matrix& a, const char* what, double tol = kHermTol);

inline Matrix dagger(const Matrix& a) { return a.adjoint(); }

// ---------------------------------------------------------------------------
// Operations

/// Tensor product, dimension dim(a) * dim(b).
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

struct EighResult {
    RealVector values;  // ascending
    Matrix vectors;     // column k pairs with values(k); unitary as a matrix
};

/// Eigendecomposition of a Hermitian operator.  Eigenvalues ascending,
/// eigenvectors orthonormal and deterministic for a given input.
EighResult eigh(const Matrix& h);

/// exp(-i h t) for Hermitian h, computed through the eigendecomposition.
Matrix propagator(const Matrix& h, double t);

/// Wootters concurrence of a two-qubit pure state.
/// For amplitudes (a, b, c, d) this is 2|ad - bc|.
double concurrence(const PureState& psi);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence(const DensityMatrix& rho);

/// |<psi|phi>|^2, insensitive to the global phase of either state.
double fidelity_up_to_phase(const PureState& psi, const PureState& phi);

enum class KeepFactor { A, B };

/// Partial trace of a state on A (x) B with dim = dim_a * dim_b.
DensityMatrix partial_trace(const DensityMatrix& rho, Eigen::Index dim_a,
                            Eigen::Index dim_b, KeepFactor keep);

/// Re Tr(rho^2).
double purity(const DensityMatrix& rho);

}  // namespace spinpair
