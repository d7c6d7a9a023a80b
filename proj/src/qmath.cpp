#include "spinpair/qmath.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace spinpair {

PureState::PureState(Vector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() == 0) throw PhysicsError("PureState: empty amplitude vector");
    const double n2 = amps_.squaredNorm();
    if (std::abs(n2 - 1.0) > kNormTol) {
        throw PhysicsError("PureState: squared norm " + std::to_string(n2) +
                           " violates normalization");
    }
}

PureState PureState::normalized(Vector amplitudes) {
    const double n = amplitudes.norm();
    if (n < 1e-300) throw PhysicsError("PureState: cannot normalize the zero vector");
    return PureState(amplitudes / n);
}

DensityMatrix::DensityMatrix(Matrix rho) : rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols() || rho_.rows() == 0)
        throw PhysicsError("DensityMatrix: matrix must be square and nonempty");
    if (!is_hermitian(rho_))
        throw PhysicsError("DensityMatrix: not Hermitian");
    const double tr = rho_.trace().real();
    if (std::abs(tr - 1.0) > kNormTol)
        throw PhysicsError("DensityMatrix: trace " + std::to_string(tr) + " != 1");
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kNormTol)
        throw PhysicsError("DensityMatrix: negative eigenvalue " +
                           std::to_string(es.eigenvalues().minCoeff()));
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    const Vector& a = psi.amplitudes();
    return DensityMatrix(a * a.adjoint());
}

bool is_hermitian(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    return (a - a.adjoint()).cwiseAbs().maxCoeff() < tol;
}

bool is_unitary(const Matrix& u, double tol) {
    if (u.rows() != u.cols()) return false;
    Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff() < tol;
}

void require_hermitian(const Matrix& a, const char* what, double tol) {
    if (!is_hermitian(a, tol))
        throw PhysicsError(std::string(what) + ": operator is not Hermitian");
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Vector kron(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

EighResult eigh(const Matrix& h) {
    require_hermitian(h, "eigh");
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    return {es.eigenvalues(), es.eigenvectors()};
}

Matrix propagator(const Matrix& h, double t) {
    require_hermitian(h, "propagator");
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Vector phases(h.rows());
    for (Eigen::Index k = 0; k < h.rows(); ++k)
        phases(k) = std::exp(Complex(0.0, -es.eigenvalues()(k) * t));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double concurrence(const PureState& psi) {
    if (psi.dim() != 4) throw PhysicsError("concurrence: state must be two qubits");
    const Vector& v = psi.amplitudes();
    return 2.0 * std::abs(v(0) * v(3) - v(1) * v(2));
}

namespace {

// Hermitian PSD square root through the eigendecomposition.
Matrix psd_sqrt(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    Vector d(m.rows());
    for (Eigen::Index k = 0; k < m.rows(); ++k)
        d(k) = std::sqrt(std::max(0.0, es.eigenvalues()(k)));
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double concurrence(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw PhysicsError("concurrence: state must be two qubits");
    Matrix yy(4, 4);
    yy.setZero();
    yy(0, 3) = -1; yy(1, 2) = 1; yy(2, 1) = 1; yy(3, 0) = -1;
    const Matrix& r = rho.matrix();
    Matrix rt = yy * r.conjugate() * yy;
    Matrix sr = psd_sqrt(r);
    Matrix m = sr * rt * sr;
    // m is Hermitian PSD up to roundoff; its root eigenvalues give lambda_i.
    Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
    std::array<double, 4> lam{};
    for (int k = 0; k < 4; ++k) lam[k] = std::sqrt(std::max(0.0, es.eigenvalues()(k)));
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double fidelity_up_to_phase(const PureState& psi, const PureState& phi) {
    if (psi.dim() != phi.dim())
        throw PhysicsError("fidelity_up_to_phase: dimension mismatch");
    return std::norm(psi.amplitudes().dot(phi.amplitudes()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, Eigen::Index dim_a,
                            Eigen::Index dim_b, KeepFactor keep) {
    if (dim_a < 1 || dim_b < 1 || dim_a * dim_b != rho.dim())
        throw PhysicsError("partial_trace: dimension does not factor as requested");
    const Matrix& r = rho.matrix();
    if (keep == KeepFactor::A) {
        Matrix out = Matrix::Zero(dim_a, dim_a);
        for (Eigen::Index i = 0; i < dim_a; ++i)
            for (Eigen::Index j = 0; j < dim_a; ++j)
                for (Eigen::Index k = 0; k < dim_b; ++k)
                    out(i, j) += r(i * dim_b + k, j * dim_b + k);
        return DensityMatrix(out);
    }
    Matrix out = Matrix::Zero(dim_b, dim_b);
    for (Eigen::Index i = 0; i < dim_b; ++i)
        for (Eigen::Index j = 0; j < dim_b; ++j)
            for (Eigen::Index k = 0; k < dim_a; ++k)
                out(i, j) += r(k * dim_b + i, k * dim_b + j);
    return DensityMatrix(out);
}

double purity(const DensityMatrix& rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

}  // namespace spinpair
