#include "spinpair/pauli.hpp"

#include <algorithm>
#include <cmath>

#include "spinpair/spin_ops.hpp"

namespace spinpair {

std::pair<Complex, char> pauli_multiply(char a, char b) {
    if (a == 'I') return {1.0, b};
    if (b == 'I') return {1.0, a};
    if (a == b) return {1.0, 'I'};
    // Cyclic: XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i.
    auto cyc = [](char x) { return x == 'X' ? 0 : x == 'Y' ? 1 : 2; };
    const int ia = cyc(a), ib = cyc(b);
    static const char axes[3] = {'X', 'Y', 'Z'};
    const char c = axes[3 - ia - ib];
    const bool forward = (ib - ia + 3) % 3 == 1;
    return {forward ? kI : -kI, c};
}

Matrix pauli_word_matrix(const std::string& word) {
    Matrix out = Matrix::Identity(1, 1);
    for (char c : word) {
        switch (c) {
            case 'I': out = kron(out, pauli_i()); break;
            case 'X': out = kron(out, pauli_x()); break;
            case 'Y': out = kron(out, pauli_y()); break;
            case 'Z': out = kron(out, pauli_z()); break;
            default: throw PhysicsError("pauli_word_matrix: bad character");
        }
    }
    return out;
}

Matrix PauliSum::to_matrix() const {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    Matrix out = Matrix::Zero(dim, dim);
    for (const PauliTerm& t : terms) out += t.coefficient * pauli_word_matrix(t.word);
    return out;
}

double PauliSum::coefficient(const std::string& word) const {
    for (const PauliTerm& t : terms)
        if (t.word == word) return t.coefficient;
    return 0.0;
}

PauliExpr::PauliExpr(int n_qubits) : n_(n_qubits) {}

PauliExpr PauliExpr::zero(int n_qubits) { return PauliExpr(n_qubits); }

PauliExpr PauliExpr::identity(int n_qubits, Complex coeff) {
    PauliExpr e(n_qubits);
    e.terms_[std::string(n_qubits, 'I')] = coeff;
    return e;
}

PauliExpr PauliExpr::single(int n_qubits, const std::string& word, Complex coeff) {
    if (static_cast<int>(word.size()) != n_qubits)
        throw PhysicsError("PauliExpr: word length mismatch");
    PauliExpr e(n_qubits);
    e.terms_[word] = coeff;
    return e;
}

PauliExpr& PauliExpr::operator+=(const PauliExpr& other) {
    if (other.n_ != n_) throw PhysicsError("PauliExpr: qubit count mismatch");
    for (const auto& [w, c] : other.terms_) terms_[w] += c;
    return *this;
}

PauliExpr& PauliExpr::operator*=(Complex scale) {
    for (auto& [w, c] : terms_) c *= scale;
    return *this;
}

PauliExpr PauliExpr::operator*(const PauliExpr& other) const {
    if (other.n_ != n_) throw PhysicsError("PauliExpr: qubit count mismatch");
    PauliExpr out(n_);
    std::string w(n_, 'I');
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : other.terms_) {
            Complex phase = ca * cb;
            for (int q = 0; q < n_; ++q) {
                auto [p, c] = pauli_multiply(wa[q], wb[q]);
                phase *= p;
                w[q] = c;
            }
            out.terms_[w] += phase;
        }
    }
    return out;
}

void PauliExpr::prune(double tol) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < tol)
            it = terms_.erase(it);
        else
            ++it;
    }
}

PauliSum PauliExpr::to_hermitian_sum(double tol) const {
    PauliSum sum;
    sum.n_qubits = n_;
    for (const auto& [w, c] : terms_) {
        if (std::abs(c) < 1e-12) continue;
        if (std::abs(c.imag()) > tol)
            throw PhysicsError("PauliExpr: non-Hermitian residual on word " + w);
        sum.terms.push_back({c.real(), w});
    }
    std::sort(sum.terms.begin(), sum.terms.end(),
              [](const PauliTerm& a, const PauliTerm& b) { return a.word < b.word; });
    return sum;
}

PauliSum pauli_decompose(const Matrix& h, double tol) {
    int n = 0;
    while ((Eigen::Index{1} << n) < h.rows()) ++n;
    if ((Eigen::Index{1} << n) != h.rows() || h.rows() != h.cols())
        throw PhysicsError("pauli_decompose: matrix is not 2^n square");
    require_hermitian(h, "pauli_decompose", 1e-9);

    PauliSum sum;
    sum.n_qubits = n;
    const double dim = static_cast<double>(h.rows());
    std::string word(n, 'I');
    const char axes[4] = {'I', 'X', 'Y', 'Z'};
    const long total = 1L << (2 * n);
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int q = 0; q < n; ++q) {
            word[q] = axes[c & 3];
            c >>= 2;
        }
        const Complex coeff = (pauli_word_matrix(word) * h).trace() / dim;
        if (std::abs(coeff) >= tol) sum.terms.push_back({coeff.real(), word});
    }
    std::sort(sum.terms.begin(), sum.terms.end(),
              [](const PauliTerm& a, const PauliTerm& b) { return a.word < b.word; });
    return sum;
}

}  // namespace spinpair
