#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinpair/qmath.hpp"

// Weighted sums of Pauli words.  A word is a string over {I,X,Y,Z}; the
// character at position q acts on qubit q, qubit 0 being the leftmost
// tensor factor.

namespace spinpair {

struct PauliTerm {
    double coefficient = 0.0;
    std::string word;
};

/// Hermitian Pauli sum: real coefficients, unique words, identity word first
/// then lexicographic.
struct PauliSum {
    int n_qubits = 0;
    std::vector<PauliTerm> terms;

    Matrix to_matrix() const;
    double coefficient(const std::string& word) const;  // 0 if absent
};

/// General complex-weighted Pauli expression used while multiplying
/// operators out; collapse to a Hermitian PauliSum at the end.
class PauliExpr {
  public:
    explicit PauliExpr(int n_qubits);
    static PauliExpr zero(int n_qubits);
    static PauliExpr identity(int n_qubits, Complex coeff = 1.0);
    static PauliExpr single(int n_qubits, const std::string& word, Complex coeff);

    int n_qubits() const { return n_; }
    const std::map<std::string, Complex>& terms() const { return terms_; }

    PauliExpr& operator+=(const PauliExpr& other);
    PauliExpr& operator*=(Complex scale);
    PauliExpr operator*(const PauliExpr& other) const;

    /// Drops terms with |coeff| < tol.
    void prune(double tol = 1e-12);

    /// Requires all coefficients real within tol; returns the Hermitian sum.
    PauliSum to_hermitian_sum(double tol = 1e-10) const;

  private:
    int n_;
    std::map<std::string, Complex> terms_;
};

/// Single-character Pauli product: returns (phase, result character).
std::pair<Complex, char> pauli_multiply(char a, char b);

/// Dense matrix of one word.
Matrix pauli_word_matrix(const std::string& word);

/// Hilbert-Schmidt Pauli decomposition of a Hermitian 2^n x 2^n matrix:
/// coefficients Tr(P_w H) / 2^n over all words.  Terms below tol dropped.
PauliSum pauli_decompose(const Matrix& h, double tol = 1e-12);

}  // namespace spinpair
