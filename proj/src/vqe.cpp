#include "spinpair/vqe.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinpair/pauli.hpp"

namespace spinpair {

Matrix six_term_matrix(const std::array<double, 6>& g) {
    static const std::array<const char*, 6> words = {"II", "ZI", "IZ",
                                                     "ZZ", "YY", "XX"};
    Matrix h = Matrix::Zero(4, 4);
    for (size_t k = 0; k < 6; ++k)
        if (g[k] != 0.0) h += g[k] * pauli_word_matrix(words[k]);
    return h;
}

PureState vqe_ansatz(double theta) {
    Vector v = Vector::Zero(4);
    v(1) = std::cos(theta);
    v(2) = -std::sin(theta);
    return PureState(v);
}

double vqe_energy(const std::array<double, 6>& g, double theta) {
    const Vector psi = vqe_ansatz(theta).amplitudes();
    return (psi.adjoint() * six_term_matrix(g) * psi)(0, 0).real();
}

VqeResult vqe(const std::array<double, 6>& g, const VqeOptions& opts) {
    const Matrix h = six_term_matrix(g);
    auto energy = [&](double theta) {
        const Vector psi = vqe_ansatz(theta).amplitudes();
        return (psi.adjoint() * h * psi)(0, 0).real();
    };

    VqeResult result;
    // The energy is pi-periodic in theta; scan one period for the bracket.
    const int n_scan = 129;
    const double lo = -std::numbers::pi / 2.0, hi = std::numbers::pi / 2.0;
    const double step = (hi - lo) / (n_scan - 1);
    int best = 0;
    double best_e = energy(lo);
    result.trace.push_back({lo, best_e});
    for (int k = 1; k < n_scan; ++k) {
        const double th = lo + k * step;
        const double e = energy(th);
        result.trace.push_back({th, e});
        if (e < best_e) {
            best_e = e;
            best = k;
        }
    }
    double a = lo + (best - 1) * step;
    double b = lo + (best + 1) * step;

    // Golden-section refinement on [a, b].
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = energy(x1), f2 = energy(x2);
    int it = 0;
    while (b - a > opts.theta_tol) {
        if (++it > opts.max_iter)
            throw PhysicsError("vqe: no convergence after " +
                               std::to_string(opts.max_iter) +
                               " iterations; best energy " + std::to_string(best_e));
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = energy(x1);
            result.trace.push_back({x1, f1});
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = energy(x2);
            result.trace.push_back({x2, f2});
        }
        best_e = std::min(best_e, std::min(f1, f2));
    }
    result.iterations = it;
    result.theta = (a + b) / 2.0;
    result.energy = energy(result.theta);
    if (result.energy > best_e) {
        // Keep the best sampled point if the midpoint is marginally worse.
        for (const VqeIterate& p : result.trace)
            if (p.energy < result.energy) {
                result.energy = p.energy;
                result.theta = p.theta;
            }
    }

    EighResult eig = eigh(h);
    result.ground_in_manifold = std::abs(result.energy - eig.values(0)) <= 1e-9;
    return result;
}

}  // namespace spinpair
