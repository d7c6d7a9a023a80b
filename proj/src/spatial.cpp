#include "spinpair/spatial.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace spinpair {

double SpatialWavefunction::grid_norm() const {
    return psi.array().square().sum() * cell_area;
}

SpatialWavefunction spatial_two_proton(const SpatialModel& model) {
    if (model.sigma_angstrom <= 0.0)
        throw PhysicsError("spatial_two_proton: sigma must be positive");
    if (model.grid_points < 3)
        throw PhysicsError("spatial_two_proton: grid needs at least 3 points");
    if (model.grid_min >= model.grid_max)
        throw PhysicsError("spatial_two_proton: empty grid range");
    if (model.grid_min > 0.0 || model.grid_max < model.separation_angstrom)
        throw PhysicsError("spatial_two_proton: grid must cover both sites");

    const int n = model.grid_points;
    const double dx = (model.grid_max - model.grid_min) / (n - 1);
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = model.grid_min + i * dx;

    auto gaussian = [&](double center, double xi) {
        const double u = (xi - center) / model.sigma_angstrom;
        return std::exp(-0.5 * u * u);
    };

    Eigen::VectorXd site_g(n), site_c(n);
    for (int i = 0; i < n; ++i) {
        site_g(i) = gaussian(0.0, x(i));
        site_c(i) = gaussian(model.separation_angstrom, x(i));
    }

    // Delocalized one-proton orbitals, grid-normalized.
    Eigen::VectorXd even = site_g + site_c;
    Eigen::VectorXd odd = site_g - site_c;
    const double even_norm = std::sqrt(even.squaredNorm() * dx);
    const double odd_norm = std::sqrt(odd.squaredNorm() * dx);
    if (odd_norm < 1e-12 || even_norm < 1e-12)
        throw PhysicsError("spatial_two_proton: degenerate orbitals (coincident sites?)");
    even /= even_norm;
    odd /= odd_norm;

    const double sign = model.parity == SpatialParity::Symmetric ? 1.0 : -1.0;
    Eigen::MatrixXd psi(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            psi(i, j) = even(i) * odd(j) + sign * odd(i) * even(j);

    const double cell = dx * dx;
    const double norm = std::sqrt(psi.array().square().sum() * cell);
    if (norm < 1e-12)
        throw PhysicsError("spatial_two_proton: wavefunction vanishes on the grid");
    psi /= norm;

    return {model, std::move(x), std::move(psi), cell};
}

void write_spatial_csv(const SpatialWavefunction& wf, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("write_spatial_csv: cannot open " + path);
    out << "x1,x2,re,im,abs2\n";
    char buf[160];
    const int n = static_cast<int>(wf.x.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v = wf.psi(i, j);
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,0,%.17g\n", wf.x(i),
                          wf.x(j), v, v * v);
            out << buf;
        }
    }
    if (!out) throw IoError("write_spatial_csv: write failed for " + path);
}

}  // namespace spinpair
