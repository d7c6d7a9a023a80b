#include "spinpair/fermion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "spinpair/constants.hpp"

namespace spinpair {

using nlohmann::json;

std::vector<double> FermionIntegrals::dense_v() const {
    const int m = m_orbitals;
    std::vector<double> dense(static_cast<size_t>(m) * m * m * m, 0.0);
    auto at = [m](int p, int q, int r, int s) {
        return ((static_cast<size_t>(p) * m + q) * m + r) * m + s;
    };
    std::set<std::array<int, 4>> seen;
    for (const TwoBodyEntry& e : v) {
        if (e.p < 0 || e.p >= m || e.q < 0 || e.q >= m || e.r < 0 || e.r >= m ||
            e.s < 0 || e.s >= m)
            throw ConfigError("FermionIntegrals: two-body index out of range");
        if (!seen.insert({e.p, e.q, e.r, e.s}).second)
            throw ConfigError("FermionIntegrals: duplicate two-body entry");
        dense[at(e.p, e.q, e.r, e.s)] = e.value;
    }
    return dense;
}

void FermionIntegrals::validate() const {
    if (m_orbitals < 1 || m_orbitals > 4)
        throw ConfigError("FermionIntegrals: M must be between 1 and 4");
    if (h.rows() != m_orbitals || h.cols() != m_orbitals)
        throw ConfigError("FermionIntegrals: h must be M x M");
    if ((h - h.transpose()).cwiseAbs().maxCoeff() > kHermTol)
        throw PhysicsError("FermionIntegrals: h is not symmetric");
    const int m = m_orbitals;
    auto dense = dense_v();
    auto at = [m](int p, int q, int r, int s) {
        return ((static_cast<size_t>(p) * m + q) * m + r) * m + s;
    };
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            for (int r = 0; r < m; ++r)
                for (int s = 0; s < m; ++s)
                    if (std::abs(dense[at(p, q, r, s)] - dense[at(q, p, s, r)]) >
                        kHermTol)
                        throw PhysicsError(
                            "FermionIntegrals: v violates particle-exchange symmetry");
}

FermionIntegrals load_integrals(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("load_integrals: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& err) {
        throw ConfigError(std::string("load_integrals: ") + err.what());
    }
    FermionIntegrals ints;
    try {
        if (j.contains("convention") && j.at("convention") != "physicists")
            throw ConfigError("load_integrals: unsupported two-body convention");
        ints.m_orbitals = j.at("M").get<int>();
        const auto& h = j.at("h");
        ints.h.resize(ints.m_orbitals, ints.m_orbitals);
        if (static_cast<int>(h.size()) != ints.m_orbitals)
            throw ConfigError("load_integrals: h row count != M");
        for (int r = 0; r < ints.m_orbitals; ++r) {
            if (static_cast<int>(h.at(r).size()) != ints.m_orbitals)
                throw ConfigError("load_integrals: h column count != M");
            for (int c = 0; c < ints.m_orbitals; ++c)
                ints.h(r, c) = h.at(r).at(c).get<double>();
        }
        for (const auto& row : j.at("v")) {
            if (row.size() != 5)
                throw ConfigError("load_integrals: v rows must be [p,q,r,s,value]");
            ints.v.push_back({row.at(0).get<int>(), row.at(1).get<int>(),
                              row.at(2).get<int>(), row.at(3).get<int>(),
                              row.at(4).get<double>()});
        }
    } catch (const json::exception& err) {
        throw ConfigError(std::string("load_integrals: ") + err.what());
    }
    ints.validate();
    return ints;
}

void save_integrals(const FermionIntegrals& ints, const std::string& path) {
    json j;
    j["units"] = "hartree-like";
    j["convention"] = "physicists";
    j["M"] = ints.m_orbitals;
    j["h"] = json::array();
    for (int r = 0; r < ints.m_orbitals; ++r) {
        json row = json::array();
        for (int c = 0; c < ints.m_orbitals; ++c) row.push_back(ints.h(r, c));
        j["h"].push_back(row);
    }
    j["v"] = json::array();
    for (const TwoBodyEntry& e : ints.v)
        j["v"].push_back(json::array({e.p, e.q, e.r, e.s, e.value}));
    std::ofstream out(path);
    if (!out) throw IoError("save_integrals: cannot open " + path);
    out << j.dump(2) << '\n';
}

Matrix fock_annihilation(int mode, int n_modes) {
    if (mode < 0 || mode >= n_modes) throw PhysicsError("fock_annihilation: bad mode");
    Matrix z = Matrix::Identity(1, 1);
    Matrix a2(2, 2);
    a2.setZero();
    a2(0, 1) = 1.0;  // |0><1|
    Matrix zp(2, 2);
    zp << 1, 0, 0, -1;
    for (int k = 0; k < n_modes; ++k) {
        if (k < mode)
            z = kron(z, zp);
        else if (k == mode)
            z = kron(z, a2);
        else
            z = kron(z, Matrix::Identity(2, 2));
    }
    return z;
}

Matrix fock_number_op(int n_modes) {
    const Eigen::Index dim = Eigen::Index{1} << n_modes;
    Matrix n = Matrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        n(i, i) = static_cast<double>(std::popcount(static_cast<unsigned long>(i)));
    return n;
}

Matrix fock_sz_op(int n_modes) {
    const Eigen::Index dim = Eigen::Index{1} << n_modes;
    Matrix sz = Matrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        double val = 0.0;
        for (int mode = 0; mode < n_modes; ++mode)
            if (i & (Eigen::Index{1} << (n_modes - 1 - mode)))
                val += (mode % 2 == 0) ? 0.5 : -0.5;
        sz(i, i) = val;
    }
    return sz;
}

namespace {

// Runs the body over the spin-orbital expansion shared by the dense and
// qubit builders.  emit1(j, k, coeff) receives a+_j a_k terms, emit2 the
// a+_p a+_q a_s a_r quadruples (note the physicists' pairing of r with p).
template <typename Emit1, typename Emit2>
void expand_integrals(const FermionIntegrals& ints, Emit1&& emit1, Emit2&& emit2) {
    const int m = ints.m_orbitals;
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            if (ints.h(p, q) == 0.0) continue;
            for (int spin = 0; spin < 2; ++spin)
                emit1(2 * p + spin, 2 * q + spin, ints.h(p, q));
        }
    auto dense = ints.dense_v();
    auto at = [m](int p, int q, int r, int s) {
        return ((static_cast<size_t>(p) * m + q) * m + r) * m + s;
    };
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            for (int r = 0; r < m; ++r)
                for (int s = 0; s < m; ++s) {
                    const double val = dense[at(p, q, r, s)];
                    if (val == 0.0) continue;
                    for (int sig = 0; sig < 2; ++sig)
                        for (int tau = 0; tau < 2; ++tau)
                            emit2(2 * p + sig, 2 * q + tau, 2 * s + tau, 2 * r + sig,
                                  0.5 * val);
                }
}

}  // namespace

FermionHamiltonian build_fermion_h(const FermionIntegrals& ints) {
    ints.validate();
    const int n = ints.n_modes();
    const Eigen::Index dim = Eigen::Index{1} << n;
    std::vector<Matrix> a(n), ad(n);
    for (int j = 0; j < n; ++j) {
        a[j] = fock_annihilation(j, n);
        ad[j] = a[j].adjoint();
    }
    Matrix h = Matrix::Zero(dim, dim);
    expand_integrals(
        ints,
        [&](int j, int k, double c) { h += c * (ad[j] * a[k]); },
        [&](int cp, int cq, int as_, int ar, double c) {
            h += c * (ad[cp] * ad[cq] * a[as_] * a[ar]);
        });
    h = (h + h.adjoint()) / 2.0;
    FermionHamiltonian fh{n, std::move(h)};
    require_hermitian(fh.matrix, "build_fermion_h", 1e-10);
    return fh;
}

namespace {

// Jordan-Wigner ladder expressions.
PauliExpr jw_annihilate(int mode, int n) {
    std::string wx(n, 'I'), wy(n, 'I');
    for (int k = 0; k < mode; ++k) {
        wx[k] = 'Z';
        wy[k] = 'Z';
    }
    wx[mode] = 'X';
    wy[mode] = 'Y';
    PauliExpr e = PauliExpr::single(n, wx, 0.5);
    e += PauliExpr::single(n, wy, 0.5 * kI);
    return e;
}

std::string with_axis(std::string word, const std::vector<int>& idx, char axis) {
    for (int k : idx) word[k] = axis;
    return word;
}

// Bravyi-Kitaev ladder expressions from the update/parity/flip sets.
PauliExpr bk_annihilate(int mode, int n) {
    const auto update = bk_update_set(mode, n);
    const auto parity = bk_parity_set(mode, n);
    std::vector<int> rho = parity;
    if (mode % 2 == 1) {
        const auto flip = bk_flip_set(mode, n);
        std::vector<int> reduced;
        for (int k : parity)
            if (std::find(flip.begin(), flip.end(), k) == flip.end())
                reduced.push_back(k);
        rho = std::move(reduced);
    }
    std::string wx(n, 'I'), wy(n, 'I');
    wx = with_axis(wx, update, 'X');
    wx[mode] = 'X';
    wx = with_axis(wx, parity, 'Z');
    wy = with_axis(wy, update, 'X');
    wy[mode] = 'Y';
    wy = with_axis(wy, rho, 'Z');
    PauliExpr e = PauliExpr::single(n, wx, 0.5);
    e += PauliExpr::single(n, wy, 0.5 * kI);
    return e;
}

template <typename Ladder>
PauliSum qubit_hamiltonian(const FermionIntegrals& ints, Ladder&& annihilate) {
    ints.validate();
    const int n = ints.n_modes();
    std::vector<PauliExpr> a, ad;
    for (int j = 0; j < n; ++j) {
        PauliExpr aj = annihilate(j, n);
        // The creation operator is the adjoint: Pauli words are Hermitian,
        // so conjugating the coefficients is enough.
        PauliExpr adj = PauliExpr::zero(n);
        for (const auto& [w, c] : aj.terms())
            adj += PauliExpr::single(n, w, std::conj(c));
        a.push_back(std::move(aj));
        ad.push_back(std::move(adj));
    }

    PauliExpr total = PauliExpr::zero(n);
    expand_integrals(
        ints,
        [&](int j, int k, double c) {
            PauliExpr t = ad[j] * a[k];
            t *= c;
            total += t;
        },
        [&](int cp, int cq, int as_, int ar, double c) {
            PauliExpr t = ((ad[cp] * ad[cq]) * a[as_]) * a[ar];
            t *= c;
            total += t;
        });
    total.prune();
    return total.to_hermitian_sum();
}

}  // namespace

PauliSum jordan_wigner(const FermionIntegrals& ints) {
    return qubit_hamiltonian(ints, [](int j, int n) { return jw_annihilate(j, n); });
}

PauliSum bravyi_kitaev(const FermionIntegrals& ints) {
    return qubit_hamiltonian(ints, [](int j, int n) { return bk_annihilate(j, n); });
}

std::vector<int> bk_update_set(int j, int n) {
    std::vector<int> out;
    long u = j | (j + 1L);
    while (u < n) {
        out.push_back(static_cast<int>(u));
        u = u | (u + 1L);
    }
    return out;
}

std::vector<int> bk_parity_set(int j, int n) {
    (void)n;
    std::vector<int> out;
    long i = j - 1L;
    while (i >= 0) {
        out.push_back(static_cast<int>(i));
        i = (i & (i + 1L)) - 1L;
    }
    return out;
}

std::vector<int> bk_flip_set(int j, int n) {
    (void)n;
    std::vector<int> out;
    const long lo = j & (j + 1L);
    long c = j - 1L;
    while (c >= lo) {
        out.push_back(static_cast<int>(c));
        c = (c & (c + 1L)) - 1L;
    }
    return out;
}

long bk_encode_occupation(long occupation_index, int n) {
    auto mode_bit = [&](int mode) {
        return (occupation_index >> (n - 1 - mode)) & 1L;
    };
    long encoded = 0;
    for (int i = 0; i < n; ++i) {
        long parity = mode_bit(i);
        const long lo = i & (i + 1L);
        for (int j = static_cast<int>(lo); j < i; ++j) parity ^= mode_bit(j);
        if (parity) encoded |= 1L << (n - 1 - i);
    }
    return encoded;
}

std::vector<long> sector_basis(int n_modes, int n_particles, double sz) {
    std::vector<long> out;
    const long dim = 1L << n_modes;
    for (long idx = 0; idx < dim; ++idx) {
        if (std::popcount(static_cast<unsigned long>(idx)) != n_particles) continue;
        double s = 0.0;
        for (int mode = 0; mode < n_modes; ++mode)
            if (idx & (1L << (n_modes - 1 - mode))) s += (mode % 2 == 0) ? 0.5 : -0.5;
        if (std::abs(s - sz) < 1e-9) out.push_back(idx);
    }
    return out;
}

std::array<double, 6> taper_two_qubit(const FermionIntegrals& ints) {
    if (ints.m_orbitals != 2)
        throw PhysicsError("taper_two_qubit: requires M = 2");
    FermionHamiltonian fh = build_fermion_h(ints);
    // Sector basis in the fixed order |00>, |01>, |10>, |11| where the first
    // qubit is the orbital of the up proton and the second the orbital of
    // the down proton.
    const std::array<long, 4> idx = {0b1100, 0b1001, 0b0110, 0b0011};
    Matrix sector(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) sector(i, j) = fh.matrix(idx[i], idx[j]);

    PauliSum sum = pauli_decompose(sector, 1e-14);
    static const std::array<std::string, 6> allowed = {"II", "ZI", "IZ",
                                                       "ZZ", "YY", "XX"};
    std::array<double, 6> g{};
    for (const PauliTerm& t : sum.terms) {
        auto it = std::find(allowed.begin(), allowed.end(), t.word);
        if (it == allowed.end()) {
            if (std::abs(t.coefficient) > 1e-10)
                throw PhysicsError(
                    "taper_two_qubit: projected Hamiltonian has a residual " + t.word +
                    " term; integrals outside the assumed symmetry class");
            continue;
        }
        g[static_cast<size_t>(it - allowed.begin())] = t.coefficient;
    }
    return g;
}

GroundState exact_ground(const FermionHamiltonian& fh, int n_particles, double sz) {
    const auto basis = sector_basis(fh.n_modes, n_particles, sz);
    if (basis.empty()) throw PhysicsError("exact_ground: empty symmetry sector");
    Matrix block(basis.size(), basis.size());
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j)
            block(i, j) = fh.matrix(basis[i], basis[j]);
    EighResult eig = eigh(block);
    Vector full = Vector::Zero(fh.matrix.rows());
    for (size_t i = 0; i < basis.size(); ++i) full(basis[i]) = eig.vectors(i, 0);
    return {eig.values(0), std::move(full)};
}

}  // namespace spinpair
