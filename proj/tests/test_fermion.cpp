#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "spinpair/fermion.hpp"
#include "spinpair/vqe.hpp"
#include "test_support.hpp"

using namespace spinpair;

namespace {

// Chemists' tensor with full real-orbital symmetry, mapped to the
// physicists' convention <pq|rs> = (pr|qs).
std::vector<TwoBodyEntry> physicists_from_chemists(const double chem[2][2][2][2]) {
    std::vector<TwoBodyEntry> v;
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
            for (int r = 0; r < 2; ++r)
                for (int s = 0; s < 2; ++s) {
                    const double val = chem[p][r][q][s];
                    if (val != 0.0) v.push_back({p, q, r, s, val});
                }
    return v;
}

void fill_chemists(double chem[2][2][2][2], double c0000, double c1111, double c0011,
                   double c0101, double c0001 = 0.0, double c0111 = 0.0) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) chem[i][j][k][l] = 0.0;
    auto set8 = [&](int i, int j, int k, int l, double val) {
        chem[i][j][k][l] = val;
        chem[j][i][k][l] = val;
        chem[i][j][l][k] = val;
        chem[j][i][l][k] = val;
        chem[k][l][i][j] = val;
        chem[l][k][i][j] = val;
        chem[k][l][j][i] = val;
        chem[l][k][j][i] = val;
    };
    set8(0, 0, 0, 0, c0000);
    set8(1, 1, 1, 1, c1111);
    set8(0, 0, 1, 1, c0011);
    set8(0, 1, 0, 1, c0101);
    if (c0001 != 0.0) set8(0, 0, 0, 1, c0001);
    if (c0111 != 0.0) set8(0, 1, 1, 1, c0111);
}

// Fully general real-symmetric integrals; exercises the encodings.
FermionIntegrals random_full_integrals(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    FermionIntegrals ints;
    ints.m_orbitals = 2;
    ints.h.resize(2, 2);
    const double h00 = u(rng), h11 = u(rng), h01 = u(rng);
    ints.h << h00, h01, h01, h11;
    double chem[2][2][2][2];
    fill_chemists(chem, u(rng), u(rng), u(rng), u(rng), 0.5 * u(rng), 0.5 * u(rng));
    ints.v = physicists_from_chemists(chem);
    ints.validate();
    return ints;
}

// Diagonal one-body part plus Coulomb/exchange two-body structure.  The
// (N = 2, Sz = 0) sector splits into a paired block and the flip-flop block
// {|01>, |10>}, and the parameters keep the ground state in the latter.
FermionIntegrals random_flipflop_integrals(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> eps(-1.0, -0.3);
    std::uniform_real_distribution<double> coulomb(3.0, 5.0);
    std::uniform_real_distribution<double> small(0.05, 0.3);
    std::uniform_real_distribution<double> sym(-0.3, 0.3);
    FermionIntegrals ints;
    ints.m_orbitals = 2;
    ints.h.resize(2, 2);
    ints.h << eps(rng), 0.0, 0.0, eps(rng);
    double chem[2][2][2][2];
    fill_chemists(chem, coulomb(rng), coulomb(rng), small(rng), sym(rng));
    ints.v = physicists_from_chemists(chem);
    ints.validate();
    return ints;
}

FermionIntegrals toy_integrals() {
    FermionIntegrals ints;
    ints.m_orbitals = 2;
    ints.h.resize(2, 2);
    ints.h << -1.0, -0.2, -0.2, -0.5;
    ints.v = {{0, 0, 0, 0, 0.7}};
    return ints;
}

std::vector<double> spectrum(const Matrix& h) {
    EighResult eig = eigh(h);
    return std::vector<double>(eig.values.data(), eig.values.data() + eig.values.size());
}

double multiset_distance(std::vector<double> a, std::vector<double> b) {
    REQUIRE(a.size() == b.size());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double worst = 0.0;
    for (size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

// True when every value of `sub` matches a distinct value of `super`.
bool is_sub_multiset(std::vector<double> sub, std::vector<double> super, double tol) {
    std::sort(sub.begin(), sub.end());
    std::sort(super.begin(), super.end());
    size_t j = 0;
    for (double x : sub) {
        while (j < super.size() && super[j] < x - tol) ++j;
        if (j == super.size() || std::abs(super[j] - x) > tol) return false;
        ++j;
    }
    return true;
}

}  // namespace

TEST_CASE("Pauli single-character products match dense matrices") {
    const char axes[4] = {'I', 'X', 'Y', 'Z'};
    for (char a : axes)
        for (char b : axes) {
            auto [phase, c] = pauli_multiply(a, b);
            Matrix lhs = pauli_word_matrix(std::string(1, a)) *
                         pauli_word_matrix(std::string(1, b));
            Matrix rhs = phase * pauli_word_matrix(std::string(1, c));
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-15);
        }
}

TEST_CASE("Pauli expression products and decomposition round-trip") {
    auto rng = sptest::make_rng(200);
    PauliExpr a = PauliExpr::single(3, "XIZ", Complex(0.5, -0.25));
    PauliExpr b = PauliExpr::single(3, "YYI", Complex(-1.0, 2.0));
    Matrix dense = pauli_word_matrix("XIZ") * Complex(0.5, -0.25) *
                   (pauli_word_matrix("YYI") * Complex(-1.0, 2.0));
    PauliExpr prod = a * b;
    Matrix from_expr = Matrix::Zero(8, 8);
    for (const auto& [w, c] : prod.terms()) from_expr += c * pauli_word_matrix(w);
    CHECK((from_expr - dense).cwiseAbs().maxCoeff() < 1e-13);

    Matrix h = sptest::random_hermitian(rng, 4);
    PauliSum sum = pauli_decompose(h, 0.0);
    CHECK((sum.to_matrix() - h).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("integral file round-trip and validation errors") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = (dir / "spinpair_toy_integrals.json").string();
    FermionIntegrals toy = toy_integrals();
    save_integrals(toy, path);
    FermionIntegrals back = load_integrals(path);
    CHECK(back.m_orbitals == 2);
    CHECK((back.h - toy.h).cwiseAbs().maxCoeff() == 0.0);
    REQUIRE(back.v.size() == 1);
    CHECK(back.v[0].value == 0.7);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(load_integrals((dir / "missing_integrals.json").string()), IoError);

    FermionIntegrals bad_h = toy;
    bad_h.h(0, 1) = 99.0;
    CHECK_THROWS_AS(bad_h.validate(), PhysicsError);

    FermionIntegrals bad_v = toy;
    bad_v.v = {{0, 1, 0, 0, 0.3}};  // missing the (1,0,0,0) partner
    CHECK_THROWS_AS(bad_v.validate(), PhysicsError);

    FermionIntegrals dup = toy;
    dup.v = {{0, 0, 0, 0, 0.7}, {0, 0, 0, 0, 0.7}};
    CHECK_THROWS_AS(dup.validate(), ConfigError);

    const auto bad_path = (dir / "spinpair_bad_integrals.json").string();
    {
        std::ofstream out(bad_path);
        out << "{\"M\": 2, \"h\": [[0,0],[0,0]], \"v\": [], \"convention\": \"chemists\"}";
    }
    CHECK_THROWS_AS(load_integrals(bad_path), ConfigError);
    {
        std::ofstream out(bad_path);
        out << "{not json";
    }
    CHECK_THROWS_AS(load_integrals(bad_path), ConfigError);
    std::filesystem::remove(bad_path);
}

TEST_CASE("ladder matrices satisfy the anticommutation relations") {
    const int n = 4;
    const Matrix id = Matrix::Identity(16, 16);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            Matrix aj = fock_annihilation(j, n);
            Matrix adk = fock_annihilation(k, n).adjoint();
            Matrix anti = aj * adk + adk * aj;
            Matrix expected = (j == k) ? id : Matrix::Zero(16, 16);
            CHECK((anti - expected).cwiseAbs().maxCoeff() < 1e-12);

            Matrix ak = fock_annihilation(k, n);
            CHECK((aj * ak + ak * aj).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("Fock Hamiltonian: zero case, filling oracle, symmetries") {
    FermionIntegrals zero;
    zero.m_orbitals = 2;
    zero.h = Eigen::MatrixXd::Zero(2, 2);
    CHECK(build_fermion_h(zero).matrix.cwiseAbs().maxCoeff() == 0.0);

    // Independent-orbital filling: the spectrum is every subset sum of the
    // spin-orbital energies.
    FermionIntegrals diag;
    diag.m_orbitals = 2;
    diag.h.resize(2, 2);
    diag.h << -0.9, 0.0, 0.0, 0.4;
    FermionHamiltonian fh = build_fermion_h(diag);
    std::vector<double> filling;
    const double eps[4] = {-0.9, -0.9, 0.4, 0.4};
    for (int mask = 0; mask < 16; ++mask) {
        double e = 0.0;
        for (int b = 0; b < 4; ++b)
            if (mask & (1 << b)) e += eps[b];
        filling.push_back(e);
    }
    CHECK(multiset_distance(spectrum(fh.matrix), filling) < 1e-12);

    auto rng = sptest::make_rng(201);
    for (int round = 0; round < 5; ++round) {
        FermionIntegrals ints = random_full_integrals(rng);
        FermionHamiltonian h = build_fermion_h(ints);
        CHECK(is_hermitian(h.matrix, 1e-10));
        Matrix n_op = fock_number_op(4), sz_op = fock_sz_op(4);
        CHECK((h.matrix * n_op - n_op * h.matrix).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((h.matrix * sz_op - sz_op * h.matrix).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("Jordan-Wigner encoding") {
    // a+0 a0 on one mode is (I - Z)/2.
    FermionIntegrals one;
    one.m_orbitals = 1;
    one.h.resize(1, 1);
    one.h << 1.0;
    PauliSum sum = jordan_wigner(one);  // n_up + n_down over two modes
    Matrix dense = sum.to_matrix();
    Matrix expected = (Matrix::Identity(4, 4) - pauli_word_matrix("ZI")) / 2.0 +
                      (Matrix::Identity(4, 4) - pauli_word_matrix("IZ")) / 2.0;
    CHECK((dense - expected).cwiseAbs().maxCoeff() < 1e-13);

    // The qubit matrix reproduces the Fock matrix exactly.
    auto rng = sptest::make_rng(202);
    for (int round = 0; round < 5; ++round) {
        FermionIntegrals ints = random_full_integrals(rng);
        CHECK((jordan_wigner(ints).to_matrix() - build_fermion_h(ints).matrix)
                  .cwiseAbs()
                  .maxCoeff() < 1e-11);
    }

    FermionIntegrals zero;
    zero.m_orbitals = 2;
    zero.h = Eigen::MatrixXd::Zero(2, 2);
    CHECK(jordan_wigner(zero).terms.empty());
}

TEST_CASE("Bravyi-Kitaev index sets for four modes") {
    using IV = std::vector<int>;
    CHECK(bk_update_set(0, 4) == IV{1, 3});
    CHECK(bk_update_set(1, 4) == IV{3});
    CHECK(bk_update_set(2, 4) == IV{3});
    CHECK(bk_update_set(3, 4) == IV{});
    CHECK(bk_parity_set(0, 4) == IV{});
    CHECK(bk_parity_set(1, 4) == IV{0});
    CHECK(bk_parity_set(2, 4) == IV{1});
    CHECK(bk_parity_set(3, 4) == IV{2, 1});
    CHECK(bk_flip_set(0, 4) == IV{});
    CHECK(bk_flip_set(1, 4) == IV{0});
    CHECK(bk_flip_set(2, 4) == IV{});
    CHECK(bk_flip_set(3, 4) == IV{2, 1});
}

TEST_CASE("Bravyi-Kitaev encoding is the encoded-basis relabeling of Fock space") {
    // Encoded bits store partial parities: check a few by hand for n = 4.
    CHECK(bk_encode_occupation(0b1100, 4) == 0b1000);
    CHECK(bk_encode_occupation(0b1000, 4) == 0b1101);
    CHECK(bk_encode_occupation(0b0011, 4) == 0b0010);

    auto rng = sptest::make_rng(203);
    for (int round = 0; round < 5; ++round) {
        FermionIntegrals ints = random_full_integrals(rng);
        Matrix fock = build_fermion_h(ints).matrix;
        Matrix perm = Matrix::Zero(16, 16);
        for (long x = 0; x < 16; ++x) perm(bk_encode_occupation(x, 4), x) = 1.0;
        Matrix expected = perm * fock * perm.transpose();
        CHECK((bravyi_kitaev(ints).to_matrix() - expected).cwiseAbs().maxCoeff() <
              1e-11);
    }
}

TEST_CASE("Jordan-Wigner and Bravyi-Kitaev spectra agree") {
    auto rng = sptest::make_rng(204);
    for (int round = 0; round < 20; ++round) {
        FermionIntegrals ints = random_full_integrals(rng);
        const double dist = multiset_distance(spectrum(jordan_wigner(ints).to_matrix()),
                                              spectrum(bravyi_kitaev(ints).to_matrix()));
        CHECK(dist < 1e-10);
    }
}

TEST_CASE("two-qubit reduction of the paired-sector problem") {
    auto rng = sptest::make_rng(205);
    for (int round = 0; round < 10; ++round) {
        FermionIntegrals ints = random_flipflop_integrals(rng);
        const auto g = taper_two_qubit(ints);
        Matrix reduced = six_term_matrix(g);

        FermionHamiltonian fh = build_fermion_h(ints);
        const auto sector = sector_basis(4, 2, 0.0);
        REQUIRE(sector.size() == 4);
        Matrix block(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) block(i, j) = fh.matrix(sector[i], sector[j]);

        CHECK(multiset_distance(spectrum(reduced), spectrum(block)) < 1e-10);
        CHECK(is_sub_multiset(spectrum(reduced), spectrum(fh.matrix), 1e-10));
    }

    // Equal orbital energies and no inter-orbital coupling: no flip-flop.
    FermionIntegrals sym;
    sym.m_orbitals = 2;
    sym.h.resize(2, 2);
    sym.h << -0.4, 0.0, 0.0, -0.4;
    auto g = taper_two_qubit(sym);
    CHECK(g[4] == 0.0);
    CHECK(g[5] == 0.0);

    FermionIntegrals zero;
    zero.m_orbitals = 2;
    zero.h = Eigen::MatrixXd::Zero(2, 2);
    for (double gk : taper_two_qubit(zero)) CHECK(gk == 0.0);

    // One-body hopping leaves the six-word family; that is a structure error.
    CHECK_THROWS_AS(taper_two_qubit(toy_integrals()), PhysicsError);
}

TEST_CASE("exact sector ground states") {
    FermionIntegrals diag;
    diag.m_orbitals = 2;
    diag.h.resize(2, 2);
    diag.h << -0.9, 0.0, 0.0, 0.4;
    FermionHamiltonian fh = build_fermion_h(diag);

    GroundState g20 = exact_ground(fh, 2, 0.0);
    CHECK(g20.energy == doctest::Approx(-1.8).epsilon(1e-13));  // both in orbital 0
    GroundState vacuum = exact_ground(fh, 0, 0.0);
    CHECK(vacuum.energy == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::norm(vacuum.state(0)) == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(exact_ground(fh, 2, 2.0), PhysicsError);  // empty sector

    auto rng = sptest::make_rng(206);
    FermionIntegrals ints = random_flipflop_integrals(rng);
    GroundState sector = exact_ground(build_fermion_h(ints), 2, 0.0);
    auto g = taper_two_qubit(ints);
    EighResult reduced = eigh(six_term_matrix(g));
    CHECK(sector.energy == doctest::Approx(reduced.values(0)).epsilon(1e-10));
}

TEST_CASE("spectrum is invariant under orbital relabeling") {
    auto rng = sptest::make_rng(207);
    FermionIntegrals ints = random_full_integrals(rng);
    FermionIntegrals swapped = ints;
    std::swap(swapped.h(0, 0), swapped.h(1, 1));
    for (TwoBodyEntry& e : swapped.v) {
        e.p ^= 1;
        e.q ^= 1;
        e.r ^= 1;
        e.s ^= 1;
    }
    const double dist = multiset_distance(spectrum(build_fermion_h(ints).matrix),
                                          spectrum(build_fermion_h(swapped).matrix));
    CHECK(dist < 1e-11);
}

TEST_CASE("variational search over the flip-flop manifold") {
    std::array<double, 6> zeros{};
    VqeResult idle = vqe(zeros);
    CHECK(idle.energy == doctest::Approx(0.0).epsilon(1e-14));

    // Opposite single-qubit fields: the manifold minimum matches the exact
    // sector minimum found by diagonalization.
    std::array<double, 6> fields{0.0, 0.6, -0.6, 0.0, 0.0, 0.0};
    VqeResult res = vqe(fields);
    EighResult eig = eigh(six_term_matrix(fields));
    CHECK(res.energy == doctest::Approx(eig.values(0)).epsilon(1e-9));
    CHECK(res.ground_in_manifold);

    // Dense scan oracle.
    double scan_best = 1e300;
    for (int k = 0; k <= 2048; ++k) {
        const double theta = -std::numbers::pi / 2.0 + std::numbers::pi * k / 2048.0;
        scan_best = std::min(scan_best, vqe_energy(fields, theta));
    }
    CHECK(res.energy <= scan_best + 1e-9);

    // When the true ground state pairs the protons, the manifold search
    // reports best-in-manifold and clears the flag.
    std::array<double, 6> paired{0.0, 1.0, 1.0, 0.0, 0.0, 0.0};
    VqeResult out = vqe(paired);
    CHECK_FALSE(out.ground_in_manifold);
    CHECK(out.energy == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("variational energies track the exact sector ground states") {
    auto rng = sptest::make_rng(208);
    for (int round = 0; round < 10; ++round) {
        FermionIntegrals ints = random_flipflop_integrals(rng);
        const auto g = taper_two_qubit(ints);
        VqeResult res = vqe(g);
        GroundState exact = exact_ground(build_fermion_h(ints), 2, 0.0);
        CHECK(std::abs(res.energy - exact.energy) < 1e-6);
        CHECK(res.energy >= exact.energy - 1e-9);  // variational bound
        CHECK(res.ground_in_manifold);
    }
}
