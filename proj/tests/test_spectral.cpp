#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "helpers.hpp"
#include "irlab/fock/ladder.hpp"
#include "irlab/fock/weyl.hpp"
#include "irlab/spectral/expm.hpp"
#include "irlab/spectral/lanczos.hpp"
#include "irlab/util/rng.hpp"

using namespace irlab;
using namespace irlab::fock;
using namespace irlab::spectral;
using test_helpers::toy_grid;
using test_helpers::toy_grid_n;
using cplx = std::complex<double>;

namespace {

SparseOperator random_hermitian(BasisPtr b, std::uint64_t seed, double density = 0.05) {
    util::SplitMix64 rng(seed);
    std::vector<Triplet> t;
    const auto n = b->size();
    for (std::uint32_t r = 0; r < n; ++r) {
        t.push_back({r, r, rng.next_symmetric()});
        for (std::uint32_t c = r + 1; c < n; ++c)
            if (rng.next_double() < density) {
                const cplx v(rng.next_symmetric(), rng.next_symmetric());
                t.push_back({r, c, v});
                t.push_back({c, r, std::conj(v)});
            }
    }
    return SparseOperator(std::move(b), std::move(t), true);
}

} // namespace

TEST_CASE("lowest eigenpair on closed-form cases") {
    SECTION("diagonal operator") {
        auto b = make_basis(toy_grid({1.0, 2.0}, {1, 1}), 1, 1);
        auto H = SparseOperator::diagonal(b, {0.0, 1.0, 2.0});
        auto r = lowest_eigenpair(H, 1e-12, 500, 7);
        CHECK(r.eigenvalue == Catch::Approx(0.0).margin(1e-12));
        CHECK(r.residual <= 1e-12);
    }
    SECTION("2x2 closed form") {
        // [[0, c],[c, D]] has lowest eigenvalue (D - sqrt(D^2+4c^2))/2
        const double c = 0.37, D = 1.25;
        auto b = make_basis(toy_grid({1.0}, {1.0}), 1, 1);
        std::vector<Triplet> t{{0, 1, c}, {1, 0, c}, {1, 1, D}};
        SparseOperator H(b, std::move(t), true);
        auto r = lowest_eigenpair(H, 1e-12, 500, 3);
        CHECK(r.eigenvalue ==
              Catch::Approx(0.5 * (D - std::sqrt(D * D + 4 * c * c))).margin(1e-12));
    }
    SECTION("free photon hamiltonian has the vacuum as ground state") {
        auto b = make_basis(toy_grid({0.5, 1.5, 2.5}, {1, 1, 1}), 3, 3);
        auto H = free_photon_hamiltonian(b);
        auto r = lowest_eigenpair(H, 1e-11, 2000, 11);
        CHECK(r.eigenvalue == Catch::Approx(0.0).margin(1e-11));
        CHECK(std::abs(r.eigenvector.amp[0]) == Catch::Approx(1.0).margin(1e-9));
    }
    SECTION("non-hermitian input is rejected") {
        auto b = make_basis(toy_grid({1.0}, {1.0}), 1, 1);
        auto a = annihilation_op(b, 0);
        CHECK_THROWS_AS(lowest_eigenpair(a, 1e-10, 100, 1), ArgumentError);
    }
    SECTION("non-convergence carries the best residual") {
        auto b = make_basis(toy_grid_n(4), 3, 3);
        auto H = random_hermitian(b, 21, 0.2);
        CHECK_THROWS_AS(lowest_eigenpair(H, 1e-14, 3, 5), DiagnosticError);
    }
}

TEST_CASE("dense-oracle equivalence for the eigensolver") {
    // Lanczos against full dense diagonalization, basis <= 512
    auto b = make_basis(toy_grid_n(6), 3, 3); // 84 states
    auto H = random_hermitian(b, 123, 0.08);
    auto dense = dense_lowest_eigenpair(H.dense());
    auto r = lowest_eigenpair(H, 1e-12, 4000, 17);
    CHECK(std::abs(r.eigenvalue - dense.eigenvalue) < 1e-9);
    CHECK(std::abs(std::abs(r.eigenvector.amp.dot(dense.eigenvector)) - 1.0) < 1e-7);
    // Rayleigh bound: reported eigenvalue cannot undershoot the true
    // minimum by more than its residual
    CHECK(r.eigenvalue >= dense.eigenvalue - r.residual);
}

TEST_CASE("krylov propagation") {
    auto b = make_basis(toy_grid({0.7, 1.3}, {1, 1}), 4, 4);
    auto H = random_hermitian(b, 5, 0.15);
    util::SplitMix64 rng(33);
    FockVector psi(b);
    for (std::size_t i = 0; i < b->size(); ++i)
        psi.amp[i] = cplx(rng.next_symmetric(), rng.next_symmetric());
    psi.normalize();

    SECTION("t = 0 is the identity") {
        auto r = evolve(H, psi, 0.0, 1e-12);
        CHECK((r.vector.amp - psi.amp).norm() == 0.0);
        CHECK(r.steps == 0);
    }
    SECTION("diagonal generator gives exact phases") {
        std::vector<double> d;
        for (std::size_t i = 0; i < b->size(); ++i) d.push_back(0.1 * i - 0.4);
        auto D = SparseOperator::diagonal(b, d);
        auto r = evolve(D, psi, 2.7, 1e-13);
        for (std::size_t i = 0; i < b->size(); ++i) {
            const double ph = -2.7 * d[i];
            CHECK(std::abs(r.vector.amp[i] - psi.amp[i] * cplx(std::cos(ph), std::sin(ph))) <
                  1e-12);
        }
    }
    SECTION("group property: forward then backward returns the state") {
        auto f = evolve(H, psi, 1.9, 1e-11);
        auto back = evolve(H, f.vector, -1.9, 1e-11);
        CHECK((back.vector.amp - psi.amp).norm() < 2e-11 + 2 * f.error_estimate);
    }
    SECTION("norm and energy are conserved") {
        auto r = evolve(H, psi, 5.0, 1e-10);
        CHECK(std::abs(r.vector.norm() - 1.0) < 1e-10);
        const double e0 = H.expectation(psi).real();
        const double e1 = H.expectation(r.vector).real();
        Amplitudes tmp;
        H.apply(psi.amp, tmp);
        const double hnorm = tmp.norm(); // scale proxy for |H|
        CHECK(std::abs(e1 - e0) <= 10 * 1e-10 * std::max(1.0, hnorm));
    }
    SECTION("dense-oracle equivalence for propagation") {
        auto U = dense_exp_hermitian_times_minus_i(H.dense(), 3.3);
        auto r = evolve(H, psi, 3.3, 1e-12);
        CHECK((r.vector.amp - U * psi.amp).norm() < 1e-9);
    }
}

TEST_CASE("anti-hermitian exponential matches the dense oracle") {
    auto grid = toy_grid({0.5, 1.1, 1.9}, {0.8, 1.0, 0.5});
    auto b = make_basis(grid, 5, 5);
    CloudFunction g(grid, {cplx(0.3, -0.1), cplx(-0.2, 0.4), cplx(0.15, 0.25)});
    auto ops = smeared_field_ops(b, g);
    auto psi = vacuum_state(b);
    auto r = exp_antihermitian_apply(ops.create, ops.annihilate, psi, 1e-12);
    // oracle: dense exponential of the anti-hermitian generator
    Eigen::MatrixXcd K = ops.create.dense() - ops.annihilate.dense();
    Eigen::MatrixXcd W = dense_exp_antihermitian(K);
    CHECK((r.vector.amp - W * psi.amp).norm() < 1e-10);
    CHECK(std::abs(r.vector.norm() - 1.0) < 1e-11);
}

TEST_CASE("deterministic start vectors make runs reproducible") {
    auto b = make_basis(toy_grid_n(5), 2, 2);
    auto H = random_hermitian(b, 77, 0.1);
    auto r1 = lowest_eigenpair(H, 1e-11, 2000, 42);
    auto r2 = lowest_eigenpair(H, 1e-11, 2000, 42);
    CHECK(r1.eigenvalue == r2.eigenvalue);
    CHECK((r1.eigenvector.amp - r2.eigenvector.amp).norm() == 0.0);
    CHECK(r1.iterations == r2.iterations);
}
