#ifndef IRLAB_SPECTRAL_EXPM_HPP
#define IRLAB_SPECTRAL_EXPM_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "irlab/fock/operator.hpp"
#include "irlab/fock/state.hpp"
#include "irlab/util/errors.hpp"

namespace irlab::spectral {

using fock::Amplitudes;
using cplx = std::complex<double>;

struct PropResult {
    Amplitudes vector;
    double error_estimate = 0.0;
    int steps = 0;
};

namespace detail {

// exp(-i tau T) e1 for real symmetric tridiagonal T (m x m)
inline Eigen::VectorXcd expi_tridiag_e1(const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta,
                                        int m, double tau) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(alpha.head(m), beta.head(m - 1 > 0 ? m - 1 : 0),
                              Eigen::ComputeEigenvectors);
    const auto& U = es.eigenvectors();
    const auto& ev = es.eigenvalues();
    Eigen::VectorXcd y(m);
    for (int i = 0; i < m; ++i) {
        cplx acc = 0;
        for (int l = 0; l < m; ++l) {
            const double ph = -tau * ev(l);
            acc += U(i, l) * cplx(std::cos(ph), std::sin(ph)) * U(0, l);
        }
        y(i) = acc;
    }
    return y;
}

} // namespace detail

// Krylov approximation of exp(-i t H) psi for Hermitian H given by its
// action. Lanczos subspace per substep, full reorthogonalization, adaptive
// substepping on the standard last-component error estimate. The substep
// map is exactly unitary, so norms survive to solver precision.
template <class Apply>
PropResult krylov_propagate(const Apply& apply_op, const Amplitudes& psi, double t, double tol,
                            int m_max = 30) {
    PropResult out;
    out.vector = psi;
    if (t == 0.0 || psi.norm() == 0.0) return out;

    const auto dim = psi.size();
    const int m_cap = static_cast<int>(std::min<std::size_t>(dim, m_max));
    double remaining = t;
    const double sign = (t > 0) ? 1.0 : -1.0;
    double dt = t; // first attempt: single step
    const double tol_total = tol;

    std::vector<Amplitudes> V;
    Eigen::VectorXd alpha(m_cap), beta(m_cap);
    int guard = 0;

    while (sign * remaining > 1e-15 * std::abs(t)) {
        if (++guard > 100000) throw DiagnosticError("krylov_propagate: step-size underflow", dt);
        const double nrm = out.vector.norm();
        // Lanczos subspace from the current vector
        V.clear();
        V.push_back(out.vector / nrm);
        Amplitudes w(dim);
        int m_eff = 0;
        bool invariant = false;
        for (int j = 0; j < m_cap; ++j) {
            apply_op(V[j], w);
            cplx a = V[j].dot(w);
            w -= a * V[j];
            if (j > 0) w -= beta[j - 1] * V[j - 1];
            for (int pass = 0; pass < 2; ++pass)
                for (int i = 0; i <= j; ++i) {
                    const cplx c = V[i].dot(w);
                    w -= c * V[i];
                    if (i == j) a += c;
                }
            alpha[j] = a.real();
            const double b = w.norm();
            m_eff = j + 1;
            if (b < 1e-13) {
                invariant = true;
                beta[j] = 0.0;
                break;
            }
            beta[j] = b;
            if (j + 1 < m_cap) V.push_back(w / b);
        }

        if (std::abs(dt) > std::abs(remaining)) dt = remaining;
        for (;;) {
            if (invariant) { dt = remaining; }
            const Eigen::VectorXcd y = detail::expi_tridiag_e1(alpha, beta, m_eff, dt);
            // local truncation estimate: weight leaking through the last
            // Krylov coupling during this substep
            const double err_local =
                invariant ? 0.0 : std::abs(beta[m_eff - 1]) * std::abs(y(m_eff - 1)) * std::abs(dt) * nrm;
            const double budget = tol_total * std::abs(dt) / std::abs(t) + 1e-16 * nrm;
            if (err_local <= budget || std::abs(dt) < 1e-12 * std::abs(t)) {
                Amplitudes next = Amplitudes::Zero(dim);
                for (int i = 0; i < m_eff; ++i) next += y(i) * V[i];
                out.vector = next * nrm;
                out.error_estimate += err_local;
                out.steps += 1;
                remaining -= dt;
                dt *= 1.4; // try a slightly larger substep next
                break;
            }
            dt *= 0.5;
        }
    }
    return out;
}

// spec-facing: exp(-i t H) psi for a Hermitian SparseOperator
struct PropagationResult {
    fock::FockVector vector;
    double error_estimate = 0.0;
    int steps = 0;
};

inline PropagationResult evolve(const fock::SparseOperator& H, const fock::FockVector& psi,
                                double t, double tol = 1e-10) {
    if (!H.hermitian()) throw ArgumentError("evolve: operator is not flagged Hermitian");
    if (psi.basis != H.basis() && psi.amp.size() != static_cast<Eigen::Index>(H.dim()))
        throw ArgumentError("evolve: vector/operator dimension mismatch");
    auto apply = [&H](const Amplitudes& x, Amplitudes& y) { H.apply(x, y); };
    PropResult r = krylov_propagate(apply, psi.amp, t, tol);
    return {fock::FockVector(psi.basis ? psi.basis : H.basis(), std::move(r.vector)),
            r.error_estimate, r.steps};
}

// exp(A_plus - A_minus) psi for an anti-Hermitian generator given as its
// raising part A_plus and lowering part A_minus = (A_plus)^dagger.
// Realized as evolve with the Hermitian generator i(A_plus - A_minus).
inline PropagationResult exp_antihermitian_apply(const fock::SparseOperator& a_plus,
                                                 const fock::SparseOperator& a_minus,
                                                 const fock::FockVector& psi,
                                                 double tol = 1e-10) {
    if (a_plus.dim() != a_minus.dim() || a_plus.dim() != static_cast<std::size_t>(psi.amp.size()))
        throw ArgumentError("exp_antihermitian_apply: dimension mismatch");
    Amplitudes tmp(psi.amp.size());
    auto apply = [&](const Amplitudes& x, Amplitudes& y) {
        a_plus.apply(x, y);
        a_minus.apply(x, tmp);
        y = cplx(0, 1) * (y - tmp);
    };
    PropResult r = krylov_propagate(apply, psi.amp, 1.0, tol);
    return {fock::FockVector(psi.basis, std::move(r.vector)), r.error_estimate, r.steps};
}

// Dense references.
inline Eigen::MatrixXcd dense_exp_hermitian_times_minus_i(const Eigen::MatrixXcd& H, double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    const auto& U = es.eigenvectors();
    Eigen::VectorXcd ph(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < ph.size(); ++i) {
        const double a = -t * es.eigenvalues()(i);
        ph(i) = cplx(std::cos(a), std::sin(a));
    }
    return U * ph.asDiagonal() * U.adjoint();
}

// exp(K) for anti-Hermitian K via the Hermitian matrix iK
inline Eigen::MatrixXcd dense_exp_antihermitian(const Eigen::MatrixXcd& K) {
    return dense_exp_hermitian_times_minus_i(cplx(0, 1) * K, 1.0);
}

} // namespace irlab::spectral

#endif
