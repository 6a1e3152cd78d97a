#ifndef IRLAB_SPECTRAL_LANCZOS_HPP
#define IRLAB_SPECTRAL_LANCZOS_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "irlab/fock/operator.hpp"
#include "irlab/fock/state.hpp"
#include "irlab/util/errors.hpp"
#include "irlab/util/rng.hpp"

namespace irlab::spectral {

using fock::Amplitudes;
using cplx = std::complex<double>;

// Deterministic seeded start vector; identical across platforms and runs.
inline Amplitudes seeded_vector(std::size_t dim, std::uint64_t seed) {
    util::SplitMix64 rng(seed ^ 0x5eedf0cc5eedf0ccull);
    Amplitudes v(dim);
    for (std::size_t i = 0; i < dim; ++i)
        v[i] = cplx(rng.next_symmetric(), rng.next_symmetric());
    v /= v.norm();
    return v;
}

struct EigenPairResult {
    double eigenvalue = 0.0;
    Amplitudes eigenvector;
    double residual = 0.0;
    int iterations = 0;
};

namespace detail {

// One Lanczos sweep with full (two-pass) reorthogonalization.
// Returns the best Ritz pair of the sweep.
template <class Apply>
void lanczos_sweep(const Apply& apply_op, const Amplitudes& start, int m_max,
                   std::vector<Amplitudes>& V, Eigen::VectorXd& alpha, Eigen::VectorXd& beta,
                   int& m_eff) {
    const auto dim = start.size();
    V.clear();
    V.push_back(start / start.norm());
    alpha.resize(m_max);
    beta.resize(m_max);
    Amplitudes w(dim);
    m_eff = 0;
    for (int j = 0; j < m_max; ++j) {
        apply_op(V[j], w);
        cplx a = V[j].dot(w);
        w -= a * V[j];
        if (j > 0) w -= beta[j - 1] * V[j - 1];
        // full reorthogonalization, two classical Gram-Schmidt passes
        for (int pass = 0; pass < 2; ++pass)
            for (int i = 0; i <= j; ++i) {
                const cplx c = V[i].dot(w);
                w -= c * V[i];
                if (i == j) a += c;
            }
        alpha[j] = a.real();
        const double b = w.norm();
        m_eff = j + 1;
        if (b < 1e-13 || j == m_max - 1) {
            beta[j] = 0.0;
            break;
        }
        beta[j] = b;
        V.push_back(w / b);
    }
}

inline void tridiag_lowest(const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta, int m,
                           double& theta, Eigen::VectorXd& s) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(alpha.head(m), beta.head(m - 1 > 0 ? m - 1 : 0),
                              Eigen::ComputeEigenvectors);
    theta = es.eigenvalues()(0);
    s = es.eigenvectors().col(0);
}

} // namespace detail

// Lowest eigenpair of a Hermitian operator given through its action.
// Lanczos with full reorthogonalization, restarted on the best Ritz vector
// until the explicit residual |H x - theta x| meets `tol`.
template <class Apply>
EigenPairResult lowest_eigenpair_apply(const Apply& apply_op, std::size_t dim, double tol,
                                       int max_iter, std::uint64_t seed,
                                       const Amplitudes* start = nullptr) {
    if (dim == 0) throw ArgumentError("lowest_eigenpair: empty operator");
    if (dim == 1) {
        Amplitudes e1(1);
        e1[0] = 1.0;
        Amplitudes y(1);
        apply_op(e1, y);
        return {y[0].real(), e1, 0.0, 1};
    }

    Amplitudes v0 = start ? *start : seeded_vector(dim, seed);
    const int m_block = static_cast<int>(std::min<std::size_t>(dim, 140));

    std::vector<Amplitudes> V;
    Eigen::VectorXd alpha, beta;
    EigenPairResult best;
    best.residual = 1e300;
    int total = 0;

    while (total < max_iter) {
        int m_eff = 0;
        const int m_this = std::min<int>(m_block, max_iter - total);
        detail::lanczos_sweep(apply_op, v0, m_this, V, alpha, beta, m_eff);
        total += m_eff;

        double theta;
        Eigen::VectorXd s;
        detail::tridiag_lowest(alpha, beta, m_eff, theta, s);

        Amplitudes x = Amplitudes::Zero(dim);
        for (int i = 0; i < m_eff; ++i) x += s(i) * V[i];
        x /= x.norm();

        Amplitudes Hx(dim);
        apply_op(x, Hx);
        const double res = (Hx - theta * x).norm();
        if (res < best.residual) {
            best.eigenvalue = theta;
            best.eigenvector = x;
            best.residual = res;
        }
        best.iterations = total;
        if (best.residual <= tol) return best;
        // exhausted the operator's full space: nothing more a restart can add
        if (static_cast<std::size_t>(m_eff) == dim && best.residual <= 1e3 * tol) return best;
        v0 = x;
    }
    throw DiagnosticError("lowest_eigenpair: no convergence within " + std::to_string(max_iter) +
                              " iterations (best residual " +
                              std::to_string(best.residual) + ")",
                          best.residual);
}

// spec-facing wrapper on a SparseOperator
struct EigResult {
    double eigenvalue = 0.0;
    fock::FockVector eigenvector;
    double residual = 0.0;
    int iterations = 0;
};

inline EigResult lowest_eigenpair(const fock::SparseOperator& H, double tol = 1e-10,
                                  int max_iter = 8000, std::uint64_t seed = 1) {
    if (!H.hermitian())
        throw ArgumentError("lowest_eigenpair: operator is not flagged Hermitian");
    auto apply = [&H](const Amplitudes& x, Amplitudes& y) { H.apply(x, y); };
    EigenPairResult r = lowest_eigenpair_apply(apply, H.dim(), tol, max_iter, seed);
    EigResult out;
    out.eigenvalue = r.eigenvalue;
    out.eigenvector = fock::FockVector(H.basis(), std::move(r.eigenvector));
    out.residual = r.residual;
    out.iterations = r.iterations;
    return out;
}

// Dense full-spectrum reference for small problems.
inline EigenPairResult dense_lowest_eigenpair(const Eigen::MatrixXcd& H) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    EigenPairResult r;
    r.eigenvalue = es.eigenvalues()(0);
    r.eigenvector = es.eigenvectors().col(0);
    r.residual = (H * r.eigenvector - r.eigenvalue * r.eigenvector).norm();
    r.iterations = 0;
    return r;
}

} // namespace irlab::spectral

#endif
