#ifndef IRLAB_NRQED_ASYMPTOTIC_HPP
#define IRLAB_NRQED_ASYMPTOTIC_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "irlab/nrqed/dressing.hpp"
#include "irlab/spectral/expm.hpp"

namespace irlab::nrqed {

using fock::cplx;

// The phases the construction leaves unspecified. They enter the
// approximating vectors only as unit-modulus factors, and every Cauchy
// diagnostic below runs in the phase-quotient metric, so any assignment
// gives the same distances. Zero is the shipped convention.
struct DollardPhases {
    double C_p = 0.0;
    double gamma1 = 0.0; // gamma'_t(p)
    double gamma2 = 0.0; // gamma''_t(p)
    double gamma = 0.0;  // gamma_t(p)

    cplx factor(double t) const {
        const double ph = -C_p * t + gamma1 + gamma2 + gamma;
        return {std::cos(ph), std::sin(ph)};
    }
};

// Shared state for a time ladder at one fiber momentum and one grid.
struct FiberContext {
    NelsonFiberParams params;
    Vec3 p{0, 0, 0};
    fock::BasisPtr basis;
    fock::SparseOperator H;
    double energy = 0.0;
    double residual = 0.0;
    fock::FockVector ground;         // ground state of H(p) at this cutoff
    Vec3 v_p{0, 0, 0};
    fock::CloudFunction f_p;
    fock::FockVector dressed_ground; // ground state of W f H W f^dagger
    double dressing_leakage = 0.0;
    DollardPhases phases;
};

struct FiberContextOptions {
    double eig_tol = 1e-10;
    double exp_tol = 1e-10;
    std::uint64_t seed = 1;
    bool have_velocity = false;
    Vec3 velocity{0, 0, 0};
};

inline FiberContext make_fiber_context(const NelsonFiberParams& params, const Vec3& p,
                                       FiberContextOptions opt = {}) {
    FiberContext ctx;
    ctx.params = params;
    ctx.p = p;
    ctx.basis = params.build_basis();
    ctx.H = fiber_hamiltonian(params, ctx.basis, p);
    auto eig = spectral::lowest_eigenpair(ctx.H, opt.eig_tol, 20000, opt.seed);
    ctx.energy = eig.eigenvalue;
    ctx.residual = eig.residual;
    ctx.ground = std::move(eig.eigenvector);
    ctx.v_p = opt.have_velocity ? opt.velocity
                                : dispersion_point(params, p, opt.eig_tol, opt.seed).velocity;
    ctx.f_p = cloud_function(params, ctx.basis->grid(), ctx.v_p);
    auto dressed = dressed_ground_state(ctx.basis, ctx.f_p, ctx.ground, opt.exp_tol);
    ctx.dressed_ground = std::move(dressed.vector);
    ctx.dressing_leakage = dressed.leakage;
    return ctx;
}

// psi_t = e^{i t H(p)} W(e^{-i|k|t} f_p) e^{-i t E} phi_p  (cutoff ground
// state phi_p). The curly-bracket structure is the approximant of the
// asymptotic Weyl operator: the cloud is launched in the free photon
// dynamics and pulled back through the interacting one.
inline fock::FockVector cfp_fiber_vector(const FiberContext& ctx, double t,
                                         double exp_tol = 1e-10) {
    auto cloud_t = ctx.f_p.free_evolved(t);
    auto w = fock::weyl_apply(ctx.basis, cloud_t, ctx.ground, exp_tol);
    auto prop = spectral::evolve(ctx.H, w.vector, -t, exp_tol); // e^{+itH}
    const double ph = -t * ctx.energy;
    fock::FockVector out = std::move(prop.vector);
    out.amp *= cplx(std::cos(ph), std::sin(ph)) * ctx.phases.factor(t);
    return out;
}

// phi_t = e^{i t H(p)} W((e^{-i|k|t} - 1) f_p) e^{-i t E} Phi_p with Phi_p
// the dressed ground state. The cloud prefactor is O(|k|t), so this vector
// needs no infrared regularization beyond the grid itself.
inline fock::FockVector bdg_fiber_vector(const FiberContext& ctx, double t,
                                         double exp_tol = 1e-10) {
    auto cloud = ctx.f_p.free_evolved(t) + (-ctx.f_p);
    auto w = fock::weyl_apply(ctx.basis, cloud, ctx.dressed_ground, exp_tol);
    auto prop = spectral::evolve(ctx.H, w.vector, -t, exp_tol);
    const double ph = -t * ctx.energy;
    fock::FockVector out = std::move(prop.vector);
    out.amp *= cplx(std::cos(ph), std::sin(ph)) * ctx.phases.factor(t);
    return out;
}

// Spec-level one-shot forms: build the context at cutoff lambda and
// evaluate a single time.
inline fock::FockVector cfp_fiber_vector(const NelsonFiberParams& params, const Vec3& p,
                                         double t, double lambda,
                                         FiberContextOptions opt = {}) {
    NelsonFiberParams pl = params;
    pl.grid.lambda = lambda;
    return cfp_fiber_vector(make_fiber_context(pl, p, opt), t, opt.exp_tol);
}

inline fock::FockVector bdg_fiber_vector(const NelsonFiberParams& params, const Vec3& p,
                                         double t, FiberContextOptions opt = {}) {
    return bdg_fiber_vector(make_fiber_context(params, p, opt), t, opt.exp_tol);
}

// Pairwise phase-quotient residuals over a time ladder.
struct LadderDiagnostics {
    std::vector<double> times;
    std::vector<std::vector<double>> dist; // dist[i][j] between psi_{t_i}, psi_{t_j}
    std::vector<double> to_next;           // d(psi_{t_k}, psi_{t_{k+1}})
    std::vector<double> to_last;           // d(psi_{t_k}, psi_{t_K})
};

template <class VectorAt>
LadderDiagnostics ladder_diagnostics(const std::vector<double>& times, const VectorAt& at) {
    LadderDiagnostics d;
    d.times = times;
    std::vector<fock::FockVector> vs;
    vs.reserve(times.size());
    for (double t : times) vs.push_back(at(t));
    const std::size_t n = vs.size();
    d.dist.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            d.dist[i][j] = d.dist[j][i] = fock::phase_quotient_distance(vs[i], vs[j]);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        d.to_next.push_back(d.dist[k][k + 1]);
        d.to_last.push_back(d.dist[k][n - 1]);
    }
    return d;
}

} // namespace irlab::nrqed

#endif
