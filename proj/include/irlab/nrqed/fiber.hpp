#ifndef IRLAB_NRQED_FIBER_HPP
#define IRLAB_NRQED_FIBER_HPP

#include <cmath>
#include <vector>

#include "irlab/fock/basis.hpp"
#include "irlab/fock/ladder.hpp"
#include "irlab/fock/operator.hpp"
#include "irlab/nrqed/model.hpp"

namespace irlab::nrqed {

using fock::BasisPtr;
using fock::SparseOperator;
using fock::Triplet;

namespace detail {

inline Vec3 state_photon_momentum(const fock::FockBasis& b, std::size_t s) {
    Vec3 K{0, 0, 0};
    for (std::size_t i = 0; i < b.n_modes(); ++i) {
        const int n = b.occupation(s, i);
        if (!n) continue;
        const auto& m = b.grid().modes[i];
        K[0] += n * m.momentum[0];
        K[1] += n * m.momentum[1];
        K[2] += n * m.momentum[2];
    }
    return K;
}

} // namespace detail

// Fiber Hamiltonian at total momentum p on the truncated Fock space:
//   H(p) = (p - P_ph)^2/(2m) + H_ph + interaction.
// Scalar variant:      e * sum_i sqrt(w_i) c_i (a_i + a*_i),
// transversal variant: -(e/2m) sum_mu {(p-P_ph)_mu, A_mu} and optionally
//                      +(e^2/2m) A.A,
// with c_i = rho(|k_i|)/sqrt(2|k_i|) and A_mu the transversal field.
inline SparseOperator fiber_hamiltonian(const NelsonFiberParams& params, const BasisPtr& basis,
                                        const Vec3& p) {
    const auto& b = *basis;
    const auto& grid = b.grid();
    const double m = params.mass;
    const double e = params.coupling;
    std::vector<Triplet> trip;

    // diagonal part: kinetic + free photons
    for (std::size_t s = 0; s < b.size(); ++s) {
        const Vec3 K = detail::state_photon_momentum(b, s);
        const Vec3 q{p[0] - K[0], p[1] - K[1], p[2] - K[2]};
        double diag = fock::dot3(q, q) / (2.0 * m);
        for (std::size_t i = 0; i < b.n_modes(); ++i) {
            const int n = b.occupation(s, i);
            if (n) diag += n * grid.modes[i].abs_k;
        }
        if (diag != 0.0)
            trip.push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s), diag});
    }

    if (e != 0.0) {
        if (params.variant == Variant::scalar) {
            for (std::size_t s = 0; s < b.size(); ++s)
                for (std::size_t i = 0; i < b.n_modes(); ++i) {
                    const std::size_t r = b.raised_index(s, i);
                    if (r == fock::FockBasis::npos) continue;
                    const auto& md = grid.modes[i];
                    const double v = e * std::sqrt(md.weight) *
                                     params.coupling_density(md.abs_k) *
                                     std::sqrt(b.occupation(s, i) + 1.0);
                    trip.push_back({static_cast<std::uint32_t>(r),
                                    static_cast<std::uint32_t>(s), v});
                    trip.push_back({static_cast<std::uint32_t>(s),
                                    static_cast<std::uint32_t>(r), v});
                }
        } else {
            // -(e/2m) [(p-P)_mu A_mu + A_mu (p-P)_mu]: with D diagonal the
            // raising element s->r carries D_mu(r) + D_mu(s).
            std::vector<Vec3> Dcache(b.size());
            for (std::size_t s = 0; s < b.size(); ++s) {
                const Vec3 K = detail::state_photon_momentum(b, s);
                Dcache[s] = {p[0] - K[0], p[1] - K[1], p[2] - K[2]};
            }
            for (std::size_t s = 0; s < b.size(); ++s)
                for (std::size_t i = 0; i < b.n_modes(); ++i) {
                    const std::size_t r = b.raised_index(s, i);
                    if (r == fock::FockBasis::npos) continue;
                    const auto& md = grid.modes[i];
                    const double base = std::sqrt(md.weight) *
                                        params.coupling_density(md.abs_k) *
                                        std::sqrt(b.occupation(s, i) + 1.0);
                    const double dsum = fock::dot3(md.epsilon, Dcache[r]) +
                                        fock::dot3(md.epsilon, Dcache[s]);
                    const double v = -(e / (2.0 * m)) * base * dsum;
                    if (v == 0.0) continue;
                    trip.push_back({static_cast<std::uint32_t>(r),
                                    static_cast<std::uint32_t>(s), v});
                    trip.push_back({static_cast<std::uint32_t>(s),
                                    static_cast<std::uint32_t>(r), v});
                }
        }
    }

    SparseOperator H(basis, std::move(trip), true);

    if (e != 0.0 && params.variant == Variant::transversal && params.include_a_squared) {
        // (e^2/2m) A.A as an explicit operator product
        for (int mu = 0; mu < 3; ++mu) {
            std::vector<Triplet> ta;
            for (std::size_t s = 0; s < b.size(); ++s)
                for (std::size_t i = 0; i < b.n_modes(); ++i) {
                    const std::size_t r = b.raised_index(s, i);
                    if (r == fock::FockBasis::npos) continue;
                    const auto& md = grid.modes[i];
                    const double v = std::sqrt(md.weight) * params.coupling_density(md.abs_k) *
                                     md.epsilon[mu] * std::sqrt(b.occupation(s, i) + 1.0);
                    if (v == 0.0) continue;
                    ta.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(s),
                                  v});
                    ta.push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(r),
                                  v});
                }
            SparseOperator Amu(basis, std::move(ta), true);
            auto A2 = SparseOperator::product(Amu, Amu).scaled(e * e / (2.0 * m));
            A2.set_hermitian(true);
            H = SparseOperator::sum(H, A2);
        }
    }
    return H;
}

inline SparseOperator fiber_hamiltonian(const NelsonFiberParams& params, const Vec3& p) {
    return fiber_hamiltonian(params, params.build_basis(), p);
}

} // namespace irlab::nrqed

#endif
