#ifndef IRLAB_FOCK_LADDER_HPP
#define IRLAB_FOCK_LADDER_HPP

#include <cmath>
#include <string>
#include <vector>

#include "irlab/fock/basis.hpp"
#include "irlab/fock/cloud.hpp"
#include "irlab/fock/operator.hpp"

namespace irlab::fock {

// a*_i : matrix elements sqrt(n+1) on transitions raising mode i by one.
// Transitions that would exceed the occupation caps are dropped; that is
// the truncation leakage every cap-relative statement is quoted against.
inline SparseOperator creation_op(BasisPtr basis, std::size_t mode_index) {
    if (mode_index >= basis->n_modes())
        throw ArgumentError("creation_op: mode index " + std::to_string(mode_index) +
                            " out of range");
    std::vector<Triplet> t;
    for (std::size_t s = 0; s < basis->size(); ++s) {
        const std::size_t r = basis->raised_index(s, mode_index);
        if (r == FockBasis::npos) continue;
        const double n = basis->occupation(s, mode_index);
        t.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(s),
                     std::sqrt(n + 1.0)});
    }
    return SparseOperator(std::move(basis), std::move(t), false);
}

inline SparseOperator annihilation_op(BasisPtr basis, std::size_t mode_index) {
    if (mode_index >= basis->n_modes())
        throw ArgumentError("annihilation_op: mode index " + std::to_string(mode_index) +
                            " out of range");
    std::vector<Triplet> t;
    for (std::size_t s = 0; s < basis->size(); ++s) {
        const std::size_t r = basis->raised_index(s, mode_index);
        if (r == FockBasis::npos) continue;
        const double n = basis->occupation(s, mode_index);
        t.push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(r),
                     std::sqrt(n + 1.0)});
    }
    return SparseOperator(std::move(basis), std::move(t), false);
}

// Smeared pair a*(g) = sum_i sqrt(w_i) g_i a*_i and its adjoint
// a(g) = sum_i sqrt(w_i) conj(g_i) a_i. The sqrt(w) factors quantize the
// continuum smearing against canonical discrete modes, so that
// [a(g), a*(h)] = <g,h> with <g,h> = sum_i w_i conj(g_i) h_i.
struct SmearedFieldOps {
    SparseOperator create;     // a*(g)
    SparseOperator annihilate; // a(g)
};

inline SmearedFieldOps smeared_field_ops(BasisPtr basis, const CloudFunction& g) {
    if (!same_grid(basis->grid(), g.grid))
        throw ArgumentError("smeared_field_ops: cloud grid does not match basis grid");
    std::vector<Triplet> tc, ta;
    for (std::size_t s = 0; s < basis->size(); ++s) {
        for (std::size_t i = 0; i < basis->n_modes(); ++i) {
            const cplx gi = g.amplitudes[i];
            if (gi == cplx(0, 0)) continue;
            const std::size_t r = basis->raised_index(s, i);
            if (r == FockBasis::npos) continue;
            const double coeff = std::sqrt(basis->grid().modes[i].weight) *
                                 std::sqrt(basis->occupation(s, i) + 1.0);
            tc.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(s),
                          coeff * gi});
            ta.push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(r),
                          coeff * std::conj(gi)});
        }
    }
    return {SparseOperator(basis, std::move(tc), false),
            SparseOperator(basis, std::move(ta), false)};
}

inline SparseOperator free_photon_hamiltonian(BasisPtr basis) {
    std::vector<double> d(basis->size(), 0.0);
    for (std::size_t s = 0; s < basis->size(); ++s) {
        double e = 0;
        for (std::size_t i = 0; i < basis->n_modes(); ++i) {
            const int n = basis->occupation(s, i);
            if (n) e += basis->grid().modes[i].abs_k * n;
        }
        d[s] = e;
    }
    return SparseOperator::diagonal(std::move(basis), d);
}

inline std::vector<SparseOperator> photon_momentum(BasisPtr basis) {
    const int dim = basis->grid().dimension;
    std::vector<SparseOperator> out;
    for (int mu = 0; mu < dim; ++mu) {
        std::vector<double> d(basis->size(), 0.0);
        for (std::size_t s = 0; s < basis->size(); ++s) {
            double p = 0;
            for (std::size_t i = 0; i < basis->n_modes(); ++i) {
                const int n = basis->occupation(s, i);
                if (n) p += basis->grid().modes[i].momentum[mu] * n;
            }
            d[s] = p;
        }
        out.push_back(SparseOperator::diagonal(basis, d));
    }
    return out;
}

inline SparseOperator number_operator(BasisPtr basis) {
    std::vector<double> d(basis->size(), 0.0);
    for (std::size_t s = 0; s < basis->size(); ++s) d[s] = basis->total(s);
    return SparseOperator::diagonal(std::move(basis), d);
}

} // namespace irlab::fock

#endif
