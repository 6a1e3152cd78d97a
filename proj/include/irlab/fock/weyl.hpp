#ifndef IRLAB_FOCK_WEYL_HPP
#define IRLAB_FOCK_WEYL_HPP

#include <complex>
#include <string>

#include "irlab/fock/cloud.hpp"
#include "irlab/fock/ladder.hpp"
#include "irlab/fock/operator.hpp"
#include "irlab/fock/state.hpp"
#include "irlab/spectral/expm.hpp"
#include "irlab/spectral/lanczos.hpp"

namespace irlab::fock {

// basis size at which exp() switches from dense diagonalization to Krylov
inline constexpr std::size_t kDenseExpLimit = 4096;

struct WeylApplyResult {
    FockVector vector;
    // norm that the untruncated generator would push out of the truncated
    // space, measured on the result: the cap-boundary flux |cut a*(g) psi|.
    // All unitarity statements are relative to this number.
    double leakage = 0.0;
    double solver_error = 0.0;
    int steps = 0;
    std::string method; // "krylov" or "dense"
};

// W(g) = exp(a*(g) - a(g)). Mapped onto the truncated space by
// exponentiating the truncated generator, which is anti-Hermitian there,
// so the action is unitary up to solver tolerance; the difference from the
// untruncated Weyl operator is reported as `leakage`.
class WeylOperator {
public:
    WeylOperator(BasisPtr basis, CloudFunction g)
        : basis_(std::move(basis)), g_(std::move(g)) {
        if (!same_grid(basis_->grid(), g_.grid))
            throw ArgumentError("WeylOperator: cloud grid does not match basis grid");
        auto ops = smeared_field_ops(basis_, g_);
        a_plus_ = std::move(ops.create);
        a_minus_ = std::move(ops.annihilate);
    }

    const CloudFunction& cloud() const { return g_; }
    const BasisPtr& basis() const { return basis_; }

    WeylApplyResult apply(const FockVector& psi, double tol = 1e-12,
                          double max_leakage = -1.0) const {
        WeylApplyResult out;
        if (basis_->size() <= kDenseExpLimit && dense_cached_) {
            out.vector = FockVector(basis_, *dense_cached_ * psi.amp);
            out.method = "dense";
        } else {
            auto prop = spectral::exp_antihermitian_apply(a_plus_, a_minus_, psi, tol);
            out.vector = std::move(prop.vector);
            out.solver_error = prop.error_estimate;
            out.steps = prop.steps;
            out.method = "krylov";
        }
        out.leakage = boundary_flux(out.vector);
        if (max_leakage >= 0.0 && out.leakage > max_leakage)
            throw DiagnosticError("WeylOperator: leakage " + std::to_string(out.leakage) +
                                      " exceeds requested bound " + std::to_string(max_leakage) +
                                      "; raise n_max/n_cap",
                                  out.leakage);
        return out;
    }

    // Materialized matrix (dense exponential; basis size <= 4096 only).
    SparseOperator matrix() const {
        if (basis_->size() > kDenseExpLimit)
            throw CapacityError("WeylOperator::matrix: basis size " +
                                std::to_string(basis_->size()) +
                                " exceeds the dense-exponential limit of " +
                                std::to_string(kDenseExpLimit));
        ensure_dense();
        return SparseOperator::from_dense(basis_, *dense_cached_, false);
    }

    std::string matrix_method() const {
        return basis_->size() <= kDenseExpLimit ? "dense" : "krylov";
    }

    void ensure_dense() const {
        if (dense_cached_) return;
        Eigen::MatrixXcd K = a_plus_.dense() - a_minus_.dense();
        dense_cached_ =
            std::make_shared<Eigen::MatrixXcd>(spectral::dense_exp_antihermitian(K));
    }

    // Norm the untruncated generator would create outside the caps, acting
    // on `v`: sum over dropped raising transitions of |sqrt(w) g sqrt(n+1)|^2.
    double boundary_flux(const FockVector& v) const {
        double s = 0;
        const auto& grid = basis_->grid();
        for (std::size_t st = 0; st < basis_->size(); ++st) {
            const double p = std::norm(v.amp[st]);
            if (p < 1e-300) continue;
            for (std::size_t i = 0; i < basis_->n_modes(); ++i) {
                if (g_.amplitudes[i] == cplx(0, 0)) continue;
                const bool dropped = basis_->total(st) + 1 > basis_->n_max() ||
                                     basis_->occupation(st, i) + 1 > basis_->n_cap();
                if (dropped)
                    s += p * grid.modes[i].weight * std::norm(g_.amplitudes[i]) *
                         (basis_->occupation(st, i) + 1.0);
            }
        }
        return std::sqrt(s);
    }

private:
    BasisPtr basis_;
    CloudFunction g_;
    SparseOperator a_plus_, a_minus_;
    mutable std::shared_ptr<Eigen::MatrixXcd> dense_cached_;
};

inline WeylOperator weyl_operator(BasisPtr basis, CloudFunction g) {
    return WeylOperator(std::move(basis), std::move(g));
}

// Convenience: W(g) applied to a vector, Krylov path.
inline WeylApplyResult weyl_apply(const BasisPtr& basis, const CloudFunction& g,
                                  const FockVector& psi, double tol = 1e-12) {
    return WeylOperator(basis, g).apply(psi, tol);
}

// Exact Weyl composition phase for canonical displacements:
// W(g) W(h) = exp(i theta) W(g+h) with theta = Im sum_i w_i g_i conj(h_i).
inline double cocycle_phase_exact(const CloudFunction& g, const CloudFunction& h) {
    if (!same_grid(g.grid, h.grid)) throw ArgumentError("cocycle_phase_exact: grids differ");
    double s = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        s += g.grid.modes[i].weight * std::imag(g.amplitudes[i] * std::conj(h.amplitudes[i]));
    return s;
}

struct CocycleCheck {
    double phase = 0.0;  // arg minimizing |W(g)W(h) - e^{i theta} W(g+h)| on the probe
    double defect = 0.0; // worst column error of the minimized difference
};

// Measures the Weyl relation on the truncated space. The comparison runs
// on probe states with total occupation <= n_max/3: near the caps the
// truncated generators cannot satisfy the algebra at all, so including
// cap states would report the caps, not the relation. On the probe the
// defect vanishes as the caps grow. Dense route (basis <= 4096); the
// Frobenius-optimal phase on the probe block is arg tr(S^dagger M).
inline CocycleCheck weyl_cocycle_check(const BasisPtr& basis, const CloudFunction& g,
                                       const CloudFunction& h) {
    if (basis->size() > kDenseExpLimit)
        throw CapacityError("weyl_cocycle_check: needs the dense route (basis <= " +
                            std::to_string(kDenseExpLimit) + ")");
    WeylOperator Wg(basis, g), Wh(basis, h), Wgh(basis, g + h);
    Wg.ensure_dense();
    Wh.ensure_dense();
    Wgh.ensure_dense();
    const Eigen::MatrixXcd M = Wg.matrix().dense() * Wh.matrix().dense();
    const Eigen::MatrixXcd S = Wgh.matrix().dense();

    const int probe_total = basis->n_max() / 3;
    cplx tr = 0;
    std::vector<std::size_t> probe;
    for (std::size_t s = 0; s < basis->size(); ++s)
        if (basis->total(s) <= probe_total) {
            probe.push_back(s);
            tr += S.col(s).dot(M.col(s));
        }
    CocycleCheck out;
    out.phase = std::abs(tr) > 0 ? std::arg(tr) : 0.0;
    const cplx ph(std::cos(out.phase), std::sin(out.phase));
    for (std::size_t s : probe)
        out.defect = std::max(out.defect, (M.col(s) - ph * S.col(s)).norm());
    return out;
}

} // namespace irlab::fock

#endif
