#ifndef IRLAB_NRQED_DRESSING_HPP
#define IRLAB_NRQED_DRESSING_HPP

#include <string>

#include "irlab/fock/weyl.hpp"
#include "irlab/nrqed/cloud.hpp"
#include "irlab/nrqed/dispersion.hpp"
#include "irlab/nrqed/fiber.hpp"

namespace irlab::nrqed {

using fock::CloudFunction;
using fock::FockVector;
using fock::SparseOperator;
using fock::WeylOperator;

// H^w(p) = W(f_p) H(p) W(f_p)^dagger, materialized through the dense
// exponential (basis <= 4096). The hermiticity of the conjugated matrix is
// re-verified and the Weyl leakage on the ground state reported by callers.
inline SparseOperator dressed_hamiltonian_matrix(const SparseOperator& H,
                                                 const CloudFunction& f,
                                                 double hermiticity_tol = 1e-10) {
    WeylOperator W(H.basis(), f);
    W.ensure_dense();
    const Eigen::MatrixXcd Wm = W.matrix().dense();
    Eigen::MatrixXcd Hw = Wm * H.dense() * Wm.adjoint();
    const double defect = (Hw - Hw.adjoint()).cwiseAbs().maxCoeff();
    if (defect > hermiticity_tol)
        throw DiagnosticError("dressed_hamiltonian: conjugated matrix fails hermiticity (" +
                                  std::to_string(defect) + "); raise n_max/n_cap",
                              defect);
    Hw = 0.5 * (Hw + Hw.adjoint().eval()); // symmetrize roundoff
    return SparseOperator::from_dense(H.basis(), Hw, true, 0.0);
}

inline SparseOperator dressed_hamiltonian(const NelsonFiberParams& params, const Vec3& p,
                                          const Vec3& v_p, double hermiticity_tol = 1e-10) {
    const auto basis = params.build_basis();
    auto H = fiber_hamiltonian(params, basis, p);
    auto f = cloud_function(params, basis->grid(), v_p);
    return dressed_hamiltonian_matrix(H, f, hermiticity_tol);
}

// Matrix-free action of W(f) H W(f)^dagger for bases beyond the dense
// materialization limit. Each matvec costs two Krylov exponentials.
class DressedFiberOperator {
public:
    DressedFiberOperator(SparseOperator H, CloudFunction f, double exp_tol = 1e-11)
        : H_(std::move(H)), W_(H_.basis(), std::move(f)), exp_tol_(exp_tol) {}

    std::size_t dim() const { return H_.dim(); }
    const fock::BasisPtr& basis() const { return H_.basis(); }

    void apply(const fock::Amplitudes& x, fock::Amplitudes& y) const {
        FockVector v(H_.basis(), x);
        auto undressed = W_inv_apply(v);
        fock::Amplitudes Hx;
        H_.apply(undressed.amp, Hx);
        auto dressed = W_.apply(FockVector(H_.basis(), std::move(Hx)), exp_tol_);
        y = std::move(dressed.vector.amp);
    }

private:
    FockVector W_inv_apply(const FockVector& v) const {
        // W(f)^dagger = W(-f)
        fock::WeylOperator Winv(H_.basis(), W_.cloud().scaled(-1.0));
        return Winv.apply(v, exp_tol_).vector;
    }

    SparseOperator H_;
    fock::WeylOperator W_;
    double exp_tol_;
};

struct DressedGround {
    FockVector vector;      // W(f_p) applied to the undressed ground state
    double leakage = 0.0;   // Weyl boundary flux on the result
    double mean_photon_number = 0.0;
};

// Ground state of H^w(p) obtained by dressing the undressed ground state:
// unitary conjugation maps eigenvectors onto eigenvectors, so up to the
// reported leakage this IS the dressed ground state.
inline DressedGround dressed_ground_state(const fock::BasisPtr& basis, const CloudFunction& f,
                                          const FockVector& ground, double exp_tol = 1e-11) {
    WeylOperator W(basis, f);
    auto r = W.apply(ground, exp_tol);
    DressedGround out;
    out.leakage = r.leakage;
    out.mean_photon_number = fock::mean_photon_number(r.vector);
    out.vector = std::move(r.vector);
    return out;
}

} // namespace irlab::nrqed

#endif
