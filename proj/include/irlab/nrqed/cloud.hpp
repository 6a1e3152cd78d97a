#ifndef IRLAB_NRQED_CLOUD_HPP
#define IRLAB_NRQED_CLOUD_HPP

#include <cmath>

#include "irlab/fock/cloud.hpp"
#include "irlab/nrqed/model.hpp"

namespace irlab::nrqed {

using fock::CloudFunction;

// Dressing cloud f_p on the given grid, for a particle of group velocity
// v_p. Transversal variant:
//   f_p(k,sigma) = -e rho(|k|)/(sqrt(2)|k|^{3/2}) (eps_sigma . v_p)/(1 - khat.v_p),
// the component form of the projected cloud P_tr(khat) v_p. The scalar
// variant keeps the radial factor and replaces the projected numerator by 1,
// with the overall sign chosen so that conjugation by W(f_p) cancels the
// leading soft cloud of the scalar interaction +e c(k)(a + a*):
//   f_p(k) = +e rho(|k|)/(sqrt(2)|k|^{3/2}) / (1 - khat.v_p).
inline CloudFunction cloud_function(const NelsonFiberParams& params, const fock::ModeGrid& grid,
                                    const Vec3& v_p) {
    const double v = fock::norm3(v_p);
    if (v >= 1.0)
        throw DomainError("cloud_function: |v_p| = " + std::to_string(v) +
                          " >= 1 (denominator 1 - khat.v_p can vanish)");
    CloudFunction f(grid);
    const double e = params.coupling;
    if (e == 0.0) return f;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& m = grid.modes[i];
        const double r = m.abs_k;
        const Vec3 khat{m.momentum[0] / r, m.momentum[1] / r, m.momentum[2] / r};
        const double denom = 1.0 - fock::dot3(khat, v_p);
        const double radial = params.profile(r) / (std::sqrt(2.0) * std::pow(r, 1.5));
        if (params.variant == Variant::transversal) {
            f.amplitudes[i] = -e * radial * fock::dot3(m.epsilon, v_p) / denom;
        } else {
            f.amplitudes[i] = e * radial / denom;
        }
    }
    return f;
}

inline CloudFunction cloud_function(const NelsonFiberParams& params, const Vec3& v_p) {
    return cloud_function(params, params.build_grid(), v_p);
}

// |f_p|^2 restricted to lo <= |k| <= hi, by direct quadrature.
inline double cloud_shell_norm_sq(const NelsonFiberParams& params, const fock::ModeGrid& grid,
                                  const Vec3& v_p, double lo, double hi) {
    return cloud_function(params, grid, v_p).shell_norm_sq(lo, hi);
}

// |(e^{-i|k|t} - 1) f_p|^2: the cloud entering the regularization-free
// approximating vector. The prefactor is O(|k|t), so this stays bounded
// as the grid's infrared cutoff decreases.
inline double bdg_cloud_norm_sq(const CloudFunction& f_p, double t) {
    double s = 0;
    for (std::size_t i = 0; i < f_p.size(); ++i) {
        const double phase = f_p.grid.modes[i].abs_k * t;
        // |e^{-i phase} - 1|^2 = 4 sin^2(phase/2)
        const double pre = 4.0 * std::pow(std::sin(0.5 * phase), 2);
        s += f_p.grid.modes[i].weight * pre * std::norm(f_p.amplitudes[i]);
    }
    return s;
}

} // namespace irlab::nrqed

#endif
