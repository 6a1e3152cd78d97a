#ifndef IRLAB_TESTS_ORACLES_HPP
#define IRLAB_TESTS_ORACLES_HPP

// Independent oracles used by the unit and acceptance suites. These never
// call the implementation paths they are checked against.

#include <cmath>
#include <vector>

#include "irlab/nrqed/model.hpp"

namespace test_oracles {

using irlab::fock::Vec3;
using irlab::fock::dot3;
using irlab::nrqed::NelsonFiberParams;
using irlab::nrqed::Variant;

// Second-order Rayleigh-Schrodinger energy of the fiber ground state:
// E(p) ~ p^2/2m - e^2 sum_modes |<1_mode|V|0>/e|^2 / (E_mode(p) - p^2/2m),
// summed directly over the grid modes.
inline double rs2_energy(const NelsonFiberParams& params, const irlab::fock::ModeGrid& grid,
                         const Vec3& p) {
    const double m = params.mass;
    const double e = params.coupling;
    const double e_free = dot3(p, p) / (2.0 * m);
    double shift = 0.0;
    for (const auto& mode : grid.modes) {
        const double c = params.coupling_density(mode.abs_k);
        const Vec3 q{p[0] - mode.momentum[0], p[1] - mode.momentum[1], p[2] - mode.momentum[2]};
        const double denom = dot3(q, q) / (2.0 * m) + mode.abs_k - e_free;
        double matel; // <1_mode| V |0> without the factor e
        if (params.variant == Variant::scalar) {
            matel = std::sqrt(mode.weight) * c;
        } else {
            // -(1/2m) sqrt(w) c [(p-k) + p].eps = -(1/m) sqrt(w) c p.eps
            matel = -(1.0 / m) * std::sqrt(mode.weight) * c * dot3(p, mode.epsilon);
        }
        shift += matel * matel / denom;
    }
    return e_free - e * e * shift;
}

// Dressing-cloud norm on a radial shell by direct quadrature at an
// independent (much finer) radial resolution. Angular part uses the same
// direction set as the implementation grid; the radial refinement is what
// the log-divergence statement is about.
inline double cloud_shell_norm_refined(const NelsonFiberParams& params, const Vec3& v_p,
                                       double lo, double hi, int refine_points_per_decade) {
    const auto dirs = irlab::fock::direction_set(params.grid.dimension, params.grid.directions);
    const double h = std::log(10.0) / refine_points_per_decade;
    const int n_r = static_cast<int>(std::ceil(std::log(hi / lo) / h));
    double total = 0.0;
    for (int j = 0; j < n_r; ++j) {
        const double r = hi * std::exp(-(j + 0.5) * std::log(hi / lo) / n_r);
        const double radial_w = (params.grid.dimension == 3)
                                    ? r * r * r * std::log(hi / lo) / n_r
                                    : r * std::log(hi / lo) / n_r;
        const double rad = params.profile(r) / (std::sqrt(2.0) * std::pow(r, 1.5));
        for (const auto& d : dirs) {
            const double denom = 1.0 - dot3(d.khat, v_p);
            double amp2;
            if (params.variant == Variant::transversal) {
                // sum over the two polarizations of (eps.v)^2 = |P_tr v|^2
                const double kv = dot3(d.khat, v_p);
                amp2 = (dot3(v_p, v_p) - kv * kv) * rad * rad / (denom * denom);
            } else {
                amp2 = rad * rad / (denom * denom);
            }
            total += radial_w * d.weight * params.coupling * params.coupling * amp2;
        }
    }
    return total;
}

} // namespace test_oracles

#endif
