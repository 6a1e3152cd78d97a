#ifndef IRLAB_NRQED_SCAN_HPP
#define IRLAB_NRQED_SCAN_HPP

#include <string>
#include <vector>

#include "irlab/nrqed/dressing.hpp"

namespace irlab::nrqed {

struct IrScanRow {
    double lambda_requested = 0.0;
    double lambda = 0.0; // actual grid edge (nodes are lattice-aligned)
    double energy = 0.0;
    double mean_photon_number = 0.0;
    double vacuum_overlap = 0.0; // |<vacuum, ground>|^2
    double dressed_mean_photon_number = 0.0;
    double residual = 0.0;
    double weyl_leakage = 0.0;
    bool ok = false;
    std::string error;
};

struct IrScanOptions {
    double eig_tol = 1e-9;
    std::uint64_t seed = 1;
    double exp_tol = 1e-9;
    // v_p for the dressing cloud; empty -> measured once on the first
    // schedule grid by Richardson finite differences.
    bool have_velocity = false;
    Vec3 velocity{0, 0, 0};
};

// Infrared-cutoff scan of the fiber ground state at fixed p. Grids are
// rebuilt per lambda with a fixed number of radial points per decade and
// lattice-aligned nodes, so successive rows share every UV node. The
// dressing velocity v_p is fixed across the scan (it is a property of the
// model at p, not of the cutoff).
inline std::vector<IrScanRow> ir_scan(const NelsonFiberParams& params, const Vec3& p,
                                      const std::vector<double>& lambda_schedule,
                                      IrScanOptions opt = {}) {
    std::vector<IrScanRow> rows;
    Vec3 v_p = opt.velocity;
    bool have_v = opt.have_velocity;

    for (const double lam : lambda_schedule) {
        IrScanRow row;
        row.lambda_requested = lam;
        try {
            NelsonFiberParams pl = params;
            pl.grid.lambda = lam;
            if (!have_v) {
                v_p = dispersion_point(pl, p, opt.eig_tol, opt.seed).velocity;
                have_v = true;
            }
            const auto basis = pl.build_basis();
            row.lambda = basis->grid().ir_cutoff;
            auto H = fiber_hamiltonian(pl, basis, p);
            auto eig = spectral::lowest_eigenpair(H, opt.eig_tol, 20000, opt.seed);
            row.energy = eig.eigenvalue;
            row.residual = eig.residual;
            row.mean_photon_number = fock::mean_photon_number(eig.eigenvector);
            row.vacuum_overlap = fock::vacuum_overlap_sq(eig.eigenvector);
            auto f = cloud_function(pl, basis->grid(), v_p);
            auto dressed = dressed_ground_state(basis, f, eig.eigenvector, opt.exp_tol);
            row.dressed_mean_photon_number = dressed.mean_photon_number;
            row.weyl_leakage = dressed.leakage;
            row.ok = true;
        } catch (const std::exception& e) {
            row.ok = false;
            row.error = e.what();
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace irlab::nrqed

#endif
