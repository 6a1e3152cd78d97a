#ifndef IRLAB_TESTS_HELPERS_HPP
#define IRLAB_TESTS_HELPERS_HPP

#include <complex>
#include <vector>

#include "irlab/fock/basis.hpp"
#include "irlab/fock/cloud.hpp"
#include "irlab/fock/grid.hpp"

namespace test_helpers {

using irlab::fock::CloudFunction;
using irlab::fock::Mode;
using irlab::fock::ModeGrid;
using cplx = std::complex<double>;

// Hand-assembled grid for algebra tests where the physical layout is
// irrelevant: |k| values and weights chosen directly.
inline ModeGrid toy_grid(const std::vector<double>& abs_k,
                         const std::vector<double>& weights) {
    ModeGrid g;
    g.dimension = 1;
    g.ir_cutoff = abs_k.empty() ? 0.0 : abs_k.front();
    g.uv_cutoff = abs_k.empty() ? 0.0 : abs_k.back();
    for (std::size_t i = 0; i < abs_k.size(); ++i) {
        Mode m;
        m.index = static_cast<int>(i);
        m.momentum = {abs_k[i], 0, 0};
        m.abs_k = abs_k[i];
        m.weight = weights[i];
        g.modes.push_back(m);
        g.ir_cutoff = std::min(g.ir_cutoff, abs_k[i]);
        g.uv_cutoff = std::max(g.uv_cutoff, abs_k[i]);
    }
    return g;
}

inline ModeGrid toy_grid_n(std::size_t n, double k0 = 0.5, double dk = 0.25,
                           double w = 1.0) {
    std::vector<double> ks, ws;
    for (std::size_t i = 0; i < n; ++i) {
        ks.push_back(k0 + dk * i);
        ws.push_back(w);
    }
    return toy_grid(ks, ws);
}

inline CloudFunction cloud_of(const ModeGrid& g, const std::vector<cplx>& amps) {
    return CloudFunction(g, amps);
}

} // namespace test_helpers

#endif
