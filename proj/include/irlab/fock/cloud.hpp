#ifndef IRLAB_FOCK_CLOUD_HPP
#define IRLAB_FOCK_CLOUD_HPP

#include <complex>
#include <vector>

#include "irlab/fock/grid.hpp"
#include "irlab/util/errors.hpp"

namespace irlab::fock {

using cplx = std::complex<double>;

// One-photon amplitude g(k_i) per grid mode, together with the grid's
// quadrature weights. Norms are always measure-weighted:
//   |g|^2 = sum_i w_i |g(k_i)|^2.
struct CloudFunction {
    ModeGrid grid;
    std::vector<cplx> amplitudes;

    CloudFunction() = default;
    explicit CloudFunction(ModeGrid g)
        : grid(std::move(g)), amplitudes(grid.size(), cplx(0, 0)) {}
    CloudFunction(ModeGrid g, std::vector<cplx> a) : grid(std::move(g)), amplitudes(std::move(a)) {
        if (amplitudes.size() != grid.size())
            throw ArgumentError("CloudFunction: amplitude count does not match grid");
    }

    std::size_t size() const { return grid.size(); }

    double norm_sq() const {
        double s = 0;
        for (std::size_t i = 0; i < size(); ++i)
            s += grid.modes[i].weight * std::norm(amplitudes[i]);
        return s;
    }

    // norm restricted to the radial sub-shell lo <= |k| <= hi
    double shell_norm_sq(double lo, double hi) const {
        double s = 0;
        for (std::size_t i = 0; i < size(); ++i) {
            const double r = grid.modes[i].abs_k;
            if (r >= lo && r <= hi) s += grid.modes[i].weight * std::norm(amplitudes[i]);
        }
        return s;
    }

    // <g,h> = sum_i w_i conj(g_i) h_i
    cplx inner(const CloudFunction& other) const {
        if (!same_grid(grid, other.grid))
            throw ArgumentError("CloudFunction::inner: grids differ");
        cplx s = 0;
        for (std::size_t i = 0; i < size(); ++i)
            s += grid.modes[i].weight * std::conj(amplitudes[i]) * other.amplitudes[i];
        return s;
    }

    CloudFunction operator+(const CloudFunction& other) const {
        if (!same_grid(grid, other.grid)) throw ArgumentError("CloudFunction: grids differ");
        CloudFunction out(grid);
        for (std::size_t i = 0; i < size(); ++i)
            out.amplitudes[i] = amplitudes[i] + other.amplitudes[i];
        return out;
    }

    CloudFunction operator-() const {
        CloudFunction out(grid);
        for (std::size_t i = 0; i < size(); ++i) out.amplitudes[i] = -amplitudes[i];
        return out;
    }

    CloudFunction scaled(cplx factor) const {
        CloudFunction out(grid);
        for (std::size_t i = 0; i < size(); ++i) out.amplitudes[i] = factor * amplitudes[i];
        return out;
    }

    // pointwise multiply by exp(-i |k| t); the free photon evolution
    CloudFunction free_evolved(double t) const {
        CloudFunction out(grid);
        for (std::size_t i = 0; i < size(); ++i) {
            const double ph = -grid.modes[i].abs_k * t;
            out.amplitudes[i] = amplitudes[i] * cplx(std::cos(ph), std::sin(ph));
        }
        return out;
    }
};

} // namespace irlab::fock

#endif
