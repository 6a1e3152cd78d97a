#ifndef IRLAB_NRQED_MODEL_HPP
#define IRLAB_NRQED_MODEL_HPP

#include <cmath>
#include <string>

#include "irlab/fock/basis.hpp"
#include "irlab/fock/grid.hpp"
#include "irlab/util/errors.hpp"

namespace irlab::nrqed {

using fock::Vec3;

// Smooth form factor rho(|k|) = amplitude * (|k|/k0)^ir_power * exp(-k^2/2k0^2).
// ir_power = 0 keeps rho(0) != 0: the massive particle carries net charge
// (an electron). ir_power >= 1 makes rho(0) = 0: an atom.
struct ChargeProfile {
    std::string name = "gaussian";
    double amplitude = 1.0;
    double k0 = 0.5;
    int ir_power = 0;

    double operator()(double k) const {
        double v = amplitude * std::exp(-0.5 * k * k / (k0 * k0));
        for (int s = 0; s < ir_power; ++s) v *= k / k0;
        return v;
    }
    bool is_atom() const { return ir_power >= 1; }
};

inline ChargeProfile make_profile(const std::string& name, double amplitude = 1.0,
                                  double k0 = 0.5) {
    ChargeProfile p;
    p.name = name;
    p.amplitude = amplitude;
    p.k0 = k0;
    if (name == "gaussian") {
        p.ir_power = 0;
    } else if (name == "atom") {
        p.ir_power = 1;
    } else {
        throw ArgumentError("make_profile: unknown profile '" + name +
                            "' (expected gaussian|atom)");
    }
    return p;
}

enum class Variant { scalar, transversal };

inline Variant parse_variant(const std::string& s) {
    if (s == "scalar") return Variant::scalar;
    if (s == "transversal") return Variant::transversal;
    throw ArgumentError("unknown variant '" + s + "' (expected scalar|transversal)");
}

struct GridSpec {
    int dimension = 3;
    double lambda = 1e-2;
    double uv = 1.0;
    int points_per_decade = 4;
    int directions = 6;
};

// Everything defining the fiber model H(p).
struct NelsonFiberParams {
    double mass = 1.0;
    double coupling = 0.1; // e
    ChargeProfile profile;
    Variant variant = Variant::scalar;
    GridSpec grid;
    int n_max = 3;
    int n_cap = 3;
    bool include_a_squared = false; // transversal variant only
    std::size_t basis_limit = 2'000'000;

    fock::ModeGrid build_grid() const { return build_grid_at(grid.lambda); }

    fock::ModeGrid build_grid_at(double lambda) const {
        return fock::build_mode_grid(grid.dimension, lambda, grid.uv, grid.points_per_decade,
                                     grid.directions, variant == Variant::transversal);
    }

    fock::BasisPtr build_basis() const { return build_basis_at(grid.lambda); }

    fock::BasisPtr build_basis_at(double lambda) const {
        return fock::make_basis(build_grid_at(lambda), n_max, n_cap, basis_limit);
    }

    // rho(|k|)/sqrt(2|k|): the radial coupling density of the interaction
    double coupling_density(double k) const { return profile(k) / std::sqrt(2.0 * k); }
};

} // namespace irlab::nrqed

#endif
