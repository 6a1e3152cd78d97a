#ifndef IRLAB_FOCK_GRID_HPP
#define IRLAB_FOCK_GRID_HPP

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "irlab/util/errors.hpp"

namespace irlab::fock {

using Vec3 = std::array<double, 3>;

inline double dot3(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double norm3(const Vec3& a) { return std::sqrt(dot3(a, a)); }

// One discretized photon mode: a momentum cell of volume `weight` around
// `momentum`, optionally carrying a transversal polarization label.
struct Mode {
    int index = 0;
    Vec3 momentum{0, 0, 0};
    double abs_k = 0.0;
    // 0 = scalar mode (no polarization); 1 or 2 = transversal label
    int polarization = 0;
    // unit polarization vector (transversal modes only)
    Vec3 epsilon{0, 0, 0};
    double weight = 0.0;
};

// Deterministic orthonormal pair completing khat. Uses the axis least
// aligned with khat, lowest axis index on ties, so the frame never jumps
// between neighbouring directions of the shipped direction sets.
inline void transversal_frame(const Vec3& khat, Vec3& e1, Vec3& e2) {
    int best = 0;
    double best_abs = 2.0;
    for (int a = 0; a < 3; ++a) {
        const double c = std::abs(khat[a]);
        if (c < best_abs - 1e-15) {
            best_abs = c;
            best = a;
        }
    }
    Vec3 axis{0, 0, 0};
    axis[best] = 1.0;
    const double proj = dot3(axis, khat);
    e1 = {axis[0] - proj * khat[0], axis[1] - proj * khat[1], axis[2] - proj * khat[2]};
    const double n = norm3(e1);
    e1 = {e1[0] / n, e1[1] / n, e1[2] / n};
    e2 = {khat[1] * e1[2] - khat[2] * e1[1], khat[2] * e1[0] - khat[0] * e1[2],
          khat[0] * e1[1] - khat[1] * e1[0]};
}

struct Direction {
    Vec3 khat;
    double weight; // angular weight; sums to 4*pi (d=3) or 2 (d=1)
};

// Deterministic unit-direction sets. 6 = octahedron vertices; 8 = cube
// vertices; 14 = their Lebedev-weighted union (exact through degree 5).
inline std::vector<Direction> direction_set(int dimension, int count) {
    std::vector<Direction> dirs;
    if (dimension == 1) {
        if (count != 2) throw ArgumentError("direction_set: d=1 supports exactly 2 directions");
        dirs.push_back({{1, 0, 0}, 1.0});
        dirs.push_back({{-1, 0, 0}, 1.0});
        return dirs;
    }
    if (dimension != 3) throw ArgumentError("direction_set: dimension must be 1 or 3");
    const double fourpi = 4.0 * M_PI;
    auto add_octahedron = [&](double w) {
        for (int a = 0; a < 3; ++a)
            for (int s = 0; s < 2; ++s) {
                Vec3 k{0, 0, 0};
                k[a] = s ? -1.0 : 1.0;
                dirs.push_back({k, w});
            }
    };
    auto add_cube = [&](double w) {
        const double c = 1.0 / std::sqrt(3.0);
        for (int sx = 0; sx < 2; ++sx)
            for (int sy = 0; sy < 2; ++sy)
                for (int sz = 0; sz < 2; ++sz)
                    dirs.push_back({{sx ? -c : c, sy ? -c : c, sz ? -c : c}, w});
    };
    switch (count) {
        case 6:
            add_octahedron(fourpi / 6.0);
            break;
        case 8:
            add_cube(fourpi / 8.0);
            break;
        case 14:
            // Lebedev order-5 weights: 1/15 on axes, 3/40 on cube diagonals.
            add_octahedron(fourpi / 15.0);
            add_cube(fourpi * 3.0 / 40.0);
            break;
        default:
            throw ArgumentError("direction_set: d=3 supports 6, 8 or 14 directions, got " +
                                std::to_string(count));
    }
    return dirs;
}

// Photon mode grid between the infrared cutoff `lambda` and the ultraviolet
// cutoff `uv`. Radial nodes are midpoint-in-log: r_j = uv * exp(-(j+1/2) h)
// with fixed step h = ln(10)/points_per_decade, so grids with different
// lambda share all common UV nodes exactly. Radial weights r dln(r) times
// the angular weight reproduce the shell measure (r^2 dr dOmega in d=3).
struct ModeGrid {
    int dimension = 3;
    double ir_cutoff = 0.0;  // actual grid edge (smallest node boundary)
    double uv_cutoff = 0.0;
    int points_per_decade = 4;
    int direction_count = 6;
    bool transversal = false; // two polarization modes per (radial, direction)
    std::vector<Mode> modes;

    std::size_t size() const { return modes.size(); }

    // total momentum-space volume represented by the grid
    double shell_volume() const {
        double v = 0;
        for (const auto& m : modes)
            if (m.polarization <= 1) v += m.weight; // count each cell once
        return v;
    }
};

inline ModeGrid build_mode_grid(int dimension, double lambda, double uv,
                                int points_per_decade, int direction_count,
                                bool transversal = false) {
    if (lambda <= 0 || uv <= 0 || lambda >= uv)
        throw ArgumentError("build_mode_grid: need 0 < lambda < uv");
    if (points_per_decade < 1) throw ArgumentError("build_mode_grid: points_per_decade >= 1");
    if (transversal && dimension != 3)
        throw ArgumentError("build_mode_grid: transversal modes require dimension 3");

    ModeGrid g;
    g.dimension = dimension;
    g.uv_cutoff = uv;
    g.points_per_decade = points_per_decade;
    g.direction_count = direction_count;
    g.transversal = transversal;

    const double h = std::log(10.0) / points_per_decade;
    const int n_r = static_cast<int>(std::ceil(std::log(uv / lambda) / h - 1e-12));
    g.ir_cutoff = uv * std::exp(-n_r * h);

    const auto dirs = direction_set(dimension, direction_count);
    int idx = 0;
    for (int j = 0; j < n_r; ++j) {
        const double r = uv * std::exp(-(j + 0.5) * h);
        const double radial_w = (dimension == 3) ? r * r * r * h : r * h;
        for (const auto& d : dirs) {
            Vec3 k{r * d.khat[0], r * d.khat[1], r * d.khat[2]};
            if (!transversal) {
                Mode m;
                m.index = idx++;
                m.momentum = k;
                m.abs_k = r;
                m.weight = radial_w * d.weight;
                g.modes.push_back(m);
            } else {
                Vec3 e1, e2;
                transversal_frame(d.khat, e1, e2);
                for (int pol = 1; pol <= 2; ++pol) {
                    Mode m;
                    m.index = idx++;
                    m.momentum = k;
                    m.abs_k = r;
                    m.polarization = pol;
                    m.epsilon = (pol == 1) ? e1 : e2;
                    m.weight = radial_w * d.weight;
                    g.modes.push_back(m);
                }
            }
        }
    }
    return g;
}

// Structural fingerprint used for cheap compatibility checks between
// objects that must share a grid.
inline bool same_grid(const ModeGrid& a, const ModeGrid& b) {
    if (a.dimension != b.dimension || a.size() != b.size() || a.transversal != b.transversal)
        return false;
    if (a.uv_cutoff != b.uv_cutoff || a.ir_cutoff != b.ir_cutoff) return false;
    return true;
}

} // namespace irlab::fock

#endif
