#ifndef IRLAB_UTIL_QUADRATURE_HPP
#define IRLAB_UTIL_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "irlab/util/errors.hpp"

namespace irlab::util {

// Gauss-Kronrod 15(7) nodes/weights on [-1,1] (Kronrod extension of G7).
namespace gk15 {
inline constexpr double nodes[15] = {
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};
inline constexpr double wk[15] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};
// Gauss-7 weights, indexed into the odd Kronrod nodes.
inline constexpr double wg[7] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};
} // namespace gk15

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;
};

namespace detail {

template <class F>
inline void gk15_panel(const F& f, double a, double b, double& kronrod, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double fx = f(c + h * gk15::nodes[i]);
        resk += gk15::wk[i] * fx;
        if (i % 2 == 1) resg += gk15::wg[i / 2] * fx;
    }
    kronrod = resk * h;
    err = std::abs((resk - resg) * h);
}

template <class F>
inline void adapt(const F& f, double a, double b, double tol, int depth, int max_depth,
                  QuadResult& out) {
    double v, e;
    gk15_panel(f, a, b, v, e);
    out.evaluations += 15;
    if (e <= tol || depth >= max_depth) {
        out.value += v;
        out.error_estimate += e;
        if (e > tol) out.converged = false;
        return;
    }
    const double c = 0.5 * (a + b);
    adapt(f, a, c, 0.5 * tol, depth + 1, max_depth, out);
    adapt(f, c, b, 0.5 * tol, depth + 1, max_depth, out);
}

} // namespace detail

// Adaptive Gauss-Kronrod on [a,b]. `splits` lists interior points the
// integrand is known to be sharp at (panels are seeded around them).
template <class F>
inline QuadResult integrate_adaptive(const F& f, double a, double b, double abs_tol,
                                     std::vector<double> splits = {}, int max_depth = 28) {
    QuadResult out;
    if (a == b) return out;
    splits.push_back(a);
    splits.push_back(b);
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
    std::vector<double> pts;
    for (double s : splits)
        if (s >= a && s <= b) pts.push_back(s);
    if (pts.front() != a) pts.insert(pts.begin(), a);
    if (pts.back() != b) pts.push_back(b);
    const double tol_per = abs_tol / static_cast<double>(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        detail::adapt(f, pts[i], pts[i + 1], tol_per, 0, max_depth, out);
    return out;
}

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
// Deterministic and accurate to machine precision for n up to a few hundred.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    if (n < 1) throw ArgumentError("gauss_legendre: n must be >= 1");
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

} // namespace irlab::util

#endif
