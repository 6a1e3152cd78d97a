#ifndef IRLAB_FOCK_STATE_HPP
#define IRLAB_FOCK_STATE_HPP

#include <Eigen/Dense>
#include <complex>

#include "irlab/fock/basis.hpp"
#include "irlab/util/errors.hpp"

namespace irlab::fock {

using cplx = std::complex<double>;
using Amplitudes = Eigen::VectorXcd;

// A vector in the truncated Fock space: one complex amplitude per basis state.
struct FockVector {
    BasisPtr basis;
    Amplitudes amp;

    FockVector() = default;
    explicit FockVector(BasisPtr b) : basis(std::move(b)), amp(Amplitudes::Zero(basis->size())) {}
    FockVector(BasisPtr b, Amplitudes a) : basis(std::move(b)), amp(std::move(a)) {
        if (static_cast<std::size_t>(amp.size()) != basis->size())
            throw ArgumentError("FockVector: amplitude length does not match basis size");
    }

    double norm() const { return amp.norm(); }
    cplx dot(const FockVector& other) const { return amp.dot(other.amp); } // conjugates *this
    void normalize() {
        const double n = norm();
        if (n > 0) amp /= n;
    }
};

inline FockVector vacuum_state(BasisPtr basis) {
    FockVector v(std::move(basis));
    v.amp[0] = 1.0;
    return v;
}

// Distance on the projective space of states: d = sqrt(2 - 2|<a,b>|) for
// normalized inputs. Insensitive to any phase convention by construction.
inline double phase_quotient_distance(const FockVector& a, const FockVector& b) {
    const double na = a.norm(), nb = b.norm();
    if (na == 0 || nb == 0) throw ArgumentError("phase_quotient_distance: zero vector");
    const double ov = std::abs(a.dot(b)) / (na * nb);
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::min(1.0, ov)));
}

// Diagnostics that are diagonal in the occupation basis.
inline double mean_photon_number(const FockVector& v) {
    double s = 0;
    for (std::size_t i = 0; i < v.basis->size(); ++i)
        s += std::norm(v.amp[i]) * v.basis->total(i);
    const double n2 = v.amp.squaredNorm();
    return n2 > 0 ? s / n2 : 0.0;
}

inline double vacuum_overlap_sq(const FockVector& v) {
    const double n2 = v.amp.squaredNorm();
    return n2 > 0 ? std::norm(v.amp[0]) / n2 : 0.0;
}

// Probability of each total photon number 0..n_max.
inline std::vector<double> photon_number_distribution(const FockVector& v) {
    std::vector<double> p(v.basis->n_max() + 1, 0.0);
    for (std::size_t i = 0; i < v.basis->size(); ++i)
        p[v.basis->total(i)] += std::norm(v.amp[i]);
    const double n2 = v.amp.squaredNorm();
    if (n2 > 0)
        for (auto& x : p) x /= n2;
    return p;
}

} // namespace irlab::fock

#endif
