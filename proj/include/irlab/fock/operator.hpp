#ifndef IRLAB_FOCK_OPERATOR_HPP
#define IRLAB_FOCK_OPERATOR_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <vector>

#include "irlab/fock/basis.hpp"
#include "irlab/fock/state.hpp"
#include "irlab/util/errors.hpp"

namespace irlab::fock {

struct Triplet {
    std::uint32_t row;
    std::uint32_t col;
    cplx value;
};

// Compressed-rows sparse operator on a FockBasis. Entry order is fully
// determined by (row, col), so identical inputs give identical storage.
class SparseOperator {
public:
    SparseOperator() = default;

    SparseOperator(BasisPtr basis, std::vector<Triplet> triplets, bool hermitian)
        : basis_(std::move(basis)), hermitian_(hermitian) {
        const std::size_t n = basis_->size();
        std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        row_ptr_.assign(n + 1, 0);
        col_.reserve(triplets.size());
        val_.reserve(triplets.size());
        for (std::size_t i = 0; i < triplets.size();) {
            std::size_t j = i;
            cplx v = 0;
            while (j < triplets.size() && triplets[j].row == triplets[i].row &&
                   triplets[j].col == triplets[i].col) {
                v += triplets[j].value;
                ++j;
            }
            if (v != cplx(0.0, 0.0)) {
                col_.push_back(triplets[i].col);
                val_.push_back(v);
                row_ptr_[triplets[i].row + 1]++;
            }
            i = j;
        }
        for (std::size_t r = 0; r < n; ++r) row_ptr_[r + 1] += row_ptr_[r];
    }

    static SparseOperator diagonal(BasisPtr basis, const std::vector<double>& d) {
        std::vector<Triplet> t;
        t.reserve(d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] != 0.0)
                t.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i), d[i]});
        return SparseOperator(std::move(basis), std::move(t), true);
    }

    const BasisPtr& basis() const { return basis_; }
    std::size_t dim() const { return basis_ ? basis_->size() : 0; }
    std::size_t nonzeros() const { return val_.size(); }
    bool hermitian() const { return hermitian_; }
    void set_hermitian(bool h) { hermitian_ = h; }

    void apply(const Amplitudes& x, Amplitudes& y) const {
        const std::size_t n = dim();
        y.resize(n);
        for (std::size_t r = 0; r < n; ++r) {
            cplx acc = 0;
            for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
                acc += val_[k] * x[col_[k]];
            y[r] = acc;
        }
    }

    // y = A^dagger x
    void apply_adjoint(const Amplitudes& x, Amplitudes& y) const {
        const std::size_t n = dim();
        y = Amplitudes::Zero(n);
        for (std::size_t r = 0; r < n; ++r) {
            const cplx xr = x[r];
            for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
                y[col_[k]] += std::conj(val_[k]) * xr;
        }
    }

    FockVector operator*(const FockVector& v) const {
        FockVector out(basis_);
        apply(v.amp, out.amp);
        return out;
    }

    cplx expectation(const FockVector& v) const {
        Amplitudes y;
        apply(v.amp, y);
        return v.amp.dot(y);
    }

    SparseOperator scaled(cplx factor) const {
        SparseOperator s(*this);
        for (auto& v : s.val_) v *= factor;
        if (factor.imag() != 0.0) s.hermitian_ = false;
        return s;
    }

    static SparseOperator sum(const SparseOperator& a, const SparseOperator& b) {
        if (a.basis_ != b.basis_ && !(a.basis_ && b.basis_ && a.dim() == b.dim()))
            throw ArgumentError("SparseOperator::sum: basis mismatch");
        std::vector<Triplet> t;
        t.reserve(a.nonzeros() + b.nonzeros());
        a.collect(t);
        b.collect(t);
        return SparseOperator(a.basis_, std::move(t), a.hermitian_ && b.hermitian_);
    }

    // general sparse product (used only for the quadratic field term)
    static SparseOperator product(const SparseOperator& a, const SparseOperator& b) {
        if (a.dim() != b.dim()) throw ArgumentError("SparseOperator::product: dim mismatch");
        std::vector<Triplet> t;
        const std::size_t n = a.dim();
        std::vector<cplx> rowacc(n, cplx(0, 0));
        std::vector<std::uint32_t> touched;
        for (std::size_t r = 0; r < n; ++r) {
            touched.clear();
            for (std::size_t ka = a.row_ptr_[r]; ka < a.row_ptr_[r + 1]; ++ka) {
                const std::uint32_t m = a.col_[ka];
                const cplx va = a.val_[ka];
                for (std::size_t kb = b.row_ptr_[m]; kb < b.row_ptr_[m + 1]; ++kb) {
                    const std::uint32_t c = b.col_[kb];
                    if (rowacc[c] == cplx(0, 0)) touched.push_back(c);
                    rowacc[c] += va * b.val_[kb];
                }
            }
            std::sort(touched.begin(), touched.end());
            for (auto c : touched) {
                if (rowacc[c] != cplx(0, 0))
                    t.push_back({static_cast<std::uint32_t>(r), c, rowacc[c]});
                rowacc[c] = 0;
            }
        }
        return SparseOperator(a.basis_, std::move(t), false);
    }

    // max |A - A^dagger| entry; hermiticity defect
    double hermiticity_defect() const {
        double defect = 0;
        const std::size_t n = dim();
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
                const std::uint32_t c = col_[k];
                const cplx vt = entry(c, r);
                defect = std::max(defect, std::abs(val_[k] - std::conj(vt)));
            }
        return defect;
    }

    cplx entry(std::size_t r, std::size_t c) const {
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
            if (col_[k] == c) return val_[k];
        return 0;
    }

    Eigen::MatrixXcd dense() const {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim(), dim());
        for (std::size_t r = 0; r < dim(); ++r)
            for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) m(r, col_[k]) = val_[k];
        return m;
    }

    static SparseOperator from_dense(BasisPtr basis, const Eigen::MatrixXcd& m, bool hermitian,
                                     double drop_tol = 0.0) {
        std::vector<Triplet> t;
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c)
                if (std::abs(m(r, c)) > drop_tol)
                    t.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c),
                                 m(r, c)});
        return SparseOperator(std::move(basis), std::move(t), hermitian);
    }

    void collect(std::vector<Triplet>& out) const {
        for (std::size_t r = 0; r < dim(); ++r)
            for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
                out.push_back({static_cast<std::uint32_t>(r), col_[k], val_[k]});
    }

private:
    BasisPtr basis_;
    bool hermitian_ = false;
    std::vector<std::size_t> row_ptr_;
    std::vector<std::uint32_t> col_;
    std::vector<cplx> val_;
};

} // namespace irlab::fock

#endif
