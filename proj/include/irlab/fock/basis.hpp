#ifndef IRLAB_FOCK_BASIS_HPP
#define IRLAB_FOCK_BASIS_HPP

#include <cstdint>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "irlab/fock/grid.hpp"
#include "irlab/util/errors.hpp"
#include "irlab/util/hash.hpp"

namespace irlab::fock {

// Truncated bosonic occupation basis: all occupation vectors with per-mode
// occupation <= n_cap and total <= n_max, in graded order (total ascending,
// first mode filled greedily within a grade). The vacuum is state 0.
class FockBasis {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    FockBasis(ModeGrid grid, int n_max, int n_cap, std::size_t hard_limit = 2'000'000)
        : grid_(std::move(grid)), n_max_(n_max), n_cap_(n_cap) {
        if (n_max < 0) throw ArgumentError("FockBasis: n_max must be >= 0");
        if (n_cap < 1) throw ArgumentError("FockBasis: n_cap must be >= 1");
        if (grid_.size() == 0) throw ArgumentError("FockBasis: empty mode grid");
        if (n_cap > 255) throw ArgumentError("FockBasis: n_cap must be <= 255");

        const std::size_t n_modes = grid_.size();
        const double count = count_states(n_modes, n_max_, n_cap_);
        if (count > static_cast<double>(hard_limit))
            throw CapacityError("FockBasis: " + std::to_string(n_modes) + " modes, n_max=" +
                                std::to_string(n_max_) + ", n_cap=" + std::to_string(n_cap_) +
                                " gives " + std::to_string(static_cast<std::uint64_t>(count)) +
                                " states, exceeding the limit of " + std::to_string(hard_limit));

        const auto n_states = static_cast<std::size_t>(count + 0.5);
        states_.reserve(n_states * n_modes);
        totals_.reserve(n_states);
        std::vector<std::uint8_t> occ(n_modes, 0);
        for (int n = 0; n <= n_max_; ++n) enumerate(occ, 0, n);

        build_index();
    }

    const ModeGrid& grid() const { return grid_; }
    int n_max() const { return n_max_; }
    int n_cap() const { return n_cap_; }
    std::size_t size() const { return totals_.size(); }
    std::size_t n_modes() const { return grid_.size(); }

    const std::uint8_t* occupation(std::size_t state) const {
        return &states_[state * n_modes()];
    }
    int occupation(std::size_t state, std::size_t mode) const {
        return states_[state * n_modes() + mode];
    }
    int total(std::size_t state) const { return totals_[state]; }

    // Index of the occupation vector `occ`, or npos if absent.
    std::size_t find(const std::uint8_t* occ) const {
        const std::size_t nm = n_modes();
        std::size_t slot = util::fnv1a64(occ, nm) & mask_;
        for (;;) {
            const std::uint32_t e = table_[slot];
            if (e == 0) return npos;
            const std::size_t s = e - 1;
            if (std::memcmp(occ, occupation(s), nm) == 0) return s;
            slot = (slot + 1) & mask_;
        }
    }

    // Index of `state` with `mode` raised by one; npos if the transition
    // leaves the truncated space (that weight is truncation leakage).
    std::size_t raised_index(std::size_t state, std::size_t mode) const {
        if (totals_[state] + 1 > n_max_) return npos;
        if (occupation(state, mode) + 1 > n_cap_) return npos;
        scratch_.assign(occupation(state), occupation(state) + n_modes());
        scratch_[mode]++;
        return find(scratch_.data());
    }
    std::size_t lowered_index(std::size_t state, std::size_t mode) const {
        if (occupation(state, mode) == 0) return npos;
        scratch_.assign(occupation(state), occupation(state) + n_modes());
        scratch_[mode]--;
        return find(scratch_.data());
    }

    // Combinatorial count of admissible occupation vectors (no enumeration).
    static double count_states(std::size_t n_modes, int n_max, int n_cap) {
        std::vector<double> dp(n_max + 1, 0.0);
        dp[0] = 1.0;
        for (std::size_t m = 0; m < n_modes; ++m) {
            std::vector<double> nx(n_max + 1, 0.0);
            for (int t = 0; t <= n_max; ++t)
                if (dp[t] > 0)
                    for (int k = 0; k <= n_cap && t + k <= n_max; ++k) nx[t + k] += dp[t];
            dp.swap(nx);
            double partial = 0;
            for (double v : dp) partial += v;
            if (partial > 1e18) return partial; // already absurd; stop early
        }
        double total = 0;
        for (double v : dp) total += v;
        return total;
    }

private:
    void enumerate(std::vector<std::uint8_t>& occ, std::size_t mode, int remaining) {
        const std::size_t n_modes = grid_.size();
        if (mode == n_modes) return; // remaining > 0 cannot be placed
        if (remaining == 0) {
            // all later modes stay zero; emit current vector once
            states_.insert(states_.end(), occ.begin(), occ.end());
            int t = 0;
            for (auto v : occ) t += v;
            totals_.push_back(t);
            return;
        }
        const int hi = std::min(remaining, n_cap_);
        for (int k = hi; k >= 1; --k) {
            occ[mode] = static_cast<std::uint8_t>(k);
            if (remaining - k == 0) {
                states_.insert(states_.end(), occ.begin(), occ.end());
                int t = 0;
                for (auto v : occ) t += v;
                totals_.push_back(t);
            } else {
                enumerate(occ, mode + 1, remaining - k);
            }
        }
        occ[mode] = 0;
        enumerate(occ, mode + 1, remaining);
    }

    void build_index() {
        std::size_t cap = 16;
        while (cap < 2 * size() + 1) cap <<= 1;
        mask_ = cap - 1;
        table_.assign(cap, 0);
        const std::size_t nm = n_modes();
        for (std::size_t s = 0; s < size(); ++s) {
            std::size_t slot = util::fnv1a64(occupation(s), nm) & mask_;
            while (table_[slot] != 0) slot = (slot + 1) & mask_;
            table_[slot] = static_cast<std::uint32_t>(s + 1);
        }
    }

    ModeGrid grid_;
    int n_max_;
    int n_cap_;
    std::vector<std::uint8_t> states_; // size * n_modes, row-major
    std::vector<int> totals_;
    std::vector<std::uint32_t> table_; // open addressing, entries are index+1
    std::size_t mask_ = 0;
    mutable std::vector<std::uint8_t> scratch_;
};

using BasisPtr = std::shared_ptr<const FockBasis>;

inline BasisPtr make_basis(ModeGrid grid, int n_max, int n_cap,
                           std::size_t hard_limit = 2'000'000) {
    return std::make_shared<const FockBasis>(std::move(grid), n_max, n_cap, hard_limit);
}

} // namespace irlab::fock

#endif
