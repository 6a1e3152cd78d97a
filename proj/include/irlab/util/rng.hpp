#ifndef IRLAB_UTIL_RNG_HPP
#define IRLAB_UTIL_RNG_HPP

#include <cstdint>

namespace irlab::util {

// SplitMix64. Tiny, seedable, and identical on every platform; used for
// deterministic start vectors and test data, never for statistics.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [-1, 1)
    double next_symmetric() { return 2.0 * next_double() - 1.0; }

private:
    std::uint64_t state_;
};

} // namespace irlab::util

#endif
