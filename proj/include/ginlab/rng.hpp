#ifndef GINLAB_RNG_HPP
#define GINLAB_RNG_HPP

#include <cstdint>

namespace ginlab {

// Deterministic splitmix64 stream. Every randomized operation takes an explicit
// seed and derives sub-seeds through mix(); nothing reads hidden entropy, and the
// stream is identical across platforms (std::uniform_int_distribution is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform-ish in [0, k); the tiny modulo bias is irrelevant here
    std::uint64_t below(std::uint64_t k) { return k == 0 ? 0 : next() % k; }

    long range(long lo, long hi) { // inclusive bounds
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

// Stable sub-seed derivation for independent sub-computations.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    Rng r(seed ^ (0xa0761d6478bd642fULL * (salt + 1)));
    return r.next();
}

} // namespace ginlab

#endif
