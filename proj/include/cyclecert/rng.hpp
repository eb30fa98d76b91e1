#ifndef CYCLECERT_RNG_HPP
#define CYCLECERT_RNG_HPP

#include <cstdint>
#include <random>

namespace cyclecert {

// splitmix64 round. Used to derive per-trial and per-stream seeds from a
// user seed so that trial i is reproducible in isolation.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic random source. Only the raw mt19937_64 stream is consumed;
// the derived draws below are hand-rolled so that output bytes do not depend
// on the standard library's unspecified distribution algorithms.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // One draw per call, threshold compare. p >= 1 always true, p <= 0 never.
    bool bernoulli(double p) {
        if (p <= 0.0) { next(); return false; }
        if (p >= 1.0) { next(); return true; }
        auto threshold = static_cast<std::uint64_t>(p * 18446744073709551616.0);
        return next() < threshold;
    }

    // Uniform in [0, n). Unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t draw;
        do {
            draw = next();
        } while (draw >= limit);
        return draw % n;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace cyclecert

#endif
