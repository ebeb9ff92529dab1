#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace netcurv {

/// Seedable RNG with platform-stable sampling. The raw stream is std::mt19937_64
/// (its output sequence is fixed by the standard); all bounded sampling is done
/// here by rejection instead of std::uniform_int_distribution, whose mapping is
/// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % n;
    }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return static_cast<double>(engine_()) * 0x1p-64 < p;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[uniform_below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace netcurv
