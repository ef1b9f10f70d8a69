#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace graphbench {

/// splitmix64 step; used as the stream generator and as the seed mixer.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic sub-stream derivation. Mixes a tag and up to two indices into
/// the master seed so every consumer (sample #i, grid point #j, ...) owns an
/// independent stream. All randomness in the toolkit flows from one master
/// seed through this function; there is no global RNG.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                          std::uint64_t a = 0, std::uint64_t b = 0);

/// Random engine with explicitly specified draw algorithms. std distributions
/// are implementation-defined, and reports must be byte-identical for a fixed
/// seed, so all draws are spelled out here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform on [0, 1) with 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on [0, n); unbiased via rejection.
    std::uint64_t next_below(std::uint64_t n);

    /// Bernoulli(p).
    bool next_bool(double p) { return next_unit() < p; }

    /// Standard normal via Box-Muller; the second variate of each pair is cached.
    double next_normal();

    /// Fisher-Yates in-place shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

} // namespace graphbench
