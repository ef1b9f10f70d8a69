#include "graphbench/rng.hpp"

#include <numbers>

namespace graphbench {

std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                          std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = master;
    splitmix64(s);
    for (unsigned char c : tag) {
        s ^= static_cast<std::uint64_t>(c);
        splitmix64(s);
    }
    s ^= a;
    splitmix64(s);
    s ^= b;
    return splitmix64(s);
}

std::uint64_t Rng::next_below(std::uint64_t n) {
    if (n <= 1) return 0;
    // Reject the final partial bucket so every residue is equally likely.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    std::uint64_t x = next_u64();
    while (x > limit) x = next_u64();
    return x % n;
}

double Rng::next_normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    // Box-Muller; u1 shifted into (0, 1] so the log is finite.
    double u1 = 1.0 - next_unit();
    double u2 = next_unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    cached_normal_ = r * std::sin(theta);
    has_cached_normal_ = true;
    return r * std::cos(theta);
}

} // namespace graphbench
