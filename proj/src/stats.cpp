#include "graphbench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graphbench/errors.hpp"

namespace graphbench {

double mean(std::span<const double> values) {
    if (values.empty()) throw DomainError("mean of empty sequence");
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

double population_std(std::span<const double> values) {
    double mu = mean(values);
    double s = 0.0;
    for (double v : values) s += (v - mu) * (v - mu);
    return std::sqrt(s / static_cast<double>(values.size()));
}

double percentile(std::vector<double> values, double pct) {
    if (values.empty()) throw DomainError("percentile of empty sequence");
    if (!(pct > 0.0 && pct <= 100.0)) throw DomainError("percentile must lie in (0, 100]");
    std::sort(values.begin(), values.end());
    if (values.size() == 1) return values[0];
    double h = (pct / 100.0) * static_cast<double>(values.size() - 1);
    auto lo = static_cast<std::size_t>(h);
    if (lo >= values.size() - 1) return values.back();
    double frac = h - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        double r = 0.5 * static_cast<double>(i + j) + 1.0; // average 1-based rank of the tie group
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = r;
        i = j + 1;
    }
    return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw DomainError("spearman: length mismatch");
    if (x.size() < 2) throw DomainError("spearman: need at least 2 points");
    auto rx = average_ranks(x);
    auto ry = average_ranks(y);
    double mx = mean(rx), my = mean(ry);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

} // namespace graphbench
