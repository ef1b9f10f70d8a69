#pragma once

#include <span>
#include <vector>

namespace graphbench {

double mean(std::span<const double> values);

/// Population standard deviation (divide by N). This matches the "x ± y"
/// presentation used throughout the reports.
double population_std(std::span<const double> values);

/// Percentile with linear interpolation between order statistics.
/// pct must lie in (0, 100]; pct = 100 returns the maximum.
double percentile(std::vector<double> values, double pct);

/// Spearman rank correlation; ties get average ranks. Returns 0 when either
/// side is constant.
double spearman(std::span<const double> x, std::span<const double> y);

std::vector<double> average_ranks(std::span<const double> values);

} // namespace graphbench
