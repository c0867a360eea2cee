#pragma once

#include <filesystem>
#include <string>

#include "psl/summation.hpp"

namespace psl {

/// Shortest decimal form with up to `precision` significant digits, locale
/// independent ('.' separator always).
std::string format_double(double x, int precision = 15);

/// Reads a distribution from a single-column CSV with header `p`, or from a
/// JSON array of numbers (detected by a leading '[').
FiniteDistribution read_distribution(const std::filesystem::path& path);

void write_distribution_csv(const FiniteDistribution& d, const std::filesystem::path& path);

/// Reads a g table from a single-column CSV with header `g`.
GTable read_gtable(const std::filesystem::path& path);

void write_gtable_csv(const GTable& g, const std::filesystem::path& path);

/// Per-step dump of an iteration trace:
/// step,step_distance,rayleigh,v0,...,v{S-1}.
void write_trace_csv(const IterationTrace& trace, const std::filesystem::path& path);

}  // namespace psl
