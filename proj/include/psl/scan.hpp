#pragma once

#include <filesystem>
#include <iosfwd>

#include "psl/katz.hpp"

namespace psl {

/// Closed arithmetic progression start, start+step, ..., up to stop.
struct Range {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
};

struct ScanConfig {
    Range alpha;
    Range beta;
    std::size_t S = 2;
    std::filesystem::path output_path;
};

/// Classifies every grid point and writes one CSV row per point, alpha-major:
///   alpha,beta,S,class,k,p,note
/// k and p are empty unless Binomial; note is kEqualParamsNote on alpha = beta
/// rows. Ranges are clipped to the parameter domain (alpha >= 0, beta < 1);
/// any residual invalid point is skipped with a warning naming it. Output is
/// deterministic: two runs of the same config produce identical bytes.
void scan_to_stream(const ScanConfig& config, std::ostream& out, std::ostream& warnings);

/// scan_to_stream into config.output_path; warnings go to stderr.
void scan(const ScanConfig& config);

}  // namespace psl
