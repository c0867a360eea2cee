#include "psl/scan.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <ostream>

#include "psl/io.hpp"

namespace psl {

namespace {

// Grid values start + i*step within [lo, hi). The 1e-9 relative slack keeps
// the intended endpoint inside the grid despite accumulated rounding.
std::vector<double> axis_points(const Range& r, double lo, double hi) {
    if (!(r.step > 0.0) || !std::isfinite(r.step))
        throw InvalidArgument("scan: step must be positive and finite");
    if (!std::isfinite(r.start) || !std::isfinite(r.stop))
        throw InvalidArgument("scan: range endpoints must be finite");

    std::vector<double> pts;
    if (r.start > r.stop) return pts;
    const auto count =
        static_cast<long long>(std::floor((r.stop - r.start) / r.step + 1e-9)) + 1;
    for (long long i = 0; i < count; ++i) {
        const double v = r.start + static_cast<double>(i) * r.step;
        if (v >= lo && v < hi) pts.push_back(v);
    }
    return pts;
}

}  // namespace

void scan_to_stream(const ScanConfig& config, std::ostream& out, std::ostream& warnings) {
    if (config.S < 2) throw InvalidArgument("scan: S must be >= 2");

    const double inf = std::numeric_limits<double>::infinity();
    const auto alphas = axis_points(config.alpha, 0.0, inf);  // clip to alpha >= 0
    const auto betas = axis_points(config.beta, -inf, 1.0);   // clip to beta < 1

    out << "alpha,beta,S,class,k,p,note\n";
    for (const double a : alphas) {
        for (const double b : betas) {
            Classification c;
            try {
                c = classify(KatzParams(a, b), config.S);
            } catch (const InvalidParams& e) {
                warnings << "scan: skipping alpha=" << format_double(a)
                         << " beta=" << format_double(b) << ": " << e.what() << '\n';
                continue;
            }
            out << format_double(a) << ',' << format_double(b) << ',' << config.S << ','
                << to_string(c.kind) << ',';
            if (c.k) out << *c.k;
            out << ',';
            if (c.p) out << format_double(*c.p);
            out << ',';
            if (a == b) out << kEqualParamsNote;
            out << '\n';
        }
    }
}

void scan(const ScanConfig& config) {
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) throw IoError("cannot open " + config.output_path.string() + " for writing");
    scan_to_stream(config, out, std::cerr);
    if (!out.flush()) throw IoError("write failed for " + config.output_path.string());
}

}  // namespace psl
