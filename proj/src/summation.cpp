#include "psl/summation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

namespace psl {

GTable::GTable(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw InvalidGTable("g table must have at least one entry");
    bool any_nonzero = false;
    for (double g : values_) {
        if (!std::isfinite(g)) throw InvalidGTable("g table contains a non-finite entry");
        if (g != 0.0) any_nonzero = true;
    }
    if (!any_nonzero) throw InvalidGTable("g table is identically zero");
}

SummationMatrix build_matrix(const GTable& g) {
    const std::size_t n = g.size();
    SummationMatrix A(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) A.at(i, j) = g[j];
    return A;
}

SignedVector apply(const GTable& g, const SignedVector& u) {
    if (g.size() != u.size())
        throw DimensionMismatch("apply: g has " + std::to_string(g.size()) + " entries, u has " +
                                std::to_string(u.size()));
    const std::size_t n = u.size();
    SignedVector w = SignedVector::zeros(n);
    double acc = 0.0;
    for (std::size_t x = n; x-- > 0;) {
        acc = acc + g[x] * u[x];
        w[x] = acc;
    }
    return w;
}

SignedVector apply_dense(const SummationMatrix& A, const SignedVector& u) {
    if (A.size() != u.size())
        throw DimensionMismatch("apply_dense: matrix is " + std::to_string(A.size()) +
                                "x" + std::to_string(A.size()) + ", u has " +
                                std::to_string(u.size()));
    const std::size_t n = u.size();
    SignedVector w = SignedVector::zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += A.at(i, j) * u[j];
        w[i] = s;
    }
    return w;
}

namespace {

double dot(const SignedVector& a, const SignedVector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double distance_l2(const SignedVector& a, const SignedVector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// Unit Euclidean norm with the largest-magnitude entry made positive, so the
// convergence test stays meaningful when the dominant eigenvalue is negative.
SignedVector l2_normalize_canonical(SignedVector v) {
    const double n2 = v.l2_norm();
    if (!(n2 > 1e-300)) throw ZeroVector("iterate collapsed to the zero vector");
    std::size_t imax = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::fabs(v[i]) > std::fabs(v[imax])) imax = i;
    const double scale = (v[imax] < 0.0 ? -1.0 : 1.0) / n2;
    for (double& x : v.entries) x *= scale;
    return v;
}

// ~64 MB of retained iterate payload before the trace thins itself
constexpr std::size_t kTraceBudgetDoubles = 8'000'000;

}  // namespace

IterateResult iterate(const GTable& g, const FiniteDistribution& parent, double tol,
                      int max_iter) {
    if (g.size() != parent.size())
        throw DimensionMismatch("iterate: g and parent support sizes differ");
    if (!(tol > 0.0)) throw InvalidArgument("iterate: tol must be positive");
    if (max_iter < 1) throw InvalidArgument("iterate: max_iter must be >= 1");

    const std::size_t record_cap =
        std::max<std::size_t>(1024, kTraceBudgetDoubles / parent.size());

    IterationTrace trace;
    trace.steps.reserve(std::min<std::size_t>(static_cast<std::size_t>(max_iter), 4096));
    int stride = 1;

    SignedVector u = l2_normalize_canonical(parent.to_signed());
    double last_dist = 0.0;
    double last_rayleigh = 0.0;
    for (int n = 1; n <= max_iter; ++n) {
        SignedVector w = apply(g, u);
        last_rayleigh = dot(w, u);
        SignedVector next = l2_normalize_canonical(std::move(w));
        last_dist = distance_l2(next, u);
        u = std::move(next);
        trace.iterations_used = n;
        if ((n - 1) % stride == 0) {
            trace.steps.push_back({n, u, last_dist, last_rayleigh});
            if (trace.steps.size() > record_cap) {
                std::size_t kept = 0;
                for (std::size_t i = 0; i < trace.steps.size(); i += 2) {
                    if (i != kept) trace.steps[kept] = std::move(trace.steps[i]);
                    ++kept;
                }
                trace.steps.resize(kept);
                stride *= 2;
            }
        }
        if (last_dist < tol) {
            trace.converged = true;
            break;
        }
    }
    if (trace.steps.back().step != trace.iterations_used)
        trace.steps.push_back({trace.iterations_used, u, last_dist, last_rayleigh});
    if (!trace.converged) {
        char detail[96];
        std::snprintf(detail, sizeof detail, "successive-iterate distance %.3g >= tol %.3g",
                      trace.steps.back().step_distance, tol);
        const std::string msg = "no convergence after " + std::to_string(trace.iterations_used) +
                                " steps: " + detail;
        throw NoConvergence(msg, std::move(trace));
    }

    return IterateResult{normalize_l1(u), std::move(trace)};
}

}  // namespace psl
