#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "psl/distribution.hpp"
#include "psl/errors.hpp"

namespace psl {

inline constexpr double kDefaultTol = 1e-13;
inline constexpr int kDefaultMaxIter = 100000;

/// Tabulated weights g(0), ..., g(S-1) defining the partial-summation
/// operator. Entries must be finite and not all zero.
class GTable {
public:
    explicit GTable(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t j) const { return values_[j]; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

/// Dense S x S matrix with entry (i, j) = g(j) for j >= i and 0 below the
/// diagonal: column j is constant on and above the diagonal.
class SummationMatrix {
public:
    explicit SummationMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    double& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<double> data_;
};

SummationMatrix build_matrix(const GTable& g);

/// One partial summation without normalization: w_x = sum_{j>=x} g(j) u_j,
/// computed in O(S) by the backward recurrence w_x = w_{x+1} + g(x) u_x.
SignedVector apply(const GTable& g, const SignedVector& u);

/// Plain dense matrix-vector product. Kept as an independent route for
/// cross-checking `apply`.
SignedVector apply_dense(const SummationMatrix& A, const SignedVector& u);

struct IterationStep {
    int step;              ///< 1-based iteration index this record belongs to
    SignedVector iterate;  ///< L2-normalized, sign-canonicalized
    double step_distance;  ///< ||u_n - u_{n-1}||_2
    double rayleigh;       ///< <A u_{n-1}, u_{n-1}> with ||u_{n-1}||_2 = 1
};

/// Per-step record of the iteration. Traces are complete at desk scale; when
/// steps * S would exceed a fixed memory budget the recording resolution is
/// halved (stride doubling), always keeping the final step.
struct IterationTrace {
    std::vector<IterationStep> steps;
    bool converged = false;
    int iterations_used = 0;
};

/// Raised when the iteration hits max_iter with the successive-iterate
/// distance still at or above tol. The trace up to that point is attached.
class NoConvergence : public Error {
public:
    NoConvergence(const std::string& what, IterationTrace trace)
        : Error(what), trace_(std::make_shared<IterationTrace>(std::move(trace))) {}

    const IterationTrace& trace() const { return *trace_; }

private:
    std::shared_ptr<const IterationTrace> trace_;
};

struct IterateResult {
    FiniteDistribution limit;
    IterationTrace trace;
};

/// Iterated partial summation as a power iteration: repeatedly applies the
/// operator, renormalizing each iterate to unit Euclidean norm with the sign
/// flipped so the largest-magnitude entry is positive. Stops when the
/// Euclidean distance between successive normalized iterates drops below tol.
/// The returned distribution is the final iterate under normalize_l1.
IterateResult iterate(const GTable& g, const FiniteDistribution& parent,
                      double tol = kDefaultTol, int max_iter = kDefaultMaxIter);

}  // namespace psl
