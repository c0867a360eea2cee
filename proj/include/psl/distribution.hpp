#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "psl/errors.hpp"

namespace psl {

/// Absolute tolerance for "entries sum to one" checks.
inline constexpr double kProbSumTol = 1e-12;

/// Unnormalized iterate vector of length S. Entries may be negative; the
/// normalization constants of the summation are absorbed here.
struct SignedVector {
    std::vector<double> entries;

    SignedVector() = default;
    explicit SignedVector(std::vector<double> e) : entries(std::move(e)) {}

    static SignedVector zeros(std::size_t n) { return SignedVector(std::vector<double>(n, 0.0)); }

    std::size_t size() const { return entries.size(); }
    double operator[](std::size_t i) const { return entries[i]; }
    double& operator[](std::size_t i) { return entries[i]; }

    double l1_norm() const;
    double l2_norm() const;
};

/// Probability vector on {0, ..., S-1}: entries are nonnegative and sum to 1
/// within kProbSumTol. Immutable after construction.
class FiniteDistribution {
public:
    /// Validates the invariants; throws InvalidDistribution otherwise.
    explicit FiniteDistribution(std::vector<double> probs);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const { return probs_; }

    SignedVector to_signed() const { return SignedVector(probs_); }

private:
    std::vector<double> probs_;
};

/// Scales v by 1/||v||_1, flipping the global sign first when all entries are
/// nonpositive. Entries within 1e-10 * ||v||_1 of zero are clamped to zero.
///
/// Throws ZeroVector when ||v||_1 < 1e-300, and MixedSignVector when strictly
/// positive and strictly negative entries coexist beyond the tolerance (the
/// vector does not point at a probability distribution).
FiniteDistribution normalize_l1(const SignedVector& v);

/// Total variation distance (1/2) * sum_i |p_i - q_i|, in [0, 1].
double tv_distance(const FiniteDistribution& p, const FiniteDistribution& q);

/// Bin(n, p) padded with zeros up to support size S >= n + 1.
/// Coefficients use the multiplicative recurrence C(n,i+1) = C(n,i)(n-i)/(i+1).
FiniteDistribution binomial_distribution(unsigned n, double p, std::size_t S);

/// Distribution concentrated at index `at`.
FiniteDistribution point_mass(std::size_t at, std::size_t S);

/// Uniform distribution on {0, ..., S-1}.
FiniteDistribution uniform_distribution(std::size_t S);

/// Reproducible strictly positive random distribution: independent uniforms
/// on (0,1), normalized, floored so every entry ends up >= 1e-6.
FiniteDistribution random_parent(std::size_t S, std::uint64_t seed);

}  // namespace psl
