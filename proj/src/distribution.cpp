#include "psl/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace psl {

double SignedVector::l1_norm() const {
    double s = 0.0;
    for (double x : entries) s += std::fabs(x);
    return s;
}

double SignedVector::l2_norm() const {
    double s = 0.0;
    for (double x : entries) s += x * x;
    return std::sqrt(s);
}

FiniteDistribution::FiniteDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw InvalidDistribution("distribution must have at least one entry");
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0)) throw InvalidDistribution("distribution entry is negative or NaN");
        sum += p;
    }
    if (std::fabs(sum - 1.0) > kProbSumTol)
        throw InvalidDistribution("distribution entries sum to " + std::to_string(sum) +
                                  ", expected 1");
}

FiniteDistribution normalize_l1(const SignedVector& v) {
    const double l1 = v.l1_norm();
    if (!std::isfinite(l1)) throw InvalidArgument("vector has non-finite entries");
    if (!(l1 > 1e-300)) throw ZeroVector("cannot normalize: ||v||_1 < 1e-300");

    const double tol = 1e-10 * l1;
    bool has_pos = false;
    bool has_neg = false;
    for (double x : v.entries) {
        if (x > tol) has_pos = true;
        else if (x < -tol) has_neg = true;
    }
    if (has_pos && has_neg)
        throw MixedSignVector("vector mixes positive and negative entries beyond tolerance");

    const double sign = has_neg ? -1.0 : 1.0;
    std::vector<double> out(v.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = std::max(sign * v[i], 0.0);  // clamp sub-tolerance leftovers
        sum += out[i];
    }
    for (double& x : out) x /= sum;
    return FiniteDistribution(std::move(out));
}

double tv_distance(const FiniteDistribution& p, const FiniteDistribution& q) {
    if (p.size() != q.size())
        throw DimensionMismatch("tv_distance: supports differ (" + std::to_string(p.size()) +
                                " vs " + std::to_string(q.size()) + ")");
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += std::fabs(p[i] - q[i]);
    return 0.5 * s;
}

FiniteDistribution binomial_distribution(unsigned n, double p, std::size_t S) {
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidProbability("binomial p = " + std::to_string(p) + " outside [0, 1]");
    if (S < static_cast<std::size_t>(n) + 1)
        throw DimensionMismatch("binomial support S must be at least n + 1");

    std::vector<double> probs(S, 0.0);
    const double q = 1.0 - p;
    double coef = 1.0;  // C(n, i) by multiplicative recurrence, no factorials
    for (unsigned i = 0; i <= n; ++i) {
        probs[i] = coef * std::pow(p, static_cast<double>(i)) *
                   std::pow(q, static_cast<double>(n - i));
        coef = coef * static_cast<double>(n - i) / static_cast<double>(i + 1);
    }
    return FiniteDistribution(std::move(probs));
}

FiniteDistribution point_mass(std::size_t at, std::size_t S) {
    if (S == 0) throw InvalidArgument("point_mass: S must be >= 1");
    if (at >= S)
        throw IndexOutOfRange("point_mass at " + std::to_string(at) + " with S = " +
                              std::to_string(S));
    std::vector<double> probs(S, 0.0);
    probs[at] = 1.0;
    return FiniteDistribution(std::move(probs));
}

FiniteDistribution uniform_distribution(std::size_t S) {
    if (S == 0) throw InvalidArgument("uniform_distribution: S must be >= 1");
    return FiniteDistribution(std::vector<double>(S, 1.0 / static_cast<double>(S)));
}

FiniteDistribution random_parent(std::size_t S, std::uint64_t seed) {
    if (S == 0) throw InvalidArgument("random_parent: S must be >= 1");
    if (S > 100000) throw InvalidArgument("random_parent: S too large for the positivity floor");

    std::mt19937_64 rng(seed);
    std::vector<double> p(S);
    double sum = 0.0;
    for (double& x : p) {
        // top 53 bits -> uniform strictly inside (0, 1); avoids the
        // implementation-defined std::uniform_real_distribution sequence
        x = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        sum += x;
    }
    for (double& x : p) x /= sum;

    // Floor chosen so entries stay >= 1e-6 after the final renormalization.
    const double raw_floor = 1.1e-6;
    const double floor = raw_floor / (1.0 - static_cast<double>(S) * raw_floor);
    double z = 0.0;
    for (double& x : p) {
        x = std::max(x, floor);
        z += x;
    }
    for (double& x : p) x /= z;
    return FiniteDistribution(std::move(p));
}

}  // namespace psl
