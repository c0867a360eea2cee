#include "psl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace psl {

DominantInfo dominant_index(const GTable& g, double tie_tol) {
    if (!(tie_tol >= 0.0)) throw InvalidArgument("dominant_index: tie_tol must be >= 0");

    std::size_t k = 0;
    for (std::size_t j = 1; j < g.size(); ++j)
        if (std::fabs(g[j]) > std::fabs(g[k])) k = j;  // strict: smallest index wins ties

    DominantInfo info;
    info.k = k;
    info.lambda = g[k];

    const double mag = std::fabs(g[k]);
    double second = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (j == k) continue;
        second = std::max(second, std::fabs(g[j]));
        if (std::fabs(std::fabs(g[j]) - mag) <= tie_tol * mag) info.unique = false;
    }
    info.gap_ratio = g.size() > 1 ? second / mag : 0.0;
    return info;
}

SignedVector closed_form_eigenvector(const GTable& g, std::size_t k) {
    if (k >= g.size())
        throw IndexOutOfRange("closed_form_eigenvector: k = " + std::to_string(k) +
                              " with S = " + std::to_string(g.size()));
    if (g[k] == 0.0)
        throw ZeroDominantValue("closed_form_eigenvector: g(k) = 0 has no scaled eigenvector");

    SignedVector v = SignedVector::zeros(g.size());
    v[0] = 1.0;
    double prod = 1.0;
    for (std::size_t i = 1; i <= k; ++i) {
        prod *= 1.0 - g[i - 1] / g[k];
        v[i] = prod;
    }
    return v;
}

double eigen_residual(const GTable& g, const SignedVector& v, double lambda) {
    const double vnorm = v.l2_norm();
    if (!(vnorm > 1e-300)) throw ZeroVector("eigen_residual: v is (near) zero");
    const SignedVector Av = apply(g, v);  // checks dimensions
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double r = Av[i] - lambda * v[i];
        s += r * r;
    }
    return std::sqrt(s) / vnorm;
}

FiniteDistribution limit_via_power_method(const GTable& g, const FiniteDistribution& parent,
                                          double tol, int max_iter) {
    if (g.size() != parent.size())
        throw DimensionMismatch("limit_via_power_method: g and parent support sizes differ");

    const DominantInfo dom = dominant_index(g);
    if (!dom.unique)
        throw PreconditionViolated(
            "limit_via_power_method: no unique dominant eigenvalue (|g| values tie at indices "
            "within tolerance)");

    for (std::size_t i = 0; i < parent.size(); ++i)
        if (!(parent[i] > 0.0))
            throw PreconditionViolated("limit_via_power_method: parent entry " +
                                       std::to_string(i) + " is not strictly positive");

    std::vector<double> sorted = g.values();
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionViolated(
            "limit_via_power_method: repeated g values; diagonalizability is not certified by "
            "the distinct-eigenvalue condition");

    return iterate(g, parent, tol, max_iter).limit;
}

}  // namespace psl
