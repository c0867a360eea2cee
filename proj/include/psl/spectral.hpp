#pragma once

#include <cstddef>

#include "psl/summation.hpp"

namespace psl {

/// Relative tolerance under which two eigenvalue magnitudes are treated as
/// tied. Below this separation the power method would need upwards of 1e9
/// steps, so the dominant value is reported as non-unique.
inline constexpr double kDefaultTieTol = 1e-9;

/// Location of the dominant eigenvalue of the summation matrix. The matrix is
/// upper triangular, so its eigenvalues are the diagonal entries g(j).
struct DominantInfo {
    std::size_t k = 0;      ///< argmax_j |g(j)|, smallest index on exact ties
    double lambda = 0.0;    ///< g(k)
    bool unique = true;     ///< no other |g(j)| within tie_tol * |g(k)|
    double gap_ratio = 0.0; ///< second-largest |g| divided by |g(k)|; 0 when S = 1
};

DominantInfo dominant_index(const GTable& g, double tie_tol = kDefaultTieTol);

/// Closed-form eigenvector for the eigenvalue g(k), scaled so v_0 = 1:
///   v_i = prod_{j=0}^{i-1} (1 - g(j)/g(k))   for 1 <= i <= k,
///   v_i = 0                                  for i > k.
/// A factor may vanish when some g(j) equals g(k); the remaining entries are
/// then zero and the vector is still an exact eigenvector.
SignedVector closed_form_eigenvector(const GTable& g, std::size_t k);

/// Relative residual ||A v - lambda v||_2 / ||v||_2 of a candidate eigenpair.
double eigen_residual(const GTable& g, const SignedVector& v, double lambda);

/// Limit distribution via power iteration, guarded by the conditions under
/// which the iteration provably converges to the dominant eigenvector:
/// a unique dominant eigenvalue, a strictly positive parent, and pairwise
/// distinct g values (sufficient for diagonalizability). Violations raise
/// PreconditionViolated naming the failed condition.
FiniteDistribution limit_via_power_method(const GTable& g, const FiniteDistribution& parent,
                                          double tol = kDefaultTol,
                                          int max_iter = kDefaultMaxIter);

}  // namespace psl
