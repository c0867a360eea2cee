#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "psl/rational.hpp"
#include "psl/spectral.hpp"

namespace psl {

/// Relative tolerance for boundary ties when parameters are only known as
/// doubles.
inline constexpr double kBoundaryRelTol = 1e-12;

/// Note attached to classifications (and scan rows) for parameter pairs with
/// alpha = beta, where the decision does not come from the eigenvalue
/// comparison but from the known finite-support result.
inline constexpr const char* kEqualParamsNote = "alpha-eq-beta-special-case";

/// Katz-family parameter pair: alpha >= 0, beta < 1.
class KatzParams {
public:
    KatzParams(double alpha, double beta);

    /// Builds from decimal strings, retaining exact rational forms when the
    /// strings are plain decimals. Exactness feeds the boundary comparisons.
    static KatzParams from_strings(const std::string& alpha, const std::string& beta);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    const std::optional<Rational>& alpha_exact() const { return alpha_exact_; }
    const std::optional<Rational>& beta_exact() const { return beta_exact_; }

private:
    double alpha_;
    double beta_;
    std::optional<Rational> alpha_exact_;
    std::optional<Rational> beta_exact_;
};

enum class LimitKind { Deterministic, Binomial, Boundary };

std::string to_string(LimitKind kind);

/// Predicted limit of the iterated summation for one (alpha, beta, S) triple,
/// with the branch labels traversed to reach the decision.
struct Classification {
    LimitKind kind = LimitKind::Deterministic;
    std::optional<std::size_t> k;    ///< S - 1 when Binomial
    std::optional<double> p;         ///< binomial success probability
    std::vector<std::string> path;   ///< decision labels, outermost first
    std::string provenance;          ///< extra note, e.g. kEqualParamsNote
};

/// Weight table induced by the Katz pmf ratio:
///   g(j) = ((1 - alpha) + (1 - beta) j) / (j + 1).
GTable katz_g(const KatzParams& params, std::size_t S);

/// Decision-tree classifier over (alpha, beta, S).
///
/// alpha = beta and alpha < beta give the point mass at 0. For alpha > beta
/// the outcome follows the dominant end of the monotone g: Binomial when
/// alpha <= 1; for alpha > 1 it depends on the sign of alpha + beta - 2 and,
/// when negative, on S against the critical size S* = (alpha-beta)/(2-alpha-beta).
/// S = S* has no unique dominant eigenvalue and is reported as Boundary.
/// The S vs S* comparison is exact when both parameters carry rational forms,
/// otherwise within kBoundaryRelTol relative.
Classification classify(const KatzParams& params, std::size_t S);

/// Independent route to the same decision: directly compares the two sides of
///   |1 - alpha|  vs  |((1 - alpha) + (1 - beta)(S - 1)) / S|,
/// i.e. |g(0)| vs |g(S-1)|. Throws NotApplicable when alpha = beta (the two
/// sides coincide identically and cannot discriminate).
Classification classify_by_inequality(const KatzParams& params, std::size_t S);

/// Materializes the classified limit: point mass at 0, or
/// Bin(S-1, (alpha-beta)/((1-beta) S)) padded to S. Throws BoundaryCase when
/// the classification is Boundary.
FiniteDistribution predict_limit(const KatzParams& params, std::size_t S);

}  // namespace psl
