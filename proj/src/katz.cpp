#include "psl/katz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace psl {

KatzParams::KatzParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    if (!(alpha >= 0.0))
        throw InvalidParams("alpha = " + std::to_string(alpha) + " must be >= 0");
    if (!(beta < 1.0)) throw InvalidParams("beta = " + std::to_string(beta) + " must be < 1");
}

namespace {

double parse_double_strict(const std::string& text) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw InvalidParams("cannot parse '" + text + "' as a number");
    }
    if (pos != text.size()) throw InvalidParams("trailing characters in number '" + text + "'");
    return v;
}

}  // namespace

KatzParams KatzParams::from_strings(const std::string& alpha, const std::string& beta) {
    const auto a_rat = Rational::from_decimal(alpha);
    const auto b_rat = Rational::from_decimal(beta);
    const double a = a_rat ? a_rat->to_double() : parse_double_strict(alpha);
    const double b = b_rat ? b_rat->to_double() : parse_double_strict(beta);
    KatzParams p(a, b);
    p.alpha_exact_ = a_rat;
    p.beta_exact_ = b_rat;
    return p;
}

std::string to_string(LimitKind kind) {
    switch (kind) {
        case LimitKind::Deterministic: return "deterministic";
        case LimitKind::Binomial: return "binomial";
        case LimitKind::Boundary: return "boundary";
    }
    return "?";
}

GTable katz_g(const KatzParams& params, std::size_t S) {
    if (S == 0) throw InvalidArgument("katz_g: S must be >= 1");
    const double a = params.alpha();
    const double b = params.beta();
    std::vector<double> g(S);
    for (std::size_t j = 0; j < S; ++j)
        g[j] = ((1.0 - a) + (1.0 - b) * static_cast<double>(j)) / static_cast<double>(j + 1);
    return GTable(std::move(g));
}

namespace {

int sign_of(double x) { return x < 0.0 ? -1 : (x > 0.0 ? 1 : 0); }

bool both_exact(const KatzParams& P) {
    return P.alpha_exact().has_value() && P.beta_exact().has_value();
}

int cmp_alpha_beta(const KatzParams& P) {
    if (both_exact(P)) return compare(*P.alpha_exact(), *P.beta_exact());
    return sign_of(P.alpha() - P.beta());
}

int cmp_alpha_one(const KatzParams& P) {
    if (P.alpha_exact()) return compare(*P.alpha_exact(), Rational{1, 1});
    return sign_of(P.alpha() - 1.0);
}

int cmp_alpha_plus_beta_two(const KatzParams& P) {
    if (both_exact(P)) {
        const auto& a = *P.alpha_exact();
        const auto& b = *P.beta_exact();
        const __int128 num = static_cast<__int128>(a.num) * b.den +
                             static_cast<__int128>(b.num) * a.den -
                             static_cast<__int128>(2) * a.den * b.den;
        return num < 0 ? -1 : (num > 0 ? 1 : 0);
    }
    return sign_of(P.alpha() + P.beta() - 2.0);
}

// Sign of S - S* with S* = (alpha-beta)/(2-alpha-beta). Only valid in the
// branch alpha > beta, alpha + beta < 2, where both parts are positive.
// Exact rational inputs compare exactly; doubles use kBoundaryRelTol.
int cmp_support_critical(const KatzParams& P, std::size_t S) {
    if (both_exact(P)) {
        const auto& a = *P.alpha_exact();
        const auto& b = *P.beta_exact();
        // numerators of (alpha - beta) and (2 - alpha - beta) over the common
        // positive denominator a.den * b.den
        const __int128 num_diff = static_cast<__int128>(a.num) * b.den -
                                  static_cast<__int128>(b.num) * a.den;
        const __int128 num_2ab = static_cast<__int128>(2) * a.den * b.den -
                                 static_cast<__int128>(a.num) * b.den -
                                 static_cast<__int128>(b.num) * a.den;
        const __int128 lhs = static_cast<__int128>(S) * num_2ab;
        return lhs < num_diff ? -1 : (lhs > num_diff ? 1 : 0);
    }
    const double s_star =
        (P.alpha() - P.beta()) / (2.0 - P.alpha() - P.beta());
    const double s = static_cast<double>(S);
    if (std::fabs(s - s_star) <= kBoundaryRelTol * std::max(s, s_star)) return 0;
    return sign_of(s - s_star);
}

double binomial_p(const KatzParams& P, std::size_t S) {
    return (P.alpha() - P.beta()) / ((1.0 - P.beta()) * static_cast<double>(S));
}

void make_binomial(Classification& c, const KatzParams& P, std::size_t S) {
    c.kind = LimitKind::Binomial;
    c.k = S - 1;
    c.p = binomial_p(P, S);
}

}  // namespace

Classification classify(const KatzParams& P, std::size_t S) {
    if (S == 0) throw InvalidArgument("classify: S must be >= 1");

    Classification c;
    if (S == 1) {
        c.kind = LimitKind::Deterministic;
        c.path = {"S=1"};
        c.provenance = "single-point support is its own limit";
        return c;
    }

    const int ab = cmp_alpha_beta(P);
    if (ab == 0) {
        c.kind = LimitKind::Deterministic;
        c.path = {"alpha=beta"};
        c.provenance = kEqualParamsNote;
        return c;
    }
    if (ab < 0) {
        c.kind = LimitKind::Deterministic;
        c.path = {"alpha<beta"};
        return c;
    }

    c.path.push_back("alpha>beta");
    if (cmp_alpha_one(P) <= 0) {
        c.path.push_back("alpha<=1");
        make_binomial(c, P, S);
        return c;
    }

    c.path.push_back("alpha>1");
    if (cmp_alpha_plus_beta_two(P) >= 0) {
        c.path.push_back("alpha+beta-2>=0");
        c.kind = LimitKind::Deterministic;
        return c;
    }

    c.path.push_back("alpha+beta-2<0");
    const int ss = cmp_support_critical(P, S);
    if (ss == 0) {
        c.path.push_back("S=S*");
        c.kind = LimitKind::Boundary;
        c.provenance = "tied |g(0)| and |g(S-1)|: no unique dominant eigenvalue";
        return c;
    }
    if (ss < 0) {
        c.path.push_back("S<S*");
        c.kind = LimitKind::Deterministic;
    } else {
        c.path.push_back("S>S*");
        make_binomial(c, P, S);
    }
    return c;
}

Classification classify_by_inequality(const KatzParams& P, std::size_t S) {
    if (S < 2) throw InvalidArgument("classify_by_inequality: S must be >= 2");
    if (cmp_alpha_beta(P) == 0)
        throw NotApplicable(
            "classify_by_inequality: both sides coincide identically when alpha = beta");

    const double a = P.alpha();
    const double b = P.beta();
    const double left = std::fabs(1.0 - a);
    const double right =
        std::fabs(((1.0 - a) + (1.0 - b) * static_cast<double>(S - 1)) / static_cast<double>(S));

    Classification c;
    if (std::fabs(left - right) <= kBoundaryRelTol * std::max(left, right)) {
        c.kind = LimitKind::Boundary;
        c.path = {"|g(0)|=|g(S-1)|"};
        c.provenance = "tied |g(0)| and |g(S-1)|: no unique dominant eigenvalue";
    } else if (left > right) {
        c.kind = LimitKind::Deterministic;
        c.path = {"|g(0)|>|g(S-1)|"};
    } else {
        c.path = {"|g(0)|<|g(S-1)|"};
        make_binomial(c, P, S);
    }
    return c;
}

FiniteDistribution predict_limit(const KatzParams& P, std::size_t S) {
    const Classification c = classify(P, S);
    if (c.kind == LimitKind::Boundary)
        throw BoundaryCase("predict_limit: limit is undetermined at S = S*");
    if (c.kind == LimitKind::Binomial)
        return binomial_distribution(static_cast<unsigned>(S - 1), *c.p, S);
    return point_mass(0, S);
}

}  // namespace psl
