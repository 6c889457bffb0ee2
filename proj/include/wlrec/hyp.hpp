#pragma once

#include "wlrec/recursion.hpp"

namespace wlrec {

/// 1F1^(beta/2)(-n+1; 2 alpha/beta + 2; -x 1_alpha) as an explicit polynomial in x.
template <CoefficientField F>
struct HypergeomResult {
    EnsembleParams params;
    /// prefactor * g_{n,alpha,beta}; degree alpha (n-1), value 1 at x = 0.
    DensePolynomial<F> poly;
    /// (beta/2)^(alpha(n-1)) prod_{j=0}^{n-2} Gamma(beta j/2 + beta + 1) / Gamma(beta j/2 + alpha + beta + 1)
    F prefactor;

    F operator()(const F& x) const { return poly_eval(poly, x); }
    double eval(double x) const;
};

template <CoefficientField F>
HypergeomResult<F> hyp1f1_matrix(const EnsembleParams& params);

/// Scalar Kummer polynomial 1F1(-m; c; -x) = sum_{k=0}^m (-m)_k / (c)_k (-x)^k / k!.
template <CoefficientField F>
DensePolynomial<F> kummer_terminating(long m, const F& c);

}  // namespace wlrec
