#include "wlrec/hyp.hpp"

#include <algorithm>

namespace wlrec {

template <CoefficientField F>
HypergeomResult<F> hyp1f1_matrix(const EnsembleParams& params) {
    GPolynomial<F> g = compute_g<F>(params);
    const F beta = params.beta.template value<F>();
    const F half_beta = F(beta / F(2L));
    // Gamma(z)/Gamma(z + alpha) = 1/(z)_alpha with z = beta j/2 + beta + 1.
    F prefactor = ipow(half_beta, params.alpha * (params.n - 1));
    for (long j = 0; j <= params.n - 2; ++j) {
        const F z = F(half_beta * F(j) + beta + F(1L));
        prefactor /= rising_factorial(z, params.alpha);
    }
    return HypergeomResult<F>{params, poly_scale(g.poly, prefactor), prefactor};
}

template <CoefficientField F>
double HypergeomResult<F>::eval(double x) const {
    PrecisionScope scope(std::max<mpfr_prec_t>(BigFloat::context_precision(), 128));
    BigFloat acc(0L);
    const BigFloat bx(x);
    for (auto it = poly.coeffs().rbegin(); it != poly.coeffs().rend(); ++it) {
        acc *= bx;
        acc += FieldTraits<F>::to_bigfloat(*it);
    }
    return acc.to_double();
}

template <CoefficientField F>
DensePolynomial<F> kummer_terminating(long m, const F& c) {
    std::vector<F> coeffs;
    F term(1L);
    for (long k = 0; k <= m; ++k) {
        if (k > 0) {
            // (-m)_k / (c)_k * (-1)^k / k!, built incrementally.
            term *= F(F(-m + k - 1) / F(c + F(k - 1)));
            term *= F(F(-1L) / F(k));
        }
        coeffs.push_back(term);
    }
    return DensePolynomial<F>(std::move(coeffs));
}

template struct HypergeomResult<Rational>;
template struct HypergeomResult<BigFloat>;
template HypergeomResult<Rational> hyp1f1_matrix<Rational>(const EnsembleParams&);
template HypergeomResult<BigFloat> hyp1f1_matrix<BigFloat>(const EnsembleParams&);
template DensePolynomial<Rational> kummer_terminating<Rational>(long, const Rational&);
template DensePolynomial<BigFloat> kummer_terminating<BigFloat>(long, const BigFloat&);

}  // namespace wlrec
