#include "wlrec/recursion.hpp"

#include <algorithm>
#include <cmath>

namespace wlrec {

void EnsembleParams::validate() const {
    if (n < 1) throw DomainError("n must be >= 1, got " + std::to_string(n));
    if (alpha < 0) {
        throw UnsupportedParameter("alpha must be a non-negative integer, got " + std::to_string(alpha));
    }
}

std::string EnsembleParams::to_string() const {
    return "n=" + std::to_string(n) + ", alpha=" + std::to_string(alpha) + ", beta=" + beta.to_string();
}

long parse_alpha(const std::string& text) {
    Rational value;
    try {
        value = parse_rational(text);
    } catch (const UsageError&) {
        throw UsageError("alpha is not a number: '" + text + "'");
    }
    if (value.get_den() != 1 || sgn(value) < 0) {
        throw UnsupportedParameter("alpha must be a non-negative integer (half-integer seeds are not supported), got " +
                                   text);
    }
    if (!value.get_num().fits_slong_p()) throw UnsupportedParameter("alpha too large: " + text);
    return value.get_num().get_si();
}

template <CoefficientField F>
GPolynomial<F> compute_g(const EnsembleParams& params) {
    params.validate();
    const long n = params.n;
    const F beta = params.beta.value<F>();
    DensePolynomial<F> g = DensePolynomial<F>::constant(F(1L));
    for (long a = 1; a <= params.alpha; ++a) {
        const F two_a_over_beta = F(F(2 * a) / beta);
        DensePolynomial<F> older;  // S_{i-2}
        DensePolynomial<F> prev = g;  // S_{i-1}
        for (long i = 1; i <= n - 1; ++i) {
            const F remaining(n - i);
            const F shift = F(two_a_over_beta + F(n - i + 1));
            const F deriv = F(F(2L) / F(beta * remaining));
            const F lag = F(F(i - 1) * F(F(1L) + two_a_over_beta / remaining));
            DensePolynomial<F> next = poly_combine_recursion_step(prev, older, shift, deriv, lag);
            older = std::move(prev);
            prev = std::move(next);
        }
        g = std::move(prev);
    }
    return GPolynomial<F>{params, std::move(g)};
}

BigFloat selberg_constant_C(long n, const BigFloat& alpha, const BigFloat& beta) {
    if (n < 1) throw DomainError("n must be >= 1");
    if (!(alpha > BigFloat(-1L))) throw DomainError("Selberg constant requires alpha > -1");
    if (!(beta > BigFloat(0L))) throw DomainError("Selberg constant requires beta > 0");
    const BigFloat half_beta = beta / BigFloat(2L);
    const BigFloat gamma = BigFloat(n) * (alpha + half_beta * BigFloat(n - 1) + BigFloat(1L));
    BigFloat log_c = gamma * log(half_beta);
    const BigFloat lg_top = lgamma(half_beta + BigFloat(1L));
    for (long j = 0; j < n; ++j) {
        log_c += lg_top;
        log_c -= lgamma(half_beta * BigFloat(j + 1) + BigFloat(1L));
        log_c -= lgamma(half_beta * BigFloat(j) + alpha + BigFloat(1L));
    }
    return exp(log_c);
}

BigFloat selberg_constant_C(const EnsembleParams& params) {
    params.validate();
    return selberg_constant_C(params.n, BigFloat(params.alpha), params.beta.approx());
}

BigFloat norm_constant_c_gamma(const EnsembleParams& params) {
    params.validate();
    const long n = params.n;
    const BigFloat alpha(params.alpha);
    const BigFloat beta = params.beta.approx();
    const BigFloat half_beta = beta / BigFloat(2L);
    const BigFloat one(1L);
    BigFloat log_c = log(BigFloat(n)) + BigFloat(n * params.alpha + 1) * log(half_beta) + lgamma(half_beta + one);
    log_c -= lgamma(half_beta * BigFloat(n) + one);
    log_c -= lgamma(half_beta * BigFloat(n - 1) + alpha + one);
    for (long j = 0; j <= n - 2; ++j) {
        log_c += lgamma(half_beta * BigFloat(j) + beta + one);
        log_c -= lgamma(half_beta * BigFloat(j) + alpha + one);
    }
    return exp(log_c);
}

template <CoefficientField F>
F norm_constant_c_integral(const EnsembleParams& params, const DensePolynomial<F>& g) {
    const F rate_inv = F(F(2L) / F(params.beta.value<F>() * F(params.n)));
    // term_j = Gamma(alpha+j+1) (2/(beta n))^(alpha+j+1)
    F term = F(factorial<F>(params.alpha) * ipow(rate_inv, params.alpha + 1));
    F total(0L);
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (j > 0) term *= F(F(params.alpha + static_cast<long>(j)) * rate_inv);
        total += F(g.coeffs()[j] * term);
    }
    if (FieldTraits<F>::is_zero(total)) throw NumericalError("normalization integral vanished");
    return F(F(1L) / total);
}

template <CoefficientField F>
F norm_constant_c(const GPolynomial<F>& g) {
    const F by_integral = norm_constant_c_integral(g.params, g.poly);
    const BigFloat by_gamma = norm_constant_c_gamma(g.params);
    const BigFloat integral_bf = FieldTraits<F>::to_bigfloat(by_integral);
    const BigFloat rel = abs(integral_bf - by_gamma) / abs(by_gamma);
    if (!(rel.to_double() <= kNormRouteTolerance)) {
        throw ConsistencyError("normalization routes disagree for " + g.params.to_string() +
                               ": integral=" + integral_bf.to_string(20) + " gamma=" + by_gamma.to_string(20));
    }
    return by_integral;
}

FieldChoice default_field(const EnsembleParams& params, mpfr_prec_t requested_bits) {
    FieldChoice choice;
    choice.bits = requested_bits;
    if (params.g_degree() > kExactDegreeLimit) {
        choice.exact = false;
        choice.bits = std::max(requested_bits, kLargeDegreePrecision);
    } else {
        choice.exact = params.beta.is_rational();
    }
    return choice;
}

template GPolynomial<Rational> compute_g<Rational>(const EnsembleParams&);
template GPolynomial<BigFloat> compute_g<BigFloat>(const EnsembleParams&);
template Rational norm_constant_c_integral<Rational>(const EnsembleParams&, const DensePolynomial<Rational>&);
template BigFloat norm_constant_c_integral<BigFloat>(const EnsembleParams&, const DensePolynomial<BigFloat>&);
template Rational norm_constant_c<Rational>(const GPolynomial<Rational>&);
template BigFloat norm_constant_c<BigFloat>(const GPolynomial<BigFloat>&);

}  // namespace wlrec
