#include "wlrec/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/special_functions/beta.hpp>

namespace wlrec {

namespace {

void require_non_negative(double x, const char* what) {
    if (!(x >= 0.0)) throw DomainError(std::string(what) + " requires x >= 0, got " + std::to_string(x));
}

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

}  // namespace

// ---------------------------------------------------------------------------
// ClosedFormDensity

template <CoefficientField F>
ClosedFormDensity<F> ClosedFormDensity<F>::build(const EnsembleParams& params) {
    return from_g(compute_g<F>(params));
}

template <CoefficientField F>
ClosedFormDensity<F> ClosedFormDensity<F>::from_g(const GPolynomial<F>& g) {
    ClosedFormDensity d;
    d.params_ = g.params;
    d.c_ = norm_constant_c(g);
    d.gamma_ = g.params.template gamma<F>();
    d.rate_ = F(g.params.beta.template value<F>() * F(g.params.n) / F(2L));
    d.kappa_.reserve(g.poly.size());
    for (const F& coeff : g.poly.coeffs()) d.kappa_.push_back(F(d.c_ * coeff));

    // T_j = kappa_j j! / r^(j+1); q_k = r^k / k! * sum_{j >= max(k, alpha)} T_j.
    const long alpha = d.params_.alpha;
    const long top = d.last_power();
    std::vector<F> tail(static_cast<std::size_t>(top + 2), F(0L));
    F fact_over_rate = F(factorial<F>(alpha) / ipow(d.rate_, alpha + 1));
    std::vector<F> weight(d.kappa_.size());
    for (std::size_t i = 0; i < d.kappa_.size(); ++i) {
        if (i > 0) fact_over_rate *= F(F(alpha + static_cast<long>(i)) / d.rate_);
        weight[i] = F(d.kappa_[i] * fact_over_rate);
    }
    for (long j = top; j >= 0; --j) {
        tail[j] = tail[j + 1];
        if (j >= alpha) tail[j] += weight[static_cast<std::size_t>(j - alpha)];
    }
    std::vector<F> q(static_cast<std::size_t>(top + 1));
    F scale(1L);  // r^k / k!
    for (long k = 0; k <= top; ++k) {
        if (k > 0) scale *= F(d.rate_ / F(k));
        q[k] = F(scale * tail[k]);
    }
    d.survival_ = DensePolynomial<F>(std::move(q));
    d.prepare_eval();
    return d;
}

template <CoefficientField F>
void ClosedFormDensity<F>::prepare_eval() {
    PrecisionScope scope(kEvalPrecision);
    kappa_eval_.clear();
    for (const F& k : kappa_) kappa_eval_.push_back(rounded(FieldTraits<F>::to_bigfloat(k)));
    survival_eval_.clear();
    for (const F& q : survival_.coeffs()) survival_eval_.push_back(rounded(FieldTraits<F>::to_bigfloat(q)));
    rate_eval_ = rounded(FieldTraits<F>::to_bigfloat(rate_));
}

template <CoefficientField F>
F ClosedFormDensity<F>::kappa_at(long j) const {
    if (j < first_power() || j > last_power()) return F(0L);
    return kappa_[static_cast<std::size_t>(j - first_power())];
}

template <CoefficientField F>
F ClosedFormDensity<F>::total_mass() const {
    const F inv_rate = F(F(1L) / rate_);
    F term = F(factorial<F>(params_.alpha) * ipow(inv_rate, params_.alpha + 1));
    F total(0L);
    for (std::size_t i = 0; i < kappa_.size(); ++i) {
        if (i > 0) term *= F(F(params_.alpha + static_cast<long>(i)) * inv_rate);
        total += F(kappa_[i] * term);
    }
    return total;
}

template <CoefficientField F>
BigFloat ClosedFormDensity<F>::horner(const std::vector<BigFloat>& coeffs, const BigFloat& x) const {
    BigFloat acc(0L);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

template <CoefficientField F>
BigFloat ClosedFormDensity<F>::eval_big(const BigFloat& x) const {
    if (x.sign() < 0) throw DomainError("density requires x >= 0");
    PrecisionScope scope(kEvalPrecision);
    BigFloat value = horner(kappa_eval_, x);
    value *= pow(x, params_.alpha);
    value *= exp(-(rate_eval_ * x));
    return value;
}

template <CoefficientField F>
double ClosedFormDensity<F>::eval(double x) const {
    require_non_negative(x, "density");
    if (std::isinf(x)) return 0.0;
    PrecisionScope scope(kEvalPrecision);
    return eval_big(BigFloat(x)).to_double();
}

template <CoefficientField F>
double ClosedFormDensity<F>::log_eval(double x) const {
    require_non_negative(x, "log-density");
    PrecisionScope scope(kEvalPrecision);
    const BigFloat bx(x);
    if (x == 0.0) {
        if (params_.alpha > 0) return -std::numeric_limits<double>::infinity();
        return log(kappa_eval_.front()).to_double();
    }
    BigFloat value = log(horner(kappa_eval_, bx));
    value += BigFloat(params_.alpha) * log(bx);
    value -= rate_eval_ * bx;
    return value.to_double();
}

template <CoefficientField F>
double ClosedFormDensity<F>::survival(double x) const {
    require_non_negative(x, "cdf");
    PrecisionScope scope(kEvalPrecision);
    const BigFloat bx(x);
    BigFloat value = horner(survival_eval_, bx);
    value *= exp(-(rate_eval_ * bx));
    return clamp_probability(value.to_double());
}

template <CoefficientField F>
double ClosedFormDensity<F>::cdf(double x) const {
    require_non_negative(x, "cdf");
    PrecisionScope scope(kEvalPrecision);
    const BigFloat bx(x);
    BigFloat value = horner(survival_eval_, bx);
    value *= exp(-(rate_eval_ * bx));
    return clamp_probability((BigFloat(1L) - value).to_double());
}

// ---------------------------------------------------------------------------
// FixedTraceDensity

template <CoefficientField F>
FixedTraceDensity<F> FixedTraceDensity<F>::build(const EnsembleParams& params) {
    return from_unrestricted(ClosedFormDensity<F>::build(params));
}

template <CoefficientField F>
FixedTraceDensity<F> FixedTraceDensity<F>::from_unrestricted(const ClosedFormDensity<F>& base) {
    const EnsembleParams& params = base.params();
    FixedTraceDensity d;
    d.params_ = params;
    d.gamma_ = base.gamma();
    d.kappa_ = base.kappa();
    const long alpha = params.alpha;
    const long top = alpha * params.n;
    // Gamma(gamma - j - 1) is finite for every j <= n alpha iff gamma - n alpha - 1 > 0.
    const F margin = F(d.gamma_ - F(top + 1));
    if (!(FieldTraits<F>::to_double(margin) > 0.0)) {
        throw UnsupportedParameter("fixed-trace density needs gamma - n*alpha - 1 > 0 (Gamma pole at gamma - j - 1 <= 0); " +
                                   params.to_string());
    }
    const F beta = params.beta.template value<F>();
    const F two_over_beta = F(F(2L) / beta);
    const F two_over_beta_n = F(two_over_beta / F(params.n));
    F falling = F(d.gamma_ - F(1L));              // (gamma-1)...(gamma-j-1), j = alpha
    for (long i = 2; i <= alpha + 1; ++i) falling *= F(d.gamma_ - F(i));
    F power = ipow(two_over_beta, alpha + 1);      // (2/beta)^(j+1)
    F mix_power = ipow(two_over_beta_n, alpha + 1);  // (2/(beta n))^(j+1)
    F fact = factorial<F>(alpha);
    for (long j = alpha; j <= top; ++j) {
        if (j > alpha) {
            falling *= F(d.gamma_ - F(j + 1));
            power *= two_over_beta;
            mix_power *= two_over_beta_n;
            fact *= F(j);
        }
        const F& k = d.kappa_[static_cast<std::size_t>(j - alpha)];
        d.phi_.push_back(F(power * k * falling));
        d.mixture_.push_back(F(k * fact * mix_power));
    }

    PrecisionScope scope(kEvalPrecision);
    for (long j = alpha; j <= top; ++j) {
        const std::size_t i = static_cast<std::size_t>(j - alpha);
        d.phi_eval_.push_back(rounded(FieldTraits<F>::to_bigfloat(d.phi_[i])));
        const BigFloat exponent = rounded(FieldTraits<F>::to_bigfloat(d.gamma_)) - BigFloat(j + 2);
        d.exponent_eval_.push_back(exponent);
        d.mixture_eval_.push_back(FieldTraits<F>::to_double(d.mixture_[i]));
        d.ibeta_b_.push_back((exponent + BigFloat(1L)).to_double());
    }
    return d;
}

template <CoefficientField F>
BigFloat FixedTraceDensity<F>::eval_big(const BigFloat& x) const {
    if (x.sign() < 0) throw DomainError("fixed-trace density requires x >= 0");
    PrecisionScope scope(kEvalPrecision);
    const BigFloat nx = BigFloat(params_.n) * x;
    if (!(nx < BigFloat(1L))) return BigFloat(0L);
    const BigFloat log_base = log1p(-nx);
    BigFloat total(0L);
    BigFloat xpow = pow(x, params_.alpha);
    for (std::size_t i = 0; i < phi_eval_.size(); ++i) {
        if (i > 0) xpow *= x;
        total += phi_eval_[i] * xpow * exp(exponent_eval_[i] * log_base);
    }
    return total;
}

template <CoefficientField F>
double FixedTraceDensity<F>::eval(double x) const {
    require_non_negative(x, "fixed-trace density");
    PrecisionScope scope(kEvalPrecision);
    return eval_big(BigFloat(x)).to_double();
}

template <CoefficientField F>
double FixedTraceDensity<F>::cdf(double x) const {
    require_non_negative(x, "fixed-trace cdf");
    const double y = static_cast<double>(params_.n) * x;
    if (y >= 1.0) return 1.0;
    if (y <= 0.0) return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < mixture_eval_.size(); ++i) {
        const double a = static_cast<double>(params_.alpha + static_cast<long>(i) + 1);
        total += mixture_eval_[i] * boost::math::ibeta(a, ibeta_b_[i], y);
    }
    return clamp_probability(total);
}

template <CoefficientField F>
Rational FixedTraceDensity<F>::eval_exact(const Rational& x) const {
    if constexpr (!FieldTraits<F>::kExact) {
        throw UnsupportedParameter("exact evaluation needs exact coefficients (rational beta)");
    } else {
        if (gamma_.get_den() != 1) {
            throw UnsupportedParameter("fixed-trace density with non-integer gamma = " + gamma_.get_str() +
                                       " has no exact rational values; use float evaluation");
        }
        if (sgn(x) < 0) throw DomainError("fixed-trace density requires x >= 0");
        const Rational base = Rational(1) - Rational(params_.n) * x;
        if (sgn(base) <= 0) return Rational(0);
        const long g = gamma_.get_num().get_si();
        Rational total(0);
        for (std::size_t i = 0; i < phi_.size(); ++i) {
            const long j = params_.alpha + static_cast<long>(i);
            total += phi_[i] * ipow(x, j) * ipow(base, g - j - 2);
        }
        return total;
    }
}

template <CoefficientField F>
DensePolynomial<F> FixedTraceDensity<F>::reduced_polynomial() const {
    const long alpha = params_.alpha;
    const long top = alpha * params_.n;
    const F minus_n = F(-params_.n);
    std::vector<F> coeffs(static_cast<std::size_t>(top - alpha + 1), F(0L));
    for (long j = alpha; j <= top; ++j) {
        // phi_j x^(j-alpha) (1 - n x)^(n alpha - j)
        const long m = top - j;
        F binom(1L);
        F npow(1L);
        for (long k = 0; k <= m; ++k) {
            if (k > 0) {
                binom = F(binom * F(m - k + 1) / F(k));
                npow *= minus_n;
            }
            coeffs[static_cast<std::size_t>(j - alpha + k)] += F(phi_[static_cast<std::size_t>(j - alpha)] * binom * npow);
        }
    }
    return DensePolynomial<F>(std::move(coeffs));
}

template <CoefficientField F>
F FixedTraceDensity<F>::reduced_exponent() const {
    return F(gamma_ - F(params_.alpha * params_.n + 2));
}

// ---------------------------------------------------------------------------
// Moments

template <CoefficientField F>
F moment_unrestricted(const ClosedFormDensity<F>& d, long eta) {
    const long alpha = d.params().alpha;
    if (eta <= -alpha - 1) {
        throw DomainError("moment of order " + std::to_string(eta) + " diverges (needs eta > -alpha-1 = " +
                          std::to_string(-alpha - 1) + ")");
    }
    const F inv_rate = F(F(1L) / d.rate());
    F term = F(factorial<F>(alpha + eta) * ipow(inv_rate, alpha + eta + 1));
    F total(0L);
    for (std::size_t i = 0; i < d.kappa().size(); ++i) {
        if (i > 0) term *= F(F(alpha + eta + static_cast<long>(i)) * inv_rate);
        total += F(d.kappa()[i] * term);
    }
    return total;
}

template <CoefficientField F>
BigFloat moment_unrestricted_real(const ClosedFormDensity<F>& d, const BigFloat& eta) {
    const long alpha = d.params().alpha;
    if (!(eta > BigFloat(-alpha - 1))) throw DomainError("moment diverges: needs eta > -alpha-1");
    const BigFloat log_inv_rate = -log(FieldTraits<F>::to_bigfloat(d.rate()));
    BigFloat total(0L);
    for (std::size_t i = 0; i < d.kappa().size(); ++i) {
        const BigFloat s = BigFloat(alpha + static_cast<long>(i) + 1) + eta;  // j + eta + 1
        total += FieldTraits<F>::to_bigfloat(d.kappa()[i]) * exp(s * log_inv_rate + lgamma(s));
    }
    return total;
}

template <CoefficientField F>
F moment_fixed_trace(const FixedTraceDensity<F>& d, long eta) {
    const long alpha = d.params().alpha;
    const long n = d.params().n;
    if (eta <= -alpha - 1) {
        throw DomainError("moment of order " + std::to_string(eta) + " diverges (needs eta > -alpha-1)");
    }
    const F ratio = eta >= 0 ? F(F(1L) / rising_factorial(d.gamma(), eta))
                             : falling_factorial(F(d.gamma() - F(1L)), -eta);
    const F two_over_beta = F(F(2L) / d.params().beta.template value<F>());
    F total(0L);
    for (std::size_t i = 0; i < d.kappa().size(); ++i) {
        const long j = alpha + static_cast<long>(i);
        total += F(d.kappa()[i] * ipow(two_over_beta, j + 1) * factorial<F>(j + eta) / ipow(F(n), j + eta + 1));
    }
    return F(ratio * total);
}

template <CoefficientField F>
BigFloat moment_fixed_trace_real(const FixedTraceDensity<F>& d, const BigFloat& eta) {
    const long alpha = d.params().alpha;
    if (!(eta > BigFloat(-alpha - 1))) throw DomainError("moment diverges: needs eta > -alpha-1");
    const BigFloat gamma = FieldTraits<F>::to_bigfloat(d.gamma());
    const BigFloat log_two_over_beta = log(BigFloat(2L) / d.params().beta.approx());
    const BigFloat log_n = log(BigFloat(d.params().n));
    BigFloat total(0L);
    for (std::size_t i = 0; i < d.kappa().size(); ++i) {
        const long j = alpha + static_cast<long>(i);
        const BigFloat s = BigFloat(j + 1) + eta;
        total += FieldTraits<F>::to_bigfloat(d.kappa()[i]) *
                 exp(BigFloat(j + 1) * log_two_over_beta + lgamma(s) - s * log_n);
    }
    return total * exp(lgamma(gamma) - lgamma(gamma + eta));
}

// ---------------------------------------------------------------------------
// Delay times

EnsembleParams delay_time_params(long n, const Beta& beta) {
    if (n < 1) throw DomainError("n must be >= 1");
    if (!beta.is_rational()) {
        throw UnsupportedParameter("delay-time density needs beta*n/2 to be a non-negative integer; beta=" +
                                   beta.to_string());
    }
    const Rational alpha = beta.exact() * Rational(n) / Rational(2);
    if (alpha.get_den() != 1) {
        throw UnsupportedParameter("delay-time density needs beta*n/2 to be a non-negative integer; got " +
                                   alpha.get_str());
    }
    return EnsembleParams{n, alpha.get_num().get_si(), beta};
}

template <CoefficientField F>
DelayTimeDensity<F> delay_time_density(long n, const Beta& beta, double tau_h) {
    if (!(tau_h > 0.0)) throw DomainError("tau_H must be positive");
    return DelayTimeDensity<F>(ClosedFormDensity<F>::build(delay_time_params(n, beta)), tau_h);
}

template <CoefficientField F>
double DelayTimeDensity<F>::eval(double x) const {
    if (!(x > 0.0)) return 0.0;
    const double lambda = tau_h_ / x;
    if (!std::isfinite(lambda)) return 0.0;
    const double f = base_.eval(lambda);
    if (f == 0.0) return 0.0;
    return lambda * lambda / tau_h_ * f;
}

template <CoefficientField F>
double DelayTimeDensity<F>::cdf(double x) const {
    if (!(x > 0.0)) return 0.0;
    const double lambda = tau_h_ / x;
    if (!std::isfinite(lambda)) return 0.0;
    return base_.survival(lambda);
}

#define WLREC_INSTANTIATE(F)                                                        \
    template class ClosedFormDensity<F>;                                            \
    template class FixedTraceDensity<F>;                                            \
    template class DelayTimeDensity<F>;                                             \
    template F moment_unrestricted<F>(const ClosedFormDensity<F>&, long);           \
    template BigFloat moment_unrestricted_real<F>(const ClosedFormDensity<F>&, const BigFloat&); \
    template F moment_fixed_trace<F>(const FixedTraceDensity<F>&, long);            \
    template BigFloat moment_fixed_trace_real<F>(const FixedTraceDensity<F>&, const BigFloat&); \
    template DelayTimeDensity<F> delay_time_density<F>(long, const Beta&, double);

WLREC_INSTANTIATE(Rational)
WLREC_INSTANTIATE(BigFloat)

#undef WLREC_INSTANTIATE

}  // namespace wlrec
