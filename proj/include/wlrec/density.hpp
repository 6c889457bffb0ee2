#pragma once

#include <vector>

#include "wlrec/recursion.hpp"

namespace wlrec {

/// Working precision for pointwise evaluation of densities and CDFs. All
/// evaluated sums have non-negative terms, so this is not a cancellation guard.
inline constexpr mpfr_prec_t kEvalPrecision = 128;

/// Smallest-eigenvalue density of the unrestricted-trace ensemble,
///   f(x) = exp(-beta n x / 2) sum_{j=alpha}^{n alpha} kappa_j x^j.
template <CoefficientField F>
class ClosedFormDensity {
public:
    /// kappa_j = c_{n,alpha,beta} g_{j-alpha}; validates both normalization routes.
    static ClosedFormDensity build(const EnsembleParams& params);
    static ClosedFormDensity from_g(const GPolynomial<F>& g);

    const EnsembleParams& params() const { return params_; }
    long first_power() const { return params_.alpha; }
    long last_power() const { return params_.alpha * params_.n; }
    /// Coefficients kappa_alpha, ..., kappa_{n alpha}.
    const std::vector<F>& kappa() const { return kappa_; }
    F kappa_at(long j) const;
    const F& norm_constant() const { return c_; }
    const F& gamma() const { return gamma_; }
    /// beta n / 2.
    const F& rate() const { return rate_; }

    /// sum_j kappa_j Gamma(j+1) (2/(beta n))^(j+1); equals one exactly in Rational mode.
    F total_mass() const;

    /// Throws DomainError for x < 0.
    double eval(double x) const;
    BigFloat eval_big(const BigFloat& x) const;
    /// Natural log of f(x); -inf at x = 0 when alpha > 0. Finite for very large n.
    double log_eval(double x) const;
    double cdf(double x) const;
    /// 1 - cdf(x), accurate in the upper tail.
    double survival(double x) const;

    /// Q with 1 - F(x) = exp(-beta n x / 2) Q(x); exact in Rational mode.
    const DensePolynomial<F>& survival_polynomial() const { return survival_; }

private:
    ClosedFormDensity() = default;
    void prepare_eval();
    BigFloat horner(const std::vector<BigFloat>& coeffs, const BigFloat& x) const;

    EnsembleParams params_;
    F c_;
    F gamma_;
    F rate_;
    std::vector<F> kappa_;
    DensePolynomial<F> survival_;
    std::vector<BigFloat> kappa_eval_;
    std::vector<BigFloat> survival_eval_;
    BigFloat rate_eval_;
};

/// Smallest-eigenvalue density of the unit-trace ensemble F = W / tr W,
///   f_F(x) = sum_j phi_j x^j (1 - n x)^(gamma - j - 2),  0 <= x < 1/n,
/// with phi_j = (2/beta)^(j+1) kappa_j Gamma(gamma) / Gamma(gamma - j - 1).
template <CoefficientField F>
class FixedTraceDensity {
public:
    static FixedTraceDensity build(const EnsembleParams& params);
    static FixedTraceDensity from_unrestricted(const ClosedFormDensity<F>& base);

    const EnsembleParams& params() const { return params_; }
    const F& gamma() const { return gamma_; }
    const std::vector<F>& kappa() const { return kappa_; }
    /// phi_alpha, ..., phi_{n alpha}.
    const std::vector<F>& weights() const { return phi_; }
    /// Mixture weights w_j = kappa_j j! (2/(beta n))^(j+1) of the incomplete-beta
    /// decomposition of the CDF; they sum to one.
    const std::vector<F>& beta_mixture() const { return mixture_; }

    /// Zero for x >= 1/n; throws DomainError for x < 0.
    double eval(double x) const;
    BigFloat eval_big(const BigFloat& x) const;
    double cdf(double x) const;

    /// Exact value at rational x; requires Rational mode and integer gamma.
    Rational eval_exact(const Rational& x) const;

    /// f_F(x) = x^alpha (1 - n x)^(gamma - n alpha - 2) P(x); returns P.
    DensePolynomial<F> reduced_polynomial() const;
    /// gamma - n alpha - 2, the exponent of (1 - n x) factored out of P.
    F reduced_exponent() const;

private:
    FixedTraceDensity() = default;

    EnsembleParams params_;
    F gamma_;
    std::vector<F> kappa_;
    std::vector<F> phi_;
    std::vector<F> mixture_;
    std::vector<BigFloat> phi_eval_;
    std::vector<BigFloat> exponent_eval_;
    std::vector<double> mixture_eval_;
    std::vector<double> ibeta_b_;
};

/// <x^eta> of the unrestricted density for integer eta > -alpha-1; exact in Rational mode.
template <CoefficientField F>
F moment_unrestricted(const ClosedFormDensity<F>& d, long eta);
/// Real eta > -alpha-1.
template <CoefficientField F>
BigFloat moment_unrestricted_real(const ClosedFormDensity<F>& d, const BigFloat& eta);

/// <x^eta>_F = Gamma(gamma)/Gamma(gamma+eta) sum_j kappa_j (2/beta)^(j+1) Gamma(j+eta+1) / n^(j+eta+1).
template <CoefficientField F>
F moment_fixed_trace(const FixedTraceDensity<F>& d, long eta);
template <CoefficientField F>
BigFloat moment_fixed_trace_real(const FixedTraceDensity<F>& d, const BigFloat& eta);

/// Density of the largest proper delay time tau_max = tau_H / lambda_min, where
/// lambda_min follows the unrestricted density with alpha = beta n / 2.
template <CoefficientField F>
class DelayTimeDensity {
public:
    DelayTimeDensity(ClosedFormDensity<F> base, double tau_h) : base_(std::move(base)), tau_h_(tau_h) {}

    const ClosedFormDensity<F>& base() const { return base_; }
    double tau_h() const { return tau_h_; }

    /// (tau_H / x^2) f(tau_H / x) for x > 0, zero otherwise.
    double eval(double x) const;
    double cdf(double x) const;

private:
    ClosedFormDensity<F> base_;
    double tau_h_;
};

/// alpha = beta n / 2 must be a non-negative integer.
EnsembleParams delay_time_params(long n, const Beta& beta);

template <CoefficientField F>
DelayTimeDensity<F> delay_time_density(long n, const Beta& beta, double tau_h);

}  // namespace wlrec
