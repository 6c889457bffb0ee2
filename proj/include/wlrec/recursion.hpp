#pragma once

#include <string>
#include <utility>

#include "wlrec/beta.hpp"
#include "wlrec/polynomial.hpp"

namespace wlrec {

/// Parameters (n, alpha, beta) of the beta-Wishart-Laguerre ensemble with
/// weight lambda^alpha exp(-beta lambda / 2).
struct EnsembleParams {
    long n = 1;
    long alpha = 0;
    Beta beta;

    /// Throws DomainError for n < 1 and UnsupportedParameter for alpha < 0.
    void validate() const;

    /// gamma = n (alpha + beta (n-1) / 2 + 1).
    template <CoefficientField F>
    F gamma() const {
        const F b = beta.value<F>();
        return F(F(n) * F(F(alpha) + b * F(n - 1) / F(2L) + F(1L)));
    }

    /// Degree alpha (n-1) of g_{n,alpha,beta}.
    long g_degree() const { return alpha * (n - 1); }

    std::string to_string() const;
};

/// Parses an exponent that must be a non-negative integer ("3", "3.0").
long parse_alpha(const std::string& text);

/// g_{n,alpha,beta} together with the parameters that produced it.
template <CoefficientField F>
struct GPolynomial {
    EnsembleParams params;
    DensePolynomial<F> poly;
};

/// Runs the alpha-lift recursion from g_{n,0,beta} = 1.
template <CoefficientField F>
GPolynomial<F> compute_g(const EnsembleParams& params);

/// Selberg normalization C_{n,alpha,beta} of the joint eigenvalue density.
/// Accepts real alpha > -1.
BigFloat selberg_constant_C(long n, const BigFloat& alpha, const BigFloat& beta);
BigFloat selberg_constant_C(const EnsembleParams& params);

/// c_{n,alpha,beta} from its Gamma-product closed form.
BigFloat norm_constant_c_gamma(const EnsembleParams& params);

/// c_{n,alpha,beta} = 1 / int_0^inf exp(-beta n x / 2) x^alpha g(x) dx, summed
/// termwise with Gamma(alpha+j+1) = (alpha+j)!; exact for Rational.
template <CoefficientField F>
F norm_constant_c_integral(const EnsembleParams& params, const DensePolynomial<F>& g);

/// Both routes; returns the integral route and throws ConsistencyError when the
/// two differ by more than kNormRouteTolerance relative.
template <CoefficientField F>
F norm_constant_c(const GPolynomial<F>& g);

inline constexpr double kNormRouteTolerance = 1e-10;

/// Arithmetic backend selected for one computation.
struct FieldChoice {
    bool exact = true;
    mpfr_prec_t bits = BigFloat::kDefaultPrecision;
    std::string describe() const { return exact ? "exact" : "float(" + std::to_string(bits) + ")"; }
};

/// Polynomials above this degree are computed in floating point by default.
inline constexpr long kExactDegreeLimit = 2000;
inline constexpr mpfr_prec_t kLargeDegreePrecision = 512;

/// Exact rationals when beta is rational and the degree is moderate; BigFloat
/// otherwise, at no less than 512 bits past kExactDegreeLimit.
FieldChoice default_field(const EnsembleParams& params, mpfr_prec_t requested_bits = BigFloat::kDefaultPrecision);

/// Invokes fn.template operator()<F>() with the field of `choice`, inside a
/// PrecisionScope for floating-point runs.
template <class Fn>
decltype(auto) with_field(const FieldChoice& choice, Fn&& fn) {
    PrecisionScope scope(choice.bits);
    if (choice.exact) return std::forward<Fn>(fn).template operator()<Rational>();
    return std::forward<Fn>(fn).template operator()<BigFloat>();
}

}  // namespace wlrec
