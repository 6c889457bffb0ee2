#pragma once

#include <concepts>
#include <string>

#include "wlrec/bigfloat.hpp"

namespace wlrec {

/// Per-field operations needed by the generic numerics.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr bool kExact = true;
    static Rational from_rational(const Rational& q) { return q; }
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static double to_double(const Rational& a) { return a.get_d(); }
    static BigFloat to_bigfloat(const Rational& a) { return BigFloat(a); }
    /// Identifies the field of a coefficient; exact values share one field.
    static mpfr_prec_t tag(const Rational&) { return 0; }
    static std::string mode() { return "exact"; }
};

template <>
struct FieldTraits<BigFloat> {
    static constexpr bool kExact = false;
    static BigFloat from_rational(const Rational& q) { return BigFloat(q); }
    static bool is_zero(const BigFloat& a) { return a.is_zero(); }
    static double to_double(const BigFloat& a) { return a.to_double(); }
    static BigFloat to_bigfloat(const BigFloat& a) { return a; }
    static mpfr_prec_t tag(const BigFloat& a) { return a.precision(); }
    static std::string mode() { return "float(" + std::to_string(BigFloat::context_precision()) + ")"; }
};

template <class F>
concept CoefficientField = requires(const F& a, const F& b) {
    { a + b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { FieldTraits<F>::is_zero(a) } -> std::same_as<bool>;
};

/// k! in the field (exact for Rational).
template <CoefficientField F>
F factorial(long k) {
    F out(1L);
    for (long i = 2; i <= k; ++i) out *= F(i);
    return out;
}

/// Rising factorial z (z+1) ... (z+k-1); equals Gamma(z+k)/Gamma(z).
template <CoefficientField F>
F rising_factorial(const F& z, long k) {
    F out(1L);
    for (long i = 0; i < k; ++i) out *= F(z + F(i));
    return out;
}

/// Falling factorial z (z-1) ... (z-k+1); equals Gamma(z+1)/Gamma(z-k+1).
template <CoefficientField F>
F falling_factorial(const F& z, long k) {
    F out(1L);
    for (long i = 0; i < k; ++i) out *= F(z - F(i));
    return out;
}

/// Integer power by repeated squaring; negative exponents invert.
template <CoefficientField F>
F ipow(F base, long exponent) {
    const bool invert = exponent < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    F out(1L);
    while (e != 0) {
        if (e & 1UL) out *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    if (invert) return F(F(1L) / out);
    return out;
}

}  // namespace wlrec
