#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include <gmpxx.h>

namespace wlrec {

/// Exact rational scalar; GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Fixed-precision binary floating point backed by MPFR.
///
/// Every arithmetic result is rounded to nearest at the *context* precision
/// of the calling thread (see PrecisionScope), not at the precision of the
/// operands. Values created under different contexts therefore keep their
/// own precision until they take part in a new operation.
class BigFloat {
public:
    static constexpr mpfr_prec_t kDefaultPrecision = 256;

    /// Precision (mantissa bits) used for new values on this thread.
    static mpfr_prec_t context_precision();

    BigFloat();
    BigFloat(long value);  // NOLINT(google-explicit-constructor): integer literals in generic code
    BigFloat(int value) : BigFloat(static_cast<long>(value)) {}
    explicit BigFloat(double value);
    explicit BigFloat(const Rational& value);
    explicit BigFloat(const Integer& value);
    /// Parses a decimal literal, e.g. "3.14159" or "1e-5".
    explicit BigFloat(const std::string& decimal);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Scientific notation with `digits` significant digits (0 = enough to round-trip).
    std::string to_string(int digits = 0) const;

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }

    mpfr_ptr raw() { return value_; }
    mpfr_srcptr raw() const { return value_; }

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);
    BigFloat operator-() const;

    friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
    friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
    friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
    friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

private:
    mpfr_t value_;
};

/// Sets the context precision of the current thread for the lifetime of the scope.
class PrecisionScope {
public:
    explicit PrecisionScope(mpfr_prec_t bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    mpfr_prec_t saved_;
};

/// Copy of x rounded to the context precision.
BigFloat rounded(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat cbrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log1p(const BigFloat& x);
BigFloat pow(const BigFloat& base, const BigFloat& exponent);
BigFloat pow(const BigFloat& base, long exponent);
BigFloat cos(const BigFloat& x);
BigFloat tgamma(const BigFloat& x);
BigFloat lgamma(const BigFloat& x);
BigFloat const_pi();
BigFloat const_e();

}  // namespace wlrec
