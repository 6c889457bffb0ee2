#include "wlrec/bigfloat.hpp"

#include <cstdlib>
#include <memory>

#include "wlrec/error.hpp"

namespace wlrec {

namespace {

thread_local mpfr_prec_t g_context_precision = BigFloat::kDefaultPrecision;

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

}  // namespace

mpfr_prec_t BigFloat::context_precision() { return g_context_precision; }

BigFloat::BigFloat() {
    mpfr_init2(value_, g_context_precision);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value) {
    mpfr_init2(value_, g_context_precision);
    mpfr_set_si(value_, value, kRound);
}

BigFloat::BigFloat(double value) {
    mpfr_init2(value_, g_context_precision);
    mpfr_set_d(value_, value, kRound);
}

BigFloat::BigFloat(const Rational& value) {
    mpfr_init2(value_, g_context_precision);
    mpfr_set_q(value_, value.get_mpq_t(), kRound);
}

BigFloat::BigFloat(const Integer& value) {
    mpfr_init2(value_, g_context_precision);
    mpfr_set_z(value_, value.get_mpz_t(), kRound);
}

BigFloat::BigFloat(const std::string& decimal) {
    mpfr_init2(value_, g_context_precision);
    char* end = nullptr;
    mpfr_strtofr(value_, decimal.c_str(), &end, 10, kRound);
    if (decimal.empty() || end == nullptr || *end != '\0') {
        mpfr_clear(value_);
        throw UsageError("not a decimal number: '" + decimal + "'");
    }
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, kRound);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, kRound);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits) const {
    if (mpfr_nan_p(value_)) return "nan";
    if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
    if (digits <= 0) {
        digits = static_cast<int>(mpfr_get_str_ndigits(10, precision()));
    }
    char* text = nullptr;
    const std::string format = "%." + std::to_string(digits - 1) + "Re";
    if (mpfr_asprintf(&text, format.c_str(), value_) < 0) {
        throw NumericalError("mpfr_asprintf failed");
    }
    std::string out(text);
    mpfr_free_str(text);
    return out;
}

namespace {

// Re-rounds `target` to the context precision before an in-place operation.
void to_context(mpfr_t target) {
    if (mpfr_get_prec(target) != g_context_precision) {
        mpfr_prec_round(target, g_context_precision, kRound);
    }
}

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
    to_context(value_);
    mpfr_add(value_, value_, rhs.value_, kRound);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
    to_context(value_);
    mpfr_sub(value_, value_, rhs.value_, kRound);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
    to_context(value_);
    mpfr_mul(value_, value_, rhs.value_, kRound);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
    to_context(value_);
    mpfr_div(value_, value_, rhs.value_, kRound);
    return *this;
}

BigFloat BigFloat::operator-() const {
    BigFloat out;
    mpfr_neg(out.value_, value_, kRound);
    return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.value_, b.value_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

PrecisionScope::PrecisionScope(mpfr_prec_t bits) : saved_(g_context_precision) {
    if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
        throw UsageError("precision out of range: " + std::to_string(bits));
    }
    g_context_precision = bits;
}

PrecisionScope::~PrecisionScope() { g_context_precision = saved_; }

namespace {

template <int (*Fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
BigFloat unary(const BigFloat& x) {
    BigFloat out;
    Fn(out.raw(), x.raw(), kRound);
    return out;
}

}  // namespace

BigFloat rounded(const BigFloat& x) {
    BigFloat out;
    mpfr_set(out.raw(), x.raw(), kRound);
    return out;
}

BigFloat abs(const BigFloat& x) {
    BigFloat out;
    mpfr_abs(out.raw(), x.raw(), kRound);
    return out;
}
BigFloat sqrt(const BigFloat& x) { return unary<mpfr_sqrt>(x); }
BigFloat cbrt(const BigFloat& x) { return unary<mpfr_cbrt>(x); }
BigFloat exp(const BigFloat& x) { return unary<mpfr_exp>(x); }
BigFloat log(const BigFloat& x) { return unary<mpfr_log>(x); }
BigFloat log1p(const BigFloat& x) { return unary<mpfr_log1p>(x); }
BigFloat cos(const BigFloat& x) { return unary<mpfr_cos>(x); }
BigFloat tgamma(const BigFloat& x) { return unary<mpfr_gamma>(x); }

BigFloat lgamma(const BigFloat& x) {
    BigFloat out;
    int sign = 0;
    mpfr_lgamma(out.raw(), &sign, x.raw(), kRound);
    return out;
}

BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
    BigFloat out;
    mpfr_pow(out.raw(), base.raw(), exponent.raw(), kRound);
    return out;
}

BigFloat pow(const BigFloat& base, long exponent) {
    BigFloat out;
    mpfr_pow_si(out.raw(), base.raw(), exponent, kRound);
    return out;
}

BigFloat const_pi() {
    BigFloat out;
    mpfr_const_pi(out.raw(), kRound);
    return out;
}

BigFloat const_e() {
    BigFloat one(1L);
    return exp(one);
}

}  // namespace wlrec
