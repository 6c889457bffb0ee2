#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "wlrec/error.hpp"
#include "wlrec/field.hpp"

namespace wlrec {

/// Dense univariate polynomial; coeffs()[i] is the coefficient of x^i.
///
/// Canonical form: no trailing zero coefficients, and the zero polynomial is
/// the empty vector. Every constructor and operation re-establishes it.
template <CoefficientField F>
class DensePolynomial {
public:
    DensePolynomial() = default;
    explicit DensePolynomial(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    DensePolynomial(std::initializer_list<F> coeffs) : coeffs_(coeffs) { trim(); }

    static DensePolynomial constant(F value) { return DensePolynomial(std::vector<F>{std::move(value)}); }

    const std::vector<F>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }

    F coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : F(0L); }

    friend bool operator==(const DensePolynomial& a, const DensePolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && FieldTraits<F>::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<F> coeffs_;
};

namespace detail {

template <CoefficientField F>
void require_same_field(const DensePolynomial<F>& p, const DensePolynomial<F>& q) {
    if (p.is_zero() || q.is_zero()) return;
    if (FieldTraits<F>::tag(p.coeffs().front()) != FieldTraits<F>::tag(q.coeffs().front())) {
        throw UsageError("polynomials carry coefficients from different fields (precision mismatch)");
    }
}

}  // namespace detail

template <CoefficientField F>
DensePolynomial<F> poly_add(const DensePolynomial<F>& p, const DensePolynomial<F>& q) {
    detail::require_same_field(p, q);
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<F> out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size() && i < b.size()) {
            out[i] = a[i] + b[i];
        } else {
            out[i] = i < a.size() ? a[i] : b[i];
        }
    }
    return DensePolynomial<F>(std::move(out));
}

template <CoefficientField F>
DensePolynomial<F> poly_scale(const DensePolynomial<F>& p, const F& factor) {
    std::vector<F> out;
    out.reserve(p.size());
    for (const F& c : p.coeffs()) out.push_back(F(c * factor));
    return DensePolynomial<F>(std::move(out));
}

template <CoefficientField F>
DensePolynomial<F> poly_sub(const DensePolynomial<F>& p, const DensePolynomial<F>& q) {
    return poly_add(p, poly_scale(q, F(-1L)));
}

template <CoefficientField F>
DensePolynomial<F> poly_mul(const DensePolynomial<F>& p, const DensePolynomial<F>& q) {
    detail::require_same_field(p, q);
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<F> out(p.size() + q.size() - 1, F(0L));
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p.coeffs()[i] * q.coeffs()[j];
    }
    return DensePolynomial<F>(std::move(out));
}

template <CoefficientField F>
DensePolynomial<F> poly_derivative(const DensePolynomial<F>& p) {
    if (p.size() <= 1) return {};
    std::vector<F> out;
    out.reserve(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(F(p.coeffs()[i] * F(static_cast<long>(i))));
    return DensePolynomial<F>(std::move(out));
}

/// Horner evaluation; exact for Rational.
template <CoefficientField F>
F poly_eval(const DensePolynomial<F>& p, const F& x) {
    F acc(0L);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

/// (x + a) s1 - b x s1' + c x s0, the single lift of the smallest-eigenvalue
/// recursion. Coefficient k of the result is (a - b k) s1[k] + s1[k-1] + c s0[k-1].
template <CoefficientField F>
DensePolynomial<F> poly_combine_recursion_step(const DensePolynomial<F>& s1, const DensePolynomial<F>& s0,
                                               const F& a, const F& b, const F& c) {
    detail::require_same_field(s1, s0);
    const auto& p = s1.coeffs();
    const auto& q = s0.coeffs();
    const std::size_t len = std::max(p.size(), q.size()) + 1;
    std::vector<F> out(len, F(0L));
    F term;
    for (std::size_t k = 0; k < p.size(); ++k) {
        term = b;
        term *= F(static_cast<long>(k));
        term -= a;
        term *= p[k];
        out[k] -= term;
        out[k + 1] += p[k];
    }
    if (!FieldTraits<F>::is_zero(c)) {
        for (std::size_t k = 0; k < q.size(); ++k) {
            term = c;
            term *= q[k];
            out[k + 1] += term;
        }
    }
    return DensePolynomial<F>(std::move(out));
}

}  // namespace wlrec
