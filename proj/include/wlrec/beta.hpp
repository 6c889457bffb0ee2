#pragma once

#include <string>
#include <string_view>

#include "wlrec/error.hpp"
#include "wlrec/field.hpp"

namespace wlrec {

/// The Dyson index beta, held symbolically as (rational coefficient) x
/// (1 | pi | e) so that rational values stay exact and pi/e multiples can be
/// evaluated at any precision.
class Beta {
public:
    enum class Constant { kOne, kPi, kE };

    Beta() : Beta(Rational(2)) {}
    explicit Beta(Rational coefficient, Constant constant = Constant::kOne);

    /// Accepts "p/q", decimal literals (taken as the exact rational they spell),
    /// "pi", "e", and rational multiples such as "5pi", "5*pi", "1/2e".
    static Beta parse(std::string_view text);

    bool is_rational() const { return constant_ == Constant::kOne; }
    const Rational& coefficient() const { return coefficient_; }
    Constant constant() const { return constant_; }

    /// Exact value; throws UnsupportedParameter for irrational beta.
    Rational exact() const;
    /// Value rounded at the current context precision.
    BigFloat approx() const;
    double to_double() const;

    template <CoefficientField F>
    F value() const;

    std::string to_string() const;

    friend bool operator==(const Beta& a, const Beta& b) {
        return a.constant_ == b.constant_ && a.coefficient_ == b.coefficient_;
    }

private:
    Rational coefficient_;
    Constant constant_;
};

template <>
inline Rational Beta::value<Rational>() const { return exact(); }

template <>
inline BigFloat Beta::value<BigFloat>() const { return approx(); }

/// Parses an exact rational from "p/q" or a decimal literal ("0.25", "-3", "1e-2").
Rational parse_rational(std::string_view text);

}  // namespace wlrec
