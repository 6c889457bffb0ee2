#include "wlrec/beta.hpp"

#include <cctype>
#include <string>

namespace wlrec {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (std::isdigit(static_cast<unsigned char>(ch)) == 0) return false;
    }
    return true;
}

Rational parse_decimal(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    long exponent = 0;
    if (const auto epos = body.find_first_of("eE"); epos != std::string_view::npos) {
        std::string_view exp_text = body.substr(epos + 1);
        body = body.substr(0, epos);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) {
            throw UsageError("malformed number: '" + std::string(text) + "'");
        }
        exponent = std::stol(std::string(exp_text));
        if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    long fraction_digits = 0;
    if (const auto dot = body.find('.'); dot != std::string_view::npos) {
        const std::string_view whole = body.substr(0, dot);
        const std::string_view frac = body.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty())) {
            throw UsageError("malformed number: '" + std::string(text) + "'");
        }
        digits = std::string(whole) + std::string(frac);
        fraction_digits = static_cast<long>(frac.size());
    } else {
        if (!all_digits(body)) throw UsageError("malformed number: '" + std::string(text) + "'");
        digits = std::string(body);
    }
    Rational value{Integer(digits, 10)};
    Integer ten_power;
    const long shift = exponent - fraction_digits;
    mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift < 0) {
        value /= Rational(ten_power);
    } else {
        value *= Rational(ten_power);
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const Rational num = parse_decimal(text.substr(0, slash));
        const Rational den = parse_decimal(text.substr(slash + 1));
        if (sgn(den) == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
        return Rational(num / den);
    }
    return parse_decimal(text);
}

Beta::Beta(Rational coefficient, Constant constant) : coefficient_(std::move(coefficient)), constant_(constant) {
    coefficient_.canonicalize();
    if (sgn(coefficient_) <= 0) throw DomainError("beta must be positive, got " + to_string());
}

Beta Beta::parse(std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) == 0) s.push_back(static_cast<char>(std::tolower(ch)));
    }
    if (s.empty()) throw UsageError("empty beta");
    Constant constant = Constant::kOne;
    std::string_view head = s;
    if (head.ends_with("pi")) {
        constant = Constant::kPi;
        head.remove_suffix(2);
    } else if (head.ends_with("e") && (head.size() == 1 || std::isdigit(static_cast<unsigned char>(head[head.size() - 2])) ||
                                       head[head.size() - 2] == '*')) {
        // "e" alone, "2e" or "2*e"; decimal exponents such as "1e5" have digits after the e.
        constant = Constant::kE;
        head.remove_suffix(1);
    }
    if (constant != Constant::kOne && head.ends_with("*")) head.remove_suffix(1);
    Rational coefficient(1);
    if (!head.empty()) coefficient = parse_rational(head);
    if (constant != Constant::kOne && head.empty()) coefficient = 1;
    return Beta(coefficient, constant);
}

Rational Beta::exact() const {
    if (!is_rational()) {
        throw UnsupportedParameter("beta = " + to_string() + " is irrational; exact arithmetic is unavailable");
    }
    return coefficient_;
}

BigFloat Beta::approx() const {
    BigFloat out(coefficient_);
    switch (constant_) {
        case Constant::kPi: out *= const_pi(); break;
        case Constant::kE: out *= const_e(); break;
        case Constant::kOne: break;
    }
    return out;
}

double Beta::to_double() const { return approx().to_double(); }

std::string Beta::to_string() const {
    std::string head = coefficient_.get_str();
    switch (constant_) {
        case Constant::kOne: return head;
        case Constant::kPi: return (coefficient_ == 1 ? std::string() : head + "*") + "pi";
        case Constant::kE: return (coefficient_ == 1 ? std::string() : head + "*") + "e";
    }
    return head;
}

}  // namespace wlrec
