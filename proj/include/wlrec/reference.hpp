#pragma once

#include <string>
#include <vector>

#include "wlrec/bigfloat.hpp"

namespace wlrec {

/// A published closed form: prefactor * x^alpha * sum_k coeffs[k] x^k, coefficients ascending.
struct ReferencePolynomial {
    long n;
    long alpha;
    std::string beta;
    Rational prefactor;
    std::vector<Rational> coeffs;
};

/// kappa_j for j = alpha..n alpha of unrestricted-trace densities with rational beta.
const std::vector<ReferencePolynomial>& reference_unrestricted();
/// Fixed-trace reduced polynomials P with f_F = x^alpha (1 - n x)^(gamma - n alpha - 2) P(x).
const std::vector<ReferencePolynomial>& reference_fixed_trace();
/// 1F1 polynomials with rational beta (alpha = 0 in the x^alpha factor).
const std::vector<ReferencePolynomial>& reference_hyp1f1();

/// (n=3, alpha=2, beta=e) unrestricted kappa_2..kappa_6 at the current precision.
std::vector<BigFloat> reference_kappa_beta_e();
/// (n=3, alpha=2, beta=pi) fixed-trace reduced polynomial, ascending.
std::vector<BigFloat> reference_fixed_trace_beta_pi();
/// (n=3, alpha=2, beta=5 pi) 1F1 polynomial, ascending.
std::vector<BigFloat> reference_hyp1f1_beta_5pi();

struct ReferenceHypValue {
    long n;
    long alpha;
    std::string beta;
    double x;
    double value;
    /// Printed significant digits.
    int digits;
};

const std::vector<ReferenceHypValue>& reference_hyp1f1_values();

}  // namespace wlrec
