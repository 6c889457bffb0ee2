#include "wlrec/verify.hpp"

#include <cmath>
#include <sstream>

#include "wlrec/density.hpp"
#include "wlrec/hyp.hpp"
#include "wlrec/oracle.hpp"
#include "wlrec/reference.hpp"

namespace wlrec {

namespace {

std::string label(const std::string& kind, long n, long alpha, const std::string& beta) {
    return kind + " n=" + std::to_string(n) + " alpha=" + std::to_string(alpha) + " beta=" + beta;
}

std::string format_double(double v) {
    std::ostringstream s;
    s.precision(10);
    s << v;
    return s.str();
}

CheckResult exact_match(const std::string& name, const std::vector<Rational>& got, const ReferencePolynomial& ref) {
    CheckResult r{name, got.size() == ref.coeffs.size(), ""};
    for (std::size_t k = 0; r.pass && k < got.size(); ++k) {
        if (got[k] != ref.prefactor * ref.coeffs[k]) {
            r.pass = false;
            r.detail = "coefficient " + std::to_string(k) + ": got " + got[k].get_str() + ", expected " +
                       Rational(ref.prefactor * ref.coeffs[k]).get_str();
        }
    }
    if (r.pass) r.detail = std::to_string(got.size()) + " coefficients equal";
    else if (r.detail.empty()) r.detail = "length mismatch";
    return r;
}

CheckResult float_match(const std::string& name, const std::vector<BigFloat>& got, const std::vector<BigFloat>& ref,
                        double tol) {
    CheckResult r{name, got.size() == ref.size(), ""};
    double worst = 0.0;
    for (std::size_t k = 0; r.pass && k < got.size(); ++k) {
        worst = std::max(worst, (abs(got[k] - ref[k]) / abs(ref[k])).to_double());
    }
    r.pass = r.pass && worst <= tol;
    r.detail = got.size() == ref.size() ? "max relative error " + format_double(worst) : "length mismatch";
    return r;
}

void table_checks(std::vector<CheckResult>& out) {
    for (const auto& ref : reference_unrestricted()) {
        const EnsembleParams p{ref.n, ref.alpha, Beta::parse(ref.beta)};
        out.push_back(exact_match(label("density", ref.n, ref.alpha, ref.beta),
                                  ClosedFormDensity<Rational>::build(p).kappa(), ref));
    }
    {
        PrecisionScope scope(256);
        const EnsembleParams p{3, 2, Beta::parse("e")};
        out.push_back(float_match(label("density", 3, 2, "e"), ClosedFormDensity<BigFloat>::build(p).kappa(),
                                  reference_kappa_beta_e(), 1e-10));
    }
    for (const auto& ref : reference_fixed_trace()) {
        const EnsembleParams p{ref.n, ref.alpha, Beta::parse(ref.beta)};
        out.push_back(exact_match(label("fixed-trace", ref.n, ref.alpha, ref.beta),
                                  FixedTraceDensity<Rational>::build(p).reduced_polynomial().coeffs(), ref));
    }
    {
        PrecisionScope scope(256);
        const EnsembleParams p{3, 2, Beta::parse("pi")};
        out.push_back(float_match(label("fixed-trace", 3, 2, "pi"),
                                  FixedTraceDensity<BigFloat>::build(p).reduced_polynomial().coeffs(),
                                  reference_fixed_trace_beta_pi(), 1e-10));
    }
    for (const auto& ref : reference_hyp1f1()) {
        const EnsembleParams p{ref.n, ref.alpha, Beta::parse(ref.beta)};
        out.push_back(exact_match(label("hyp1f1", ref.n, ref.alpha, ref.beta),
                                  hyp1f1_matrix<Rational>(p).poly.coeffs(), ref));
    }
    {
        PrecisionScope scope(256);
        const EnsembleParams p{3, 2, Beta::parse("5pi")};
        out.push_back(float_match(label("hyp1f1", 3, 2, "5pi"), hyp1f1_matrix<BigFloat>(p).poly.coeffs(),
                                  reference_hyp1f1_beta_5pi(), 1e-10));
    }
    for (const auto& ref : reference_hyp1f1_values()) {
        const EnsembleParams p{ref.n, ref.alpha, Beta::parse(ref.beta)};
        const double got =
            with_field(default_field(p), [&]<class F>() { return hyp1f1_matrix<F>(p).eval(ref.x); });
        const double rel = std::abs(got - ref.value) / std::abs(ref.value);
        out.push_back({label("hyp1f1 value", ref.n, ref.alpha, ref.beta) + " x=" + format_double(ref.x), rel <= 1e-4,
                       "got " + format_double(got) + ", printed " + format_double(ref.value)});
    }
}

void appendix_checks(std::vector<CheckResult>& out) {
    const EnsembleParams p{5, 3, Beta::parse("2")};
    const Rational kappa = kappa_via_partitions_exact(p, 7);
    const Rational from_recursion = ClosedFormDensity<Rational>::build(p).kappa_at(7);
    out.push_back({"kappa_7 partition sum", kappa == Rational(159, 16) && kappa == from_recursion,
                   "partition sum " + kappa.get_str() + ", recursion " + from_recursion.get_str()});
    const std::vector<std::pair<std::vector<long>, double>> moments = {
        {{0, 2, 3, 3}, 3175200.0}, {{1, 1, 3, 3}, 1360800.0}, {{1, 2, 2, 3}, 680400.0}, {{2, 2, 2, 2}, 302400.0}};
    for (const auto& [expo, expected] : moments) {
        const double got = mixed_moment(p, expo).value;
        std::string name = "mixed moment";
        for (long e : expo) name += " " + std::to_string(e);
        out.push_back({name, std::abs(got - expected) <= 1e-8 * expected,
                       "quadrature " + format_double(got) + ", expected " + format_double(expected)});
    }
}

void small_checks(std::vector<CheckResult>& out) {
    for (long n = 2; n <= 3; ++n) {
        for (long alpha = 0; alpha <= 3; ++alpha) {
            for (const char* beta : {"2", "4"}) {
                const EnsembleParams p{n, alpha, Beta::parse(beta)};
                const auto g = compute_g<Rational>(p);
                double worst = 0.0;
                for (double x : {0.0, 0.5, 1.0, 5.0}) {
                    const double exact = poly_eval(g.poly, Rational(x)).get_d();
                    const double quad = quadrature_g(p, x, 0, false).value;
                    worst = std::max(worst, std::abs(quad - exact) / std::abs(exact));
                }
                out.push_back({label("g vs quadrature", n, alpha, beta), worst <= 1e-8,
                               "max relative difference " + format_double(worst)});
            }
        }
    }
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const std::string& suite) {
    std::vector<CheckResult> out;
    const bool all = suite == "all";
    if (!all && suite != "tables" && suite != "appendixB" && suite != "small") {
        throw UsageError("unknown verify suite '" + suite + "' (expected small, appendixB, tables or all)");
    }
    if (all || suite == "tables") table_checks(out);
    if (all || suite == "appendixB") appendix_checks(out);
    if (all || suite == "small") small_checks(out);
    return out;
}

}  // namespace wlrec
