#include "wlrec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace wlrec {

namespace {

// Number of Jacobi-matrix eigenvalues below x for the Laguerre weight t^a e^{-t}.
long jacobi_count_below(int m, double a, double x) {
    long count = 0;
    double q = 1.0;
    for (int k = 0; k < m; ++k) {
        const double off_sq = k > 0 ? static_cast<double>(k) * (k + a) : 0.0;
        q = (2.0 * k + 1.0 + a) - x - (k > 0 ? off_sq / q : 0.0);
        if (q == 0.0) q = -std::numeric_limits<double>::min();
        if (q < 0.0) ++count;
    }
    return count;
}

// L_m^{(a)}(x) and L_{m-1}^{(a)}(x) by the three-term recurrence.
std::pair<BigFloat, BigFloat> laguerre_pair(int m, const BigFloat& a, const BigFloat& x) {
    BigFloat prev(1L);
    BigFloat cur = BigFloat(1L) + a - x;
    if (m == 0) return {prev, BigFloat(0L)};
    for (int k = 1; k < m; ++k) {
        BigFloat next = (BigFloat(2L * k + 1) + a - x) * cur - (BigFloat(static_cast<long>(k)) + a) * prev;
        next /= BigFloat(static_cast<long>(k + 1));
        prev = cur;
        cur = next;
    }
    return {cur, prev};
}

double int_pow(double x, long k) {
    double out = 1.0;
    for (; k > 0; k >>= 1, x *= x) {
        if (k & 1) out *= x;
    }
    return out;
}

class NeumaierSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) comp_ += (sum_ - t) + v;
        else comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

void check_oracle_params(const EnsembleParams& params) {
    params.validate();
    if (params.n > kOracleMaxN) {
        throw UnsupportedParameter("quadrature oracle supports n <= " + std::to_string(kOracleMaxN) + ", got n = " +
                                   std::to_string(params.n));
    }
}

// Ratio of sum_w F(l) h(l) to sum_w F(l) over the ordered region l_1 < ... < l_d,
// in coordinates l_1 and gaps u_k = l_{k+1} - l_k. The weight lambda^beta exp(-beta lambda/2)
// of l_1 and the adjacent Vandermonde factors u_k^beta are absorbed into Gauss-Laguerre rules;
// F collects the remaining factors, all of them positive sums, so F is a polynomial for integer beta.
double tensor_ratio(const EnsembleParams& params, int m, const std::function<double(const std::vector<double>&)>& h) {
    const long dims = params.n - 1;
    if (dims == 0) return h({});
    const double beta = params.beta.to_double();
    const GaussLaguerreRule rule = gauss_laguerre(m, beta);
    const long integer_beta = beta == std::floor(beta) && beta <= 64.0 ? static_cast<long>(beta) : 0;
    // sum_k l_k = d l_1 + sum_k (d - k) u_k fixes the exponential rate of every axis.
    std::vector<double> scale(static_cast<std::size_t>(dims));
    for (long k = 0; k < dims; ++k) scale[k] = 2.0 / (beta * static_cast<double>(dims - k));

    std::vector<int> idx(static_cast<std::size_t>(dims), 0);
    std::vector<double> point(static_cast<std::size_t>(dims));
    NeumaierSum num;
    NeumaierSum den;
    for (;;) {
        double weight = rule.weights[idx[0]];
        point[0] = scale[0] * rule.nodes[idx[0]];
        for (long k = 1; k < dims; ++k) {
            point[k] = point[k - 1] + scale[k] * rule.nodes[idx[k]];
            weight *= rule.weights[idx[k]];
        }
        double rest = 1.0;
        for (long k = 1; k < dims; ++k) rest *= point[k];
        for (long i = 0; i < dims; ++i) {
            for (long j = i + 2; j < dims; ++j) rest *= point[j] - point[i];
        }
        const double w = weight * (integer_beta > 0 ? int_pow(rest, integer_beta) : std::pow(rest, beta));
        if (w != 0.0) {
            num.add(w * h(point));
            den.add(w);
        }
        long k = 0;
        while (k < dims && ++idx[k] == m) idx[k++] = 0;
        if (k == dims) break;
    }
    return num.value() / den.value();
}

QuadratureResult tensor_quadrature(const EnsembleParams& params, int nodes, bool estimate_error,
                                   const std::function<double(const std::vector<double>&)>& h) {
    QuadratureResult result;
    result.nodes = nodes;
    result.value = tensor_ratio(params, nodes, h);
    if (estimate_error && params.n > 1) {
        const double refined = tensor_ratio(params, nodes + kRefineStep, h);
        const double scale = std::max(std::abs(result.value), std::numeric_limits<double>::min());
        result.error_estimate = std::abs(refined - result.value) / scale;
        result.converged = result.error_estimate <= kOracleTolerance;
    }
    return result;
}

int resolve_nodes(const EnsembleParams& params, int nodes) {
    if (nodes == 0) return default_oracle_nodes(params);
    const double beta = params.beta.to_double();
    const double minimum = static_cast<double>(params.alpha * (params.n - 1)) / 2.0 + params.n * beta / 2.0 + 5.0;
    if (nodes < minimum) {
        throw UsageError("quadrature needs at least " + std::to_string(static_cast<int>(std::ceil(minimum))) +
                         " nodes per axis, got " + std::to_string(nodes));
    }
    return nodes;
}

Rational factorial_q(long k) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(out);
}

long even_beta(const EnsembleParams& params, const char* what) {
    if (params.beta.is_rational()) {
        const Rational b = params.beta.exact();
        if (b.get_den() == 1 && b.get_num() > 0 && b.get_num() % 2 == 0) return b.get_num().get_si();
    }
    throw UnsupportedParameter(std::string(what) + " needs an even integer beta, got beta = " + params.beta.to_string());
}

using Monomials = std::map<std::vector<long>, Integer>;

// Expansion of prod_{i<j} (l_i - l_j)^beta over `dims` variables.
Monomials vandermonde_power(long dims, long beta) {
    Monomials poly{{std::vector<long>(static_cast<std::size_t>(dims), 0), Integer(1)}};
    for (long i = 0; i < dims; ++i) {
        for (long j = i + 1; j < dims; ++j) {
            for (long rep = 0; rep < beta; ++rep) {
                Monomials next;
                for (const auto& [expo, coeff] : poly) {
                    auto up_i = expo;
                    ++up_i[i];
                    next[up_i] += coeff;
                    auto up_j = expo;
                    ++up_j[j];
                    next[up_j] -= coeff;
                }
                std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
                poly = std::move(next);
            }
        }
    }
    return poly;
}

}  // namespace

GaussLaguerreRule gauss_laguerre(int m, double a) {
    if (m < 1) throw UsageError("Gauss-Laguerre rule needs at least one node");
    if (!(a > -1.0)) throw DomainError("Gauss-Laguerre parameter must exceed -1");
    GaussLaguerreRule rule;
    rule.a = a;
    rule.nodes.resize(static_cast<std::size_t>(m));
    rule.weights.resize(static_cast<std::size_t>(m));

    double upper = 0.0;
    for (int k = 0; k < m; ++k) {
        const double left = k > 0 ? std::sqrt(k * (k + a)) : 0.0;
        const double right = k + 1 < m ? std::sqrt((k + 1) * (k + 1 + a)) : 0.0;
        upper = std::max(upper, 2.0 * k + 1.0 + a + left + right);
    }

    PrecisionScope scope(192);
    const BigFloat ab(a);
    const BigFloat log_norm = lgamma(BigFloat(static_cast<long>(m)) + ab + BigFloat(1L)) -
                              lgamma(BigFloat(static_cast<long>(m + 1))) - lgamma(ab + BigFloat(1L));
    for (int i = 0; i < m; ++i) {
        double lo = 0.0;
        double hi = upper;
        for (int iter = 0; iter < 200 && hi - lo > 1e-15 * hi; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (jacobi_count_below(m, a, mid) > i) hi = mid;
            else lo = mid;
        }
        BigFloat x(0.5 * (lo + hi));
        BigFloat deriv;
        for (int step = 0; step < 8; ++step) {
            const auto [lm, lm1] = laguerre_pair(m, ab, x);
            deriv = (BigFloat(static_cast<long>(m)) * lm - (BigFloat(static_cast<long>(m)) + ab) * lm1) / x;
            x -= lm / deriv;
        }
        const auto [lm, lm1] = laguerre_pair(m, ab, x);
        deriv = (BigFloat(static_cast<long>(m)) * lm - (BigFloat(static_cast<long>(m)) + ab) * lm1) / x;
        // w_i / Gamma(a+1) = Gamma(m+a+1) / (m! Gamma(a+1) x_i L'_m(x_i)^2)
        const BigFloat log_w = log_norm - log(x) - BigFloat(2L) * log(abs(deriv));
        rule.nodes[i] = x.to_double();
        rule.weights[i] = exp(log_w).to_double();
    }
    return rule;
}

int default_oracle_nodes(const EnsembleParams& params) {
    const double beta = params.beta.to_double();
    const double n = static_cast<double>(params.n);
    const double total = static_cast<double>(params.alpha) * (n - 1.0) + beta * (n - 1.0) + n * beta;
    return static_cast<int>(std::ceil(total / 2.0)) + 10;
}

QuadratureResult quadrature_g(const EnsembleParams& params, double x, int nodes, bool estimate_error) {
    check_oracle_params(params);
    if (!(x >= 0.0)) throw DomainError("quadrature_g needs x >= 0");
    const long alpha = params.alpha;
    return tensor_quadrature(params, resolve_nodes(params, nodes), estimate_error, [&](const std::vector<double>& l) {
        double v = 1.0;
        for (double li : l) v *= std::pow(x + li, static_cast<double>(alpha));
        return v;
    });
}

QuadratureResult mixed_moment(const EnsembleParams& params, const std::vector<long>& exponents, int nodes,
                              bool estimate_error) {
    check_oracle_params(params);
    if (static_cast<long>(exponents.size()) != params.n - 1) {
        throw UsageError("mixed moment needs n - 1 = " + std::to_string(params.n - 1) + " exponents");
    }
    if (std::any_of(exponents.begin(), exponents.end(), [](long e) { return e < 0; })) {
        throw DomainError("mixed moment exponents must be non-negative");
    }
    long total = 0;
    for (long e : exponents) total += e;
    EnsembleParams grid_params = params;
    grid_params.alpha = std::max(params.alpha, total);
    // The ordered-region integrand must be symmetric: average the monomial over all
    // distinct assignments of exponents to eigenvalues.
    std::vector<std::vector<long>> arrangements;
    std::vector<long> sorted = exponents;
    std::sort(sorted.begin(), sorted.end());
    do {
        arrangements.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return tensor_quadrature(params, resolve_nodes(grid_params, nodes), estimate_error,
                             [&, powers = std::vector<double>()](const std::vector<double>& l) mutable {
                                 const std::size_t width = sorted.empty() ? 1 : static_cast<std::size_t>(sorted.back()) + 1;
                                 powers.resize(l.size() * width);
                                 for (std::size_t i = 0; i < l.size(); ++i) {
                                     double p = 1.0;
                                     for (std::size_t e = 0; e < width; ++e, p *= l[i]) powers[i * width + e] = p;
                                 }
                                 double v = 0.0;
                                 for (const auto& a : arrangements) {
                                     double term = 1.0;
                                     for (std::size_t i = 0; i < l.size(); ++i) term *= powers[i * width + a[i]];
                                     v += term;
                                 }
                                 return v / static_cast<double>(arrangements.size());
                             });
}

Rational exact_mixed_moment(const EnsembleParams& params, const std::vector<long>& exponents) {
    params.validate();
    const long beta = even_beta(params, "exact mixed moment");
    const long dims = params.n - 1;
    if (static_cast<long>(exponents.size()) != dims) {
        throw UsageError("mixed moment needs n - 1 = " + std::to_string(dims) + " exponents");
    }
    const Monomials poly = vandermonde_power(dims, beta);
    Rational num(0);
    Rational den(0);
    long total = 0;
    for (long e : exponents) total += e;
    for (const auto& [expo, coeff] : poly) {
        Rational with(coeff);
        Rational without(coeff);
        for (long i = 0; i < dims; ++i) {
            with *= factorial_q(expo[i] + exponents[i] + beta);
            without *= factorial_q(expo[i] + beta);
        }
        num += with;
        den += without;
    }
    // int l^k e^{-beta l/2} dl = k! (2/beta)^(k+1); the powers of 2/beta cancel except sum(a).
    Rational scale(2, beta);
    scale.canonicalize();
    Rational out = num / den;
    for (long k = 0; k < total; ++k) out *= scale;
    return out;
}

std::vector<long> Partition::values() const {
    std::vector<long> out;
    for (const auto& [value, mult] : parts) out.insert(out.end(), static_cast<std::size_t>(mult), value);
    return out;
}

std::vector<Partition> enumerate_partitions(long total, long parts, long max_value) {
    std::vector<Partition> out;
    if (total < 0 || parts < 0 || max_value < 0 || total > parts * max_value) return out;
    std::vector<long> current;
    std::function<void(long, long, long)> rec = [&](long remaining, long slots, long cap) {
        if (slots == 0) {
            if (remaining != 0) return;
            Partition p;
            for (long v : current) {
                if (!p.parts.empty() && p.parts.back().first == v) ++p.parts.back().second;
                else p.parts.emplace_back(v, 1);
            }
            out.push_back(std::move(p));
            return;
        }
        for (long v = std::min(cap, remaining); v >= 0; --v) {
            if (v * slots < remaining) break;
            current.push_back(v);
            rec(remaining - v, slots - 1, v);
            current.pop_back();
        }
    };
    rec(total, parts, max_value);
    return out;
}

Rational norm_constant_even_beta(const EnsembleParams& params) {
    params.validate();
    const long b = even_beta(params, "factorial normalization") / 2;
    const long n = params.n;
    const long alpha = params.alpha;
    Rational out(n);
    for (long k = 0; k < n * alpha + 1; ++k) out *= Rational(b);
    out *= factorial_q(b);
    out /= factorial_q(b * n);
    out /= factorial_q(b * (n - 1) + alpha);
    for (long j = 0; j <= n - 2; ++j) {
        out *= factorial_q(b * j + 2 * b);
        out /= factorial_q(b * j + alpha);
    }
    return out;
}

namespace {

template <class Moment>
auto partition_sum(const EnsembleParams& params, long r, Moment&& moment) {
    const long n = params.n;
    const long alpha = params.alpha;
    if (r < alpha || r > n * alpha) {
        throw DomainError("kappa_r needs alpha <= r <= n alpha, got r = " + std::to_string(r));
    }
    using Value = decltype(moment(std::vector<long>{}));
    Value sum(0);
    for (const Partition& p : enumerate_partitions(r - alpha, n - 1, alpha)) {
        Rational weight(1);
        for (const auto& [value, mult] : p.parts) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(alpha), static_cast<unsigned long>(value));
            for (long s = 0; s < mult; ++s) weight *= Rational(binom);
            weight /= factorial_q(mult);
        }
        std::vector<long> exponents;
        for (long v : p.values()) exponents.push_back(alpha - v);
        if constexpr (std::is_same_v<Value, Rational>) sum += weight * moment(exponents);
        else sum += weight.get_d() * moment(exponents);
    }
    return sum;
}

}  // namespace

Rational kappa_via_partitions_exact(const EnsembleParams& params, long r) {
    params.validate();
    if (params.n > kOracleMaxN) throw UnsupportedParameter("partition oracle supports n <= 5");
    const Rational sum = partition_sum(params, r, [&](const std::vector<long>& e) { return exact_mixed_moment(params, e); });
    return factorial_q(params.n - 1) * norm_constant_even_beta(params) * sum;
}

double kappa_via_partitions(const EnsembleParams& params, long r, int nodes) {
    check_oracle_params(params);
    const double sum = partition_sum(params, r, [&](const std::vector<long>& e) {
        return mixed_moment(params, e, nodes, false).value;
    });
    PrecisionScope scope(128);
    return (factorial_q(params.n - 1).get_d()) * norm_constant_c_gamma(params).to_double() * sum;
}

}  // namespace wlrec
