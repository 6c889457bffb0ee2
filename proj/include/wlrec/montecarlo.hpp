#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <vector>

#include "wlrec/recursion.hpp"

namespace wlrec {

using Rng = std::mt19937_64;

enum class SampleMode { kUnrestricted, kFixedTrace, kDelayTime };

struct SampleConfig {
    EnsembleParams params;
    long count = 1;
    std::uint64_t seed = 0;
    SampleMode mode = SampleMode::kUnrestricted;
    double tau_h = 1.0;  ///< only for kDelayTime
    int workers = 1;

    void validate() const;
};

/// Draws from a unit-scale Gamma(shape) law: Marsaglia-Tsang for shape >= 1,
/// with the U^(1/shape) boost below one.
double sample_gamma(double shape, Rng& rng);
/// chi_d = sqrt(2 G), G ~ Gamma(d/2). DomainError for dof <= 0.
double sample_chi(double dof, Rng& rng);

/// Lower-bidiagonal beta-model factor: diag[j] ~ chi_{beta(n-j)+2(alpha+1)}, sub[j] ~ chi_{beta(n-j)} (j 1-based).
struct BidiagonalModel {
    std::vector<double> diag;
    std::vector<double> sub;

    static BidiagonalModel draw(long n, long alpha, double beta, Rng& rng);
};

/// Symmetric tridiagonal matrix kept as its diagonal and squared off-diagonal.
struct SymTridiagonal {
    std::vector<double> diag;
    std::vector<double> offdiag_sq;

    /// T = A A^T / beta.
    static SymTridiagonal from_bidiagonal(const BidiagonalModel& a, double beta);
    /// Number of eigenvalues strictly less than x (Sturm count).
    long count_below(double x) const;
    /// Smallest eigenvalue by bisection to 1e-12 (1 + |lambda|); NumericalError after 200 steps.
    double smallest_eigenvalue() const;
    double trace() const;
};

double sample_smallest_eigenvalue(const SampleConfig& cfg, Rng& rng);
double sample_fixed_trace(const SampleConfig& cfg, Rng& rng);
/// tau_H / lambda_min with alpha = beta n / 2.
double sample_largest_delay_time(long n, const Beta& beta, double tau_h, Rng& rng);

/// Seed of worker `index` derived from the master seed by splitmix64.
std::uint64_t worker_seed(std::uint64_t seed, int index);

struct EmpiricalSample {
    std::vector<double> values;  ///< sorted ascending
    SampleConfig config;
};

/// Splits cfg.count over cfg.workers threads; the result depends only on (seed, workers).
EmpiricalSample draw_sample(const SampleConfig& cfg);

/// sup_i max(|i/N - F(x_i)|, |(i-1)/N - F(x_i)|); UsageError on an empty sample.
double ks_statistic(const std::vector<double>& sorted, const std::function<double(double)>& cdf);
double ks_statistic(const EmpiricalSample& sample, const std::function<double(double)>& cdf);
/// Two-sample Kolmogorov-Smirnov distance of sorted samples.
double ks_two_sample(const std::vector<double>& a, const std::vector<double>& b);
/// Asymptotic critical value c(level) sqrt((N+M)/(N M)); level 0.01 gives c = 1.628.
double ks_critical_value(std::size_t n, std::size_t m, double level);

struct HistogramBin {
    double center;
    double density;
};
/// Equal-width bins over [min, max] of the sample, normalized to unit area.
std::vector<HistogramBin> histogram(const std::vector<double>& sorted, int bins = 60);

double sample_mean(const std::vector<double>& values);
double sample_stddev(const std::vector<double>& values);

void write_sample_csv(std::ostream& out, const EmpiricalSample& sample);
void write_histogram_csv(std::ostream& out, const std::vector<HistogramBin>& hist);

}  // namespace wlrec
