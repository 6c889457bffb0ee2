#include "wlrec/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>

#include "wlrec/density.hpp"

namespace wlrec {

void SampleConfig::validate() const {
    params.validate();
    if (count < 1) throw UsageError("sample count must be at least 1");
    if (workers < 1) throw UsageError("worker count must be at least 1");
    if (mode == SampleMode::kDelayTime) {
        if (!(tau_h > 0.0)) throw DomainError("tau_H must be positive");
        delay_time_params(params.n, params.beta);
    }
}

namespace {

double uniform_open(Rng& rng) {
    // (0, 1]: safe under log.
    return 1.0 - std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

double marsaglia_tsang(double shape, Rng& rng) {
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    std::normal_distribution<double> normal;
    for (;;) {
        const double x = normal(rng);
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        const double u = uniform_open(rng);
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace

double sample_gamma(double shape, Rng& rng) {
    if (!(shape > 0.0)) throw DomainError("gamma shape must be positive");
    if (shape >= 1.0) return marsaglia_tsang(shape, rng);
    const double g = marsaglia_tsang(shape + 1.0, rng);
    return g * std::pow(uniform_open(rng), 1.0 / shape);
}

double sample_chi(double dof, Rng& rng) {
    if (!(dof > 0.0)) throw DomainError("chi degrees of freedom must be positive, got " + std::to_string(dof));
    return std::sqrt(2.0 * sample_gamma(dof / 2.0, rng));
}

BidiagonalModel BidiagonalModel::draw(long n, long alpha, double beta, Rng& rng) {
    BidiagonalModel a;
    a.diag.resize(static_cast<std::size_t>(n));
    a.sub.resize(static_cast<std::size_t>(n - 1));
    for (long j = 1; j <= n; ++j) {
        a.diag[j - 1] = sample_chi(beta * static_cast<double>(n - j) + 2.0 * static_cast<double>(alpha + 1), rng);
        if (j < n) a.sub[j - 1] = sample_chi(beta * static_cast<double>(n - j), rng);
    }
    return a;
}

SymTridiagonal SymTridiagonal::from_bidiagonal(const BidiagonalModel& a, double beta) {
    const std::size_t n = a.diag.size();
    SymTridiagonal t;
    t.diag.resize(n);
    t.offdiag_sq.resize(n > 0 ? n - 1 : 0);
    for (std::size_t j = 0; j < n; ++j) {
        const double d2 = a.diag[j] * a.diag[j];
        const double e2 = j > 0 ? a.sub[j - 1] * a.sub[j - 1] : 0.0;
        t.diag[j] = (d2 + e2) / beta;
        if (j + 1 < n) t.offdiag_sq[j] = d2 * a.sub[j] * a.sub[j] / (beta * beta);
    }
    return t;
}

long SymTridiagonal::count_below(double x) const {
    constexpr double kTiny = std::numeric_limits<double>::min();
    long count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        q = diag[i] - x - (i > 0 ? offdiag_sq[i - 1] / q : 0.0);
        if (q == 0.0) q = -kTiny;
        if (q < 0.0) ++count;
    }
    return count;
}

double SymTridiagonal::smallest_eigenvalue() const {
    const std::size_t n = diag.size();
    if (n == 0) throw UsageError("empty tridiagonal matrix");
    if (n == 1) return diag[0];
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        const double radius = (i > 0 ? std::sqrt(offdiag_sq[i - 1]) : 0.0) + (i + 1 < n ? std::sqrt(offdiag_sq[i]) : 0.0);
        lo = std::min(lo, diag[i] - radius);
        hi = std::max(hi, diag[i] + radius);
    }
    lo = std::max(lo, 0.0);
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-12 * (1.0 + std::abs(mid))) return mid;
        if (count_below(mid) >= 1) hi = mid;
        else lo = mid;
    }
    throw NumericalError("Sturm bisection did not converge in 200 iterations");
}

double SymTridiagonal::trace() const {
    double s = 0.0;
    for (double d : diag) s += d;
    return s;
}

namespace {

SymTridiagonal draw_tridiagonal(long n, long alpha, double beta, Rng& rng) {
    return SymTridiagonal::from_bidiagonal(BidiagonalModel::draw(n, alpha, beta, rng), beta);
}

}  // namespace

double sample_smallest_eigenvalue(const SampleConfig& cfg, Rng& rng) {
    return draw_tridiagonal(cfg.params.n, cfg.params.alpha, cfg.params.beta.to_double(), rng).smallest_eigenvalue();
}

double sample_fixed_trace(const SampleConfig& cfg, Rng& rng) {
    if (cfg.params.n == 1) {
        draw_tridiagonal(1, cfg.params.alpha, cfg.params.beta.to_double(), rng);
        return 1.0;
    }
    const SymTridiagonal t = draw_tridiagonal(cfg.params.n, cfg.params.alpha, cfg.params.beta.to_double(), rng);
    return t.smallest_eigenvalue() / t.trace();
}

double sample_largest_delay_time(long n, const Beta& beta, double tau_h, Rng& rng) {
    if (!(tau_h > 0.0)) throw DomainError("tau_H must be positive");
    const EnsembleParams p = delay_time_params(n, beta);
    return tau_h / draw_tridiagonal(p.n, p.alpha, p.beta.to_double(), rng).smallest_eigenvalue();
}

std::uint64_t worker_seed(std::uint64_t seed, int index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

EmpiricalSample draw_sample(const SampleConfig& cfg) {
    cfg.validate();
    const int workers = static_cast<int>(std::min<long>(cfg.workers, cfg.count));
    std::vector<std::vector<double>> parts(static_cast<std::size_t>(workers));
    const auto run = [&](int w) {
        const long share = cfg.count / workers + (w < cfg.count % workers ? 1 : 0);
        Rng rng(worker_seed(cfg.seed, w));
        auto& out = parts[static_cast<std::size_t>(w)];
        out.reserve(static_cast<std::size_t>(share));
        for (long i = 0; i < share; ++i) {
            switch (cfg.mode) {
                case SampleMode::kUnrestricted: out.push_back(sample_smallest_eigenvalue(cfg, rng)); break;
                case SampleMode::kFixedTrace: out.push_back(sample_fixed_trace(cfg, rng)); break;
                case SampleMode::kDelayTime:
                    out.push_back(sample_largest_delay_time(cfg.params.n, cfg.params.beta, cfg.tau_h, rng));
                    break;
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    }
    EmpiricalSample sample;
    sample.config = cfg;
    sample.values.reserve(static_cast<std::size_t>(cfg.count));
    for (const auto& part : parts) sample.values.insert(sample.values.end(), part.begin(), part.end());
    std::sort(sample.values.begin(), sample.values.end());
    return sample;
}

double ks_statistic(const std::vector<double>& sorted, const std::function<double(double)>& cdf) {
    if (sorted.empty()) throw UsageError("KS statistic of an empty sample");
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        d = std::max({d, std::abs(static_cast<double>(i + 1) / n - f), std::abs(static_cast<double>(i) / n - f)});
    }
    return d;
}

double ks_statistic(const EmpiricalSample& sample, const std::function<double(double)>& cdf) {
    return ks_statistic(sample.values, cdf);
}

double ks_two_sample(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw UsageError("KS statistic of an empty sample");
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

double ks_critical_value(std::size_t n, std::size_t m, double level) {
    const double c = std::sqrt(-std::log(level / 2.0) / 2.0);
    const double dn = static_cast<double>(n);
    const double dm = static_cast<double>(m);
    return c * std::sqrt((dn + dm) / (dn * dm));
}

std::vector<HistogramBin> histogram(const std::vector<double>& sorted, int bins) {
    if (sorted.empty()) throw UsageError("histogram of an empty sample");
    if (bins < 1) throw UsageError("histogram needs at least one bin");
    const double lo = sorted.front();
    const double hi = sorted.back();
    const double width = hi > lo ? (hi - lo) / bins : 1.0;
    std::vector<long> counts(static_cast<std::size_t>(bins), 0);
    for (double v : sorted) {
        const auto k = std::min<long>(bins - 1, static_cast<long>((v - lo) / width));
        ++counts[static_cast<std::size_t>(k)];
    }
    std::vector<HistogramBin> out;
    out.reserve(counts.size());
    const double total = static_cast<double>(sorted.size());
    for (int k = 0; k < bins; ++k) {
        out.push_back({lo + (k + 0.5) * width, static_cast<double>(counts[static_cast<std::size_t>(k)]) / (total * width)});
    }
    return out;
}

double sample_mean(const std::vector<double>& values) {
    if (values.empty()) throw UsageError("mean of an empty sample");
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

double sample_stddev(const std::vector<double>& values) {
    if (values.size() < 2) throw UsageError("standard deviation needs two values");
    const double m = sample_mean(values);
    double s = 0.0;
    for (double v : values) s += (v - m) * (v - m);
    return std::sqrt(s / static_cast<double>(values.size() - 1));
}

namespace {

void write_number(std::ostream& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
}

}  // namespace

void write_sample_csv(std::ostream& out, const EmpiricalSample& sample) {
    for (double v : sample.values) {
        write_number(out, v);
        out << '\n';
    }
}

void write_histogram_csv(std::ostream& out, const std::vector<HistogramBin>& hist) {
    out << "center,density\n";
    for (const auto& bin : hist) {
        write_number(out, bin.center);
        out << ',';
        write_number(out, bin.density);
        out << '\n';
    }
}

}  // namespace wlrec
