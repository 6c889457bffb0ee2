#include "wlrec/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

namespace wlrec {

SoftEdgeScaling SoftEdgeScaling::from(const EnsembleParams& params) {
    params.validate();
    SoftEdgeScaling s;
    s.n = params.n;
    const double beta = params.beta.to_double();
    const double n = static_cast<double>(params.n);
    s.m = n - 1.0 + 2.0 * (static_cast<double>(params.alpha) + 1.0) / beta;
    const double gap = std::sqrt(n) - std::sqrt(s.m);
    s.nu = gap * gap;
    s.sigma = gap * std::cbrt(1.0 / std::sqrt(n) - 1.0 / std::sqrt(s.m));
    if (!(s.sigma < 0.0)) {
        throw UnsupportedParameter("soft-edge scaling needs m > n (sigma < 0); m = n is the hard edge where the "
                                   "scaled density is exponential: " + params.to_string());
    }
    return s;
}

template <CoefficientField F>
std::vector<CurvePoint> soft_edge_transform(const ClosedFormDensity<F>& d, std::span<const double> grid) {
    const SoftEdgeScaling scale = SoftEdgeScaling::from(d.params());
    std::vector<CurvePoint> out;
    out.reserve(grid.size());
    for (double s : grid) {
        const double x = scale.sigma * s + scale.nu;
        out.emplace_back(s, x < 0.0 ? 0.0 : -scale.sigma * d.eval(x));
    }
    return out;
}

template <CoefficientField F>
std::vector<CurvePoint> soft_edge_transform(const FixedTraceDensity<F>& d, std::span<const double> grid) {
    const SoftEdgeScaling scale = SoftEdgeScaling::from(d.params());
    const double mn = scale.m * static_cast<double>(scale.n);
    std::vector<CurvePoint> out;
    out.reserve(grid.size());
    for (double s : grid) {
        const double x = (scale.sigma * s + scale.nu) / mn;
        out.emplace_back(s, x < 0.0 ? 0.0 : -(scale.sigma / mn) * d.eval(x));
    }
    return out;
}

LargeDeviationParams LargeDeviationParams::from(long n, double alpha, double beta) {
    if (n < 1 || !(beta > 0.0)) throw DomainError("large-deviation parameters need n >= 1 and beta > 0");
    LargeDeviationParams p;
    p.A = (2.0 * (alpha + 1.0) - beta) / (beta * static_cast<double>(n));
    if (!(p.A > -1.0)) throw DomainError("large-deviation parameters need A > -1, got A = " + std::to_string(p.A));
    const double root = std::sqrt(1.0 + p.A);
    p.zeta_minus = (1.0 - root) * (1.0 - root);
    p.zeta_plus = (1.0 + root) * (1.0 + root);
    p.delta_minus = 4.0 * root;
    return p;
}

LargeDeviationParams LargeDeviationParams::from(const EnsembleParams& params) {
    params.validate();
    return from(params.n, static_cast<double>(params.alpha), params.beta.to_double());
}

HelperChain ld_helper_chain(const LargeDeviationParams& p, double zeta) {
    if (!(zeta >= 0.0)) throw DomainError("helper chain needs zeta >= 0");
    const double A = p.A;
    HelperChain h;
    h.P = -zeta - 2.0 * (A + 2.0);
    if (!(h.P < 0.0)) throw DomainError("helper chain: P = " + std::to_string(h.P) + " must be negative");
    const double root_zeta = std::sqrt(zeta);
    h.Q = 2.0 * A * root_zeta;
    h.B = -(h.P * h.P * h.P / 27.0 + h.Q * h.Q / 4.0);
    if (h.B < 0.0) throw DomainError("helper chain: B = " + std::to_string(h.B) + " is negative");
    h.R = std::sqrt(-h.P * h.P * h.P / 27.0);
    h.theta = std::atan2(2.0 * std::sqrt(h.B), h.Q);
    h.W = 2.0 * h.P / (3.0 * std::cbrt(h.R)) * std::cos((h.theta + 2.0 * std::numbers::pi) / 3.0);
    h.U = h.W * h.W;
    h.Delta = h.U - zeta;
    h.cubic_residual = h.W * h.W * h.W + h.P * h.W + h.Q;
    const double scale = std::max({1.0, std::abs(h.P * h.W), std::abs(h.Q), h.U * std::abs(h.W)});
    h.branch_ok = std::abs(h.cubic_residual) <= 1e-9 * scale && h.Delta > 0.0;

    const double shifted = h.W - root_zeta;
    h.S = (h.U + zeta) / 2.0 - h.Delta * h.Delta / 32.0 - std::log(h.Delta / 4.0) + A / 4.0 * shifted * shifted -
          A * (A + 2.0) * std::log((h.W + root_zeta) / 2.0);
    // A^2/4 ln(zeta U) vanishes identically for A = 0, including at zeta = 0.
    if (A != 0.0) h.S += A * A / 4.0 * std::log(zeta * h.U);
    return h;
}

namespace {

// phi_-(z) without the domain check; z = zeta_- gives the boundary limit.
double left_rate_unchecked(const LargeDeviationParams& p, double z) {
    const double A = p.A;
    const double delta = p.delta_minus;
    const double root_z = std::sqrt(z);
    const double root_zd = std::sqrt(z + delta);
    double out = -root_z * root_zd / 2.0 + 2.0 * std::log((root_zd - root_z) / std::sqrt(delta));
    if (A != 0.0) {
        out += -A / 2.0 * std::log1p(-z / p.zeta_minus);
        out += A * std::log1p(2.0 * std::sqrt(z / p.zeta_minus) * (root_zd - root_z) / delta);
    }
    return out;
}

}  // namespace

double ld_left_rate(const LargeDeviationParams& p, double z) {
    if (!(z >= 0.0 && z < p.zeta_minus)) {
        throw DomainError("left rate function needs 0 <= z < zeta_- = " + std::to_string(p.zeta_minus) +
                          ", got " + std::to_string(z));
    }
    if (z == 0.0) return 0.0;
    return left_rate_unchecked(p, z);
}

double ld_right_rate(const LargeDeviationParams& p, double z) {
    if (!(z >= 0.0)) throw DomainError("right rate function needs z >= 0, got " + std::to_string(z));
    if (z == 0.0) return 0.0;
    const HelperChain at = ld_helper_chain(p, z + p.zeta_minus);
    const HelperChain base = ld_helper_chain(p, p.zeta_minus);
    return 0.5 * (at.S - base.S);
}

double ld_log_density(const LargeDeviationParams& p, long n, double beta, double x) {
    if (!(x >= 0.0)) throw DomainError("large-deviation density needs x >= 0");
    const double nd = static_cast<double>(n);
    const double typical = nd * p.zeta_minus;
    if (x < typical) {
        const double z = (typical - x) / nd;
        const double rate = z >= p.zeta_minus ? left_rate_unchecked(p, p.zeta_minus) : ld_left_rate(p, z);
        return -beta * nd * rate;
    }
    return -beta * nd * nd * ld_right_rate(p, (x - typical) / nd);
}

double tw_tail_log(double x, double beta, TailSide side) {
    if (side == TailSide::kLeft) {
        if (!(x < 0.0)) throw DomainError("left Tracy-Widom tail needs x < 0");
        return -beta * std::abs(x) * x * x / 24.0;
    }
    if (!(x > 0.0)) throw DomainError("right Tracy-Widom tail needs x > 0");
    return -2.0 * beta * std::pow(x, 1.5) / 3.0;
}

TracyWidomTable TracyWidomTable::parse(std::istream& in) {
    TracyWidomTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        double s = 0.0;
        double density = 0.0;
        if (!(fields >> s >> density)) {
            if (table.s_.empty()) continue;  // header row
            throw UsageError("Tracy-Widom table: cannot parse line " + std::to_string(line_no));
        }
        if (!table.s_.empty() && !(s > table.s_.back())) {
            throw UsageError("Tracy-Widom table: s must be strictly increasing (line " + std::to_string(line_no) + ")");
        }
        table.s_.push_back(s);
        table.density_.push_back(density);
    }
    if (table.s_.size() < 2) throw UsageError("Tracy-Widom table needs at least two rows");
    return table;
}

TracyWidomTable TracyWidomTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open Tracy-Widom table '" + path + "'");
    return parse(in);
}

double TracyWidomTable::operator()(double s) const {
    if (!(s >= s_.front() && s <= s_.back())) {
        throw DomainError("s = " + std::to_string(s) + " outside Tracy-Widom table range [" +
                          std::to_string(s_.front()) + ", " + std::to_string(s_.back()) + "]");
    }
    const auto it = std::upper_bound(s_.begin(), s_.end(), s);
    if (it == s_.end()) return density_.back();
    const std::size_t hi = static_cast<std::size_t>(it - s_.begin());
    const std::size_t lo = hi - 1;
    const double t = (s - s_[lo]) / (s_[hi] - s_[lo]);
    return density_[lo] + t * (density_[hi] - density_[lo]);
}

template std::vector<CurvePoint> soft_edge_transform<Rational>(const ClosedFormDensity<Rational>&, std::span<const double>);
template std::vector<CurvePoint> soft_edge_transform<BigFloat>(const ClosedFormDensity<BigFloat>&, std::span<const double>);
template std::vector<CurvePoint> soft_edge_transform<Rational>(const FixedTraceDensity<Rational>&, std::span<const double>);
template std::vector<CurvePoint> soft_edge_transform<BigFloat>(const FixedTraceDensity<BigFloat>&, std::span<const double>);

}  // namespace wlrec
