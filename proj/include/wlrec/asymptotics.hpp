#pragma once

#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wlrec/density.hpp"

namespace wlrec {

/// Soft-edge shift and scale: (lambda_min - nu) / sigma approaches Tracy-Widom.
struct SoftEdgeScaling {
    long n = 0;
    double m = 0.0;      ///< n - 1 + 2 (alpha + 1) / beta
    double nu = 0.0;     ///< (sqrt n - sqrt m)^2
    double sigma = 0.0;  ///< (sqrt n - sqrt m)(1/sqrt n - 1/sqrt m)^(1/3), negative for m > n

    /// Throws UnsupportedParameter when m == n (hard edge, sigma = 0).
    static SoftEdgeScaling from(const EnsembleParams& params);
};

using CurvePoint = std::pair<double, double>;

/// (s, -sigma f(sigma s + nu)); zero where sigma s + nu < 0.
template <CoefficientField F>
std::vector<CurvePoint> soft_edge_transform(const ClosedFormDensity<F>& d, std::span<const double> grid);

/// (s, -(sigma / mn) f_F((sigma s + nu) / mn)).
template <CoefficientField F>
std::vector<CurvePoint> soft_edge_transform(const FixedTraceDensity<F>& d, std::span<const double> grid);

/// Large-deviation constants of the smallest eigenvalue.
struct LargeDeviationParams {
    double A = 0.0;
    double zeta_minus = 0.0;
    double zeta_plus = 0.0;
    double delta_minus = 0.0;  ///< zeta_plus - zeta_minus = 4 sqrt(1 + A)

    /// A = (2(alpha+1) - beta)/(beta n); DomainError unless A > -1.
    static LargeDeviationParams from(long n, double alpha, double beta);
    static LargeDeviationParams from(const EnsembleParams& params);
};

/// Intermediate quantities of the right rate function at a given zeta.
struct HelperChain {
    double P = 0.0, Q = 0.0, B = 0.0, R = 0.0, theta = 0.0, W = 0.0, U = 0.0, Delta = 0.0, S = 0.0;
    /// W^3 + P W + Q; zero when the cosine branch picks a root of the depressed cubic.
    double cubic_residual = 0.0;
    /// True when |cubic_residual| is small and Delta > 0.
    bool branch_ok = false;
};

/// Evaluates P, Q, B, R, theta, W, U, Delta, S(zeta). theta uses atan2(2 sqrt B, Q);
/// R^(1/3) is the real cube root. DomainError when B < 0 or P >= 0.
HelperChain ld_helper_chain(const LargeDeviationParams& p, double zeta);

/// Left rate function phi_-(z) on 0 <= z < zeta_-.
double ld_left_rate(const LargeDeviationParams& p, double z);
/// Right rate function phi_+(z) = [S(z + zeta_-) - S(zeta_-)] / 2 on z >= 0.
double ld_right_rate(const LargeDeviationParams& p, double z);

/// Unnormalized large-deviation log density:
///   -beta n phi_-((n zeta_- - x)/n)     on [0, n zeta_-],
///   -beta n^2 phi_+((x - n zeta_-)/n)   on [n zeta_-, inf).
double ld_log_density(const LargeDeviationParams& p, long n, double beta, double x);

enum class TailSide { kLeft, kRight };

/// Leading Tracy-Widom tail: -beta |x|^3 / 24 (left, x < 0), -2 beta x^(3/2) / 3 (right, x > 0).
double tw_tail_log(double x, double beta, TailSide side);

/// Reference Tracy-Widom curve read from a two-column CSV "s,density" (header optional).
class TracyWidomTable {
public:
    static TracyWidomTable parse(std::istream& in);
    static TracyWidomTable load(const std::string& path);

    /// Linear interpolation; DomainError outside [front, back].
    double operator()(double s) const;
    double min_s() const { return s_.front(); }
    double max_s() const { return s_.back(); }
    std::size_t size() const { return s_.size(); }

private:
    std::vector<double> s_;
    std::vector<double> density_;
};

}  // namespace wlrec
