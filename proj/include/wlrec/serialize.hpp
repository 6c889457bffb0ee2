#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wlrec/density.hpp"
#include "wlrec/montecarlo.hpp"

namespace wlrec {

using Json = nlohmann::json;

/// Sorted keys, no whitespace, numbers as %.17g, non-finite numbers as null.
std::string canonical_json(const Json& value);

/// "p/q" (or "p" for integers) for Rational, a plain number for BigFloat.
Json scalar_json(const Rational& v);
Json scalar_json(const BigFloat& v);

/// beta as "p/q" when rational, else its float value.
Json beta_json(const Beta& beta);

/// {"alpha", "beta", "gamma", "kappa": [{"j","num","den"}] | [float], "n"}.
template <CoefficientField F>
Json density_json(const ClosedFormDensity<F>& d);
/// As density_json plus "fixed_trace": true and "weights" (phi_j, same encoding as kappa).
template <CoefficientField F>
Json density_json(const FixedTraceDensity<F>& d);

/// Inverse of the exact kappa encoding of density_json.
std::vector<Rational> kappa_from_json(const Json& density);

Json config_json(const SampleConfig& cfg);
/// {"config": ..., "values": [...]}.
Json sample_json(const EmpiricalSample& sample);

}  // namespace wlrec
