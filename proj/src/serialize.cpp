#include "wlrec/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace wlrec {

namespace {

void dump(const Json& v, std::string& out) {
    switch (v.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += Json(it.key()).dump();
                out += ':';
                dump(it.value(), out);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i > 0) out += ',';
                dump(v[i], out);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float: {
            const double d = v.get<double>();
            if (!std::isfinite(d)) {
                out += "null";
                break;
            }
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", d);
            out += buf;
            break;
        }
        default:
            out += v.dump();
    }
}

Json exact_entry(long j, const Rational& v) {
    return Json{{"j", j}, {"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}};
}

template <CoefficientField F>
Json coefficient_list(long first, const std::vector<F>& values) {
    Json list = Json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if constexpr (FieldTraits<F>::kExact) list.push_back(exact_entry(first + static_cast<long>(i), values[i]));
        else list.push_back(values[i].to_double());
    }
    return list;
}

template <CoefficientField F>
Json base_json(const EnsembleParams& p, const F& gamma) {
    return Json{{"n", p.n}, {"alpha", p.alpha}, {"beta", beta_json(p.beta)}, {"gamma", scalar_json(gamma)}};
}

}  // namespace

std::string canonical_json(const Json& value) {
    std::string out;
    dump(value, out);
    return out;
}

Json scalar_json(const Rational& v) {
    return v.get_den() == 1 ? v.get_num().get_str() : v.get_str();
}

Json scalar_json(const BigFloat& v) { return v.to_double(); }

Json beta_json(const Beta& beta) {
    if (beta.is_rational()) return scalar_json(beta.exact());
    return beta.to_double();
}

template <CoefficientField F>
Json density_json(const ClosedFormDensity<F>& d) {
    Json out = base_json(d.params(), d.gamma());
    out["kappa"] = coefficient_list(d.first_power(), d.kappa());
    return out;
}

template <CoefficientField F>
Json density_json(const FixedTraceDensity<F>& d) {
    Json out = base_json(d.params(), d.gamma());
    out["fixed_trace"] = true;
    out["kappa"] = coefficient_list(d.params().alpha, d.kappa());
    out["weights"] = coefficient_list(d.params().alpha, d.weights());
    return out;
}

std::vector<Rational> kappa_from_json(const Json& density) {
    std::vector<Rational> out;
    for (const auto& entry : density.at("kappa")) {
        if (!entry.is_object()) throw UsageError("kappa entries are not exact fractions");
        Rational v(Integer(entry.at("num").get<std::string>(), 10), Integer(entry.at("den").get<std::string>(), 10));
        v.canonicalize();
        out.push_back(v);
    }
    return out;
}

Json config_json(const SampleConfig& cfg) {
    Json out{{"n", cfg.params.n},     {"alpha", cfg.params.alpha}, {"beta", beta_json(cfg.params.beta)},
             {"count", cfg.count},    {"seed", cfg.seed},          {"workers", cfg.workers}};
    switch (cfg.mode) {
        case SampleMode::kUnrestricted: out["mode"] = "unrestricted"; break;
        case SampleMode::kFixedTrace: out["mode"] = "fixed_trace"; break;
        case SampleMode::kDelayTime:
            out["mode"] = "delay_time";
            out["tau_h"] = cfg.tau_h;
            break;
    }
    return out;
}

Json sample_json(const EmpiricalSample& sample) {
    return Json{{"config", config_json(sample.config)}, {"values", sample.values}};
}

template Json density_json<Rational>(const ClosedFormDensity<Rational>&);
template Json density_json<BigFloat>(const ClosedFormDensity<BigFloat>&);
template Json density_json<Rational>(const FixedTraceDensity<Rational>&);
template Json density_json<BigFloat>(const FixedTraceDensity<BigFloat>&);

}  // namespace wlrec
