#include "alphashear/catalog.hpp"

#include <cmath>
#include <complex>

namespace alphashear {

namespace {

double get_param(const ParamMap& params, const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void reject_unknown_params(const ParamMap& params, std::initializer_list<const char*> known,
                           const std::string& family) {
    for (const auto& [key, value] : params) {
        (void)value;
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw ParamOutOfRange(family + ": unknown parameter '" + key + "'");
    }
}

std::string complex_suffix(cplx v) {
    return "(re=" + std::to_string(v.real()) + ",im=" + std::to_string(v.imag()) + ")";
}

TruncatedSeries ones_series(std::size_t order, std::size_t from_degree) {
    std::vector<cplx> c(order + 1, cplx{0.0});
    for (std::size_t k = from_degree; k <= order; ++k) c[k] = 1.0;
    return TruncatedSeries(std::move(c));
}

}  // namespace

std::vector<cplx> binomial_one_minus_z(cplx e, std::size_t order) {
    // (1-z)^e = sum_k C(e,k) (-z)^k; c_k = -c_{k-1} (e-k+1)/k.
    std::vector<cplx> c(order + 1);
    c[0] = 1.0;
    for (std::size_t k = 1; k <= order; ++k) {
        c[k] = -c[k - 1] * (e - cplx(static_cast<double>(k - 1))) / static_cast<double>(k);
    }
    return c;
}

AnalyticMapSpec catalog_map(const std::string& name, const ParamMap& params) {
    using std::log;
    if (name == "identity") {
        reject_unknown_params(params, {}, name);
        AnalyticMapSpec s;
        s.name = "identity";
        s.value = [](cplx z) { return z; };
        s.d1 = [](cplx) { return cplx{1.0}; };
        s.d2 = [](cplx) { return cplx{0.0}; };
        s.log_value_over_z = [](cplx) { return cplx{0.0}; };
        s.log_d1 = [](cplx) { return cplx{0.0}; };
        s.tags = {true, true, true, true};
        s.lif_order = 1.0;
        s.series_gen = [](std::size_t n) { return TruncatedSeries::identity(n); };
        return s;
    }
    if (name == "halfplane") {
        reject_unknown_params(params, {}, name);
        AnalyticMapSpec s;
        s.name = "halfplane";
        s.value = [](cplx z) { return z / (1.0 - z); };
        s.d1 = [](cplx z) { return 1.0 / ((1.0 - z) * (1.0 - z)); };
        s.d2 = [](cplx z) { return 2.0 / ((1.0 - z) * (1.0 - z) * (1.0 - z)); };
        s.log_value_over_z = [](cplx z) { return -log(1.0 - z); };
        s.log_d1 = [](cplx z) { return -2.0 * log(1.0 - z); };
        s.tags = {true, true, true, true};
        s.lif_order = 1.0;
        s.series_gen = [](std::size_t n) { return ones_series(n, 1); };
        return s;
    }
    if (name == "koebe") {
        reject_unknown_params(params, {}, name);
        AnalyticMapSpec s;
        s.name = "koebe";
        s.value = [](cplx z) { return z / ((1.0 - z) * (1.0 - z)); };
        s.d1 = [](cplx z) {
            const cplx w = 1.0 - z;
            return (1.0 + z) / (w * w * w);
        };
        s.d2 = [](cplx z) {
            const cplx w = 1.0 - z;
            return 2.0 * (2.0 + z) / (w * w * w * w);
        };
        s.log_value_over_z = [](cplx z) { return -2.0 * log(1.0 - z); };
        s.log_d1 = [](cplx z) { return log(1.0 + z) - 3.0 * log(1.0 - z); };
        s.tags = {true, true, false, true};
        s.lif_order = 2.0;
        s.series_gen = [](std::size_t n) {
            std::vector<cplx> c(n + 1);
            for (std::size_t k = 0; k <= n; ++k) c[k] = static_cast<double>(k);
            return TruncatedSeries(std::move(c));
        };
        return s;
    }
    if (name == "mu") {
        reject_unknown_params(params, {"re", "im"}, name);
        const cplx mu(get_param(params, "re", 2.0), get_param(params, "im", 0.0));
        const double slack = 1e-12;
        if (std::abs(mu) <= slack) throw ParamOutOfRange("mu: mu = 0 degenerates the family");
        if (std::abs(mu - 1.0) > 1.0 + slack && std::abs(mu + 1.0) > 1.0 + slack) {
            throw ParamOutOfRange("mu: need |mu-1| <= 1 or |mu+1| <= 1");
        }
        AnalyticMapSpec s;
        s.name = "mu" + complex_suffix(mu);
        s.value = [mu](cplx z) { return (1.0 - std::pow(1.0 - z, mu)) / mu; };
        s.d1 = [mu](cplx z) { return std::pow(1.0 - z, mu - 1.0); };
        s.d2 = [mu](cplx z) { return (1.0 - mu) * std::pow(1.0 - z, mu - 2.0); };
        s.log_value_over_z = nullptr;  // no closed single branch across the family
        s.log_d1 = [mu](cplx z) { return (mu - 1.0) * log(1.0 - z); };
        s.tags = {true, false, false, true};
        s.lif_order = 2.0;
        s.series_gen = [mu](std::size_t n) {
            const std::vector<cplx> b = binomial_one_minus_z(mu, n);
            std::vector<cplx> c(n + 1, cplx{0.0});
            for (std::size_t k = 1; k <= n; ++k) c[k] = -b[k] / mu;
            return TruncatedSeries(std::move(c));
        };
        return s;
    }
    if (name == "gamma") {
        reject_unknown_params(params, {"re", "im"}, name);
        const cplx gamma(get_param(params, "re", -1.0), get_param(params, "im", 0.0));
        const double slack = 1e-12;
        if (std::abs(gamma + 1.0) > 1.0 + slack) {
            throw ParamOutOfRange("gamma: need |gamma+1| <= 1 for local univalence");
        }
        const bool real_segment =
            std::abs(gamma.imag()) <= slack && gamma.real() >= -2.0 - slack && gamma.real() <= slack;
        AnalyticMapSpec s;
        s.name = "gamma" + complex_suffix(gamma);
        s.value = [gamma](cplx z) { return z * std::pow(1.0 - z, gamma); };
        s.d1 = [gamma](cplx z) {
            return std::pow(1.0 - z, gamma - 1.0) * (1.0 - (1.0 + gamma) * z);
        };
        s.d2 = [gamma](cplx z) {
            return gamma * std::pow(1.0 - z, gamma - 2.0) * ((gamma + 1.0) * z - 2.0);
        };
        s.log_value_over_z = [gamma](cplx z) { return gamma * log(1.0 - z); };
        s.log_d1 = [gamma](cplx z) {
            return (gamma - 1.0) * log(1.0 - z) + log(1.0 - (1.0 + gamma) * z);
        };
        s.tags = {real_segment, real_segment, false, true};
        if (real_segment) s.lif_order = 2.0;
        s.series_gen = [gamma](std::size_t n) {
            const std::vector<cplx> b = binomial_one_minus_z(gamma, n);
            std::vector<cplx> c(n + 1, cplx{0.0});
            for (std::size_t k = 1; k <= n; ++k) c[k] = b[k - 1];
            return TruncatedSeries(std::move(c));
        };
        return s;
    }
    throw UnknownName("catalog_map: unknown family '" + name + "'");
}

DilatationSpec catalog_dilatation(const std::string& name, const ParamMap& params) {
    if (name == "zero") {
        reject_unknown_params(params, {}, name);
        DilatationSpec s;
        s.name = "zero";
        s.value = [](cplx) { return cplx{0.0}; };
        s.d1 = [](cplx) { return cplx{0.0}; };
        s.exact_sup_norm = 0.0;
        s.exact_hyp_norm = 0.0;
        s.series_gen = [](std::size_t n) { return TruncatedSeries::zero(n); };
        return s;
    }
    if (name == "const") {
        reject_unknown_params(params, {"re", "im"}, name);
        const cplx c(get_param(params, "re", 0.5), get_param(params, "im", 0.0));
        if (std::abs(c) >= 1.0) throw ParamOutOfRange("const: need |c| < 1 for a disc self-map");
        DilatationSpec s;
        s.name = "const" + complex_suffix(c);
        s.value = [c](cplx) { return c; };
        s.d1 = [](cplx) { return cplx{0.0}; };
        s.exact_sup_norm = std::abs(c);
        s.exact_hyp_norm = 0.0;
        s.series_gen = [c](std::size_t n) { return TruncatedSeries::constant(c, n); };
        return s;
    }
    if (name == "linear") {
        reject_unknown_params(params, {"re", "im"}, name);
        const cplx c(get_param(params, "re", 1.0), get_param(params, "im", 0.0));
        if (std::abs(c) > 1.0 + 1e-15) throw ParamOutOfRange("linear: need |c| <= 1");
        DilatationSpec s;
        s.name = "linear" + complex_suffix(c);
        s.value = [c](cplx z) { return c * z; };
        s.d1 = [c](cplx) { return c; };
        // |omega'|(1-|z|^2)/(1-|cz|^2) is maximized at z = 0 (calculus: the
        // radial derivative is 2r|c|(|c|^2-1)/(1-|c|^2r^2)^2 <= 0).
        s.exact_sup_norm = std::abs(c);
        s.exact_hyp_norm = std::abs(c);
        s.series_gen = [c](std::size_t n) {
            std::vector<cplx> v(n + 1, cplx{0.0});
            if (n >= 1) v[1] = c;
            return TruncatedSeries(std::move(v));
        };
        return s;
    }
    if (name == "power") {
        reject_unknown_params(params, {"n"}, name);
        const double nd = get_param(params, "n", 2.0);
        const int n = static_cast<int>(nd);
        if (n < 1 || std::abs(nd - n) > 1e-12) throw ParamOutOfRange("power: n must be an integer >= 1");
        DilatationSpec s;
        s.name = "power(n=" + std::to_string(n) + ")";
        s.value = [n](cplx z) { return std::pow(z, n); };
        s.d1 = [n](cplx z) { return static_cast<double>(n) * std::pow(z, n - 1); };
        // sup |z^n| -> 1 at the boundary; the hyperbolic quotient
        // n r^{n-1}(1-r^2)/(1-r^{2n}) <= 1 with equality in the limit r -> 1
        // (AM-GM on 1 + r^2 + ... + r^{2(n-1)} >= n r^{n-1}).
        s.exact_sup_norm = 1.0;
        s.exact_hyp_norm = 1.0;
        s.series_gen = [n](std::size_t ord) {
            std::vector<cplx> v(ord + 1, cplx{0.0});
            if (ord >= static_cast<std::size_t>(n)) v[static_cast<std::size_t>(n)] = 1.0;
            return TruncatedSeries(std::move(v));
        };
        return s;
    }
    throw UnknownName("catalog_dilatation: unknown family '" + name + "'");
}

std::vector<std::string> catalog_map_names() {
    return {"identity", "halfplane", "koebe", "mu", "gamma"};
}

std::vector<std::string> catalog_dilatation_names() {
    return {"zero", "const", "linear", "power"};
}

TruncatedSeries series_of(const AnalyticMapSpec& spec, std::size_t order) {
    return spec.series_gen(order);
}

TruncatedSeries series_of(const DilatationSpec& spec, std::size_t order) {
    if (!spec.series_gen) {
        throw DomainError("series_of: dilatation '" + spec.name + "' has no coefficient generator");
    }
    return spec.series_gen(order);
}

}  // namespace alphashear
