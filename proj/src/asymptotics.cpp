#include "entropic/asymptotics.hpp"

#include "entropic/closedforms.hpp"
#include "entropic/coeffs.hpp"
#include "entropic/oracle.hpp"
#include "entropic/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace entropic::asymptotics {

namespace {

using closedforms::log_gamma;

constexpr double log_2pi = 1.8378770664093454836;

struct OrderPlan
{
    int K = 0;       // highest order computed
    bool automatic;  // choose truncation from the terms
};

OrderPlan plan_order(const Options& opt, int route_max)
{
    if (!opt.K)
        return {route_max, true};
    const int K = *opt.K;
    if (K < 0 || K > max_order)
        throw std::invalid_argument("expansion order K must lie in [0, 7]");
    if (K > route_max)
        throw std::invalid_argument("requested order K = " + std::to_string(K) + " exceeds the maximum of " +
                                    std::to_string(route_max) + " for this branch and route");
    return {K, false};
}

bool is_unit(double v) { return std::fabs(v - 1.0) <= 1e-12; }

void assemble(ExpansionResult& r, const std::vector<double>& terms, bool automatic)
{
    r.terms = terms;
    r.partial_sums.clear();
    double acc = 0.0;
    for (double t : terms) {
        acc += t;
        r.partial_sums.push_back(r.prefactor * acc);
    }
    r.truncation_used = automatic ? optimal_truncation(terms) : static_cast<int>(terms.size());
}

void flag_confidence(ExpansionResult& r, const Functional& F)
{
    if (F.alpha < 10.0 * std::max(1.0, F.power() * F.m))
        r.status = Status::low_confidence;
}

ExpansionResult trivial_zero()
{
    ExpansionResult r;
    r.branch = Branch::trivial;
    r.prefactor = LogValue::zero();
    r.terms = {0.0};
    r.partial_sums = {LogValue::zero()};
    r.truncation_used = 1;
    r.note = "integrand vanishes identically for m = 0";
    return r;
}

ExpansionResult oracle_only(const Functional& F, const Options& opt, const std::string& why)
{
    ExpansionResult r;
    r.branch = Branch::oracle_only;
    r.status = Status::no_expansion;
    r.oracle = oracle::integrate_functional(F, opt.oracle_tol).value;
    r.note = why;
    return r;
}

void require_kind(const Functional& F, Kind k, const char* fn)
{
    if (F.kind != k)
        throw std::invalid_argument(std::string(fn) + ": functional of kind " + kind_name(F.kind) +
                                    " is not accepted");
    F.validate();
}

// Shannon terms as L T_k + 2 dT_k/dkappa at kappa = 2, derivative by
// Richardson-extrapolated central differences.
std::vector<double> shannon_from_kappa(const std::function<std::vector<double>(double)>& terms_at, double L)
{
    const double h = 1e-5;
    const std::vector<double> t0 = terms_at(2.0);
    const std::vector<double> p1 = terms_at(2.0 + h), m1 = terms_at(2.0 - h);
    const std::vector<double> p2 = terms_at(2.0 + h / 2), m2 = terms_at(2.0 - h / 2);
    std::vector<double> out(t0.size());
    for (std::size_t k = 0; k < t0.size(); ++k) {
        const double d1 = (p1[k] - m1[k]) / (2 * h);
        const double d2 = (p2[k] - m2[k]) / h;
        out[k] = L * t0[k] + 2.0 * (4.0 * d2 - d1) / 3.0;
    }
    return out;
}

// ---- fixed-mu Laguerre ----------------------------------------------------

double lag_log_prefactor(const Functional& F, double kappa)
{
    return kappa * F.m * std::log(F.alpha) + log_gamma(F.mu) - F.mu * std::log(F.lambda) -
           kappa * log_gamma(F.m + 1.0);
}

std::vector<double> lag_terms(const Functional& F, double kappa, int K, Route route)
{
    if (route == Route::engine)
        return coeffs::lag_grouped_terms(F.mu, F.lambda, kappa, F.m, F.alpha, K);
    std::vector<double> t;
    for (int k = 0; k <= K; ++k)
        t.push_back(coeffs::lag_D(k, F.mu, F.lambda, kappa, F.m) / std::pow(F.alpha, k));
    return t;
}

// ---- Gegenbauer -------------------------------------------------------------

struct GegParams
{
    double a, b, c, d;
};

GegParams oriented(const Functional& F)
{
    if (F.c > F.d)
        return {F.b, F.a, F.d, F.c};
    return {F.a, F.b, F.c, F.d};
}

bool symmetric(const Functional& F) { return std::fabs(F.c - F.d) <= 1e-12 * std::max(F.c, F.d); }

double geg_log_prefactor(const Functional& F, const GegParams& g, double kappa)
{
    const double s = g.c + g.d;
    const double phi = -g.c * std::log(2 * g.c / s) - g.d * std::log(2 * g.d / s);
    return -F.alpha * phi + 0.5 * (log_2pi - std::log(F.alpha)) + kappa * F.m * std::log(2.0) +
           kappa * closedforms::pochhammer(F.alpha, F.m).log_abs - kappa * log_gamma(F.m + 1.0);
}

std::vector<double> geg_terms(const Functional& F, const GegParams& g, double kappa, int K, Route route)
{
    if (route == Route::engine)
        return coeffs::geg_grouped_terms(g.a, g.b, g.c, g.d, kappa, F.m, F.alpha, K);
    return {coeffs::geg_D0(g.a, g.b, g.c, g.d, kappa, F.m)};
}

void flag_geg(ExpansionResult& r, const Functional& F, const GegParams& g)
{
    flag_confidence(r, F);
    const double xm = (g.d - g.c) / (g.d + g.c);
    if (F.alpha * xm * xm < 25.0)
        r.status = Status::low_confidence;
}

// ---- extended Laguerre --------------------------------------------------------

double ext_log_prefactor(const Functional& F, double kappa)
{
    const double al = F.alpha, s = F.sigma, l = F.lambda;
    double v = (al + s) * std::log(al) - al - (al + s + kappa * F.m) * std::log(l) +
               0.5 * (log_2pi - std::log(al)) + kappa * F.m * std::log(al) - kappa * log_gamma(F.m + 1.0);
    if (F.m > 0)
        v += kappa * F.m * std::log(std::fabs(l - 1.0));
    return v;
}

std::vector<double> ext_terms(const Functional& F, double kappa, int K, Route route)
{
    if (route == Route::engine)
        return coeffs::ext_grouped_terms(F.sigma, F.lambda, kappa, F.m, F.alpha, K);
    std::vector<double> t{1.0};
    if (K >= 1) {
        const double s = F.sigma;
        const double d1 =
            F.m == 0 ? (6 * s * s - 6 * s + 1) / 12.0 : coeffs::ext_lag_D(1, F.sigma, F.lambda, kappa, F.m);
        t.push_back(d1 / F.alpha);
    }
    return t;
}

int route_max(Route route, int printed_max) { return route == Route::engine ? max_order : printed_max; }

} // namespace

LogValue ExpansionResult::value() const
{
    if (truncation_used > 0)
        return partial_sums.at(truncation_used - 1);
    if (oracle)
        return *oracle;
    return LogValue::zero();
}

std::string branch_name(Branch b)
{
    switch (b) {
    case Branch::laguerre: return "laguerre";
    case Branch::gegenbauer_asymmetric: return "gegenbauer_asymmetric";
    case Branch::gegenbauer_symmetric: return "gegenbauer_symmetric";
    case Branch::extended_saddle: return "extended_saddle";
    case Branch::extended_hermite: return "extended_hermite";
    case Branch::trivial: return "trivial";
    case Branch::oracle_only: return "oracle_only";
    }
    return "unknown";
}

std::string status_name(Status s)
{
    switch (s) {
    case Status::ok: return "ok";
    case Status::low_confidence: return "low_confidence";
    case Status::no_expansion: return "no_expansion";
    }
    return "unknown";
}

std::string route_name(Route r) { return r == Route::engine ? "engine" : "printed"; }

Route route_from_name(const std::string& name)
{
    if (name == "engine")
        return Route::engine;
    if (name == "printed")
        return Route::printed;
    throw std::invalid_argument("unknown route '" + name + "' (expected engine or printed)");
}

ExpansionResult renyi_laguerre_asym(const Functional& F, const Options& opt)
{
    require_kind(F, Kind::lag_renyi, "renyi_laguerre_asym");
    const OrderPlan plan = plan_order(opt, route_max(opt.route, 2));
    ExpansionResult r;
    r.branch = Branch::laguerre;
    r.prefactor = LogValue::from_log(lag_log_prefactor(F, F.kappa));
    assemble(r, lag_terms(F, F.kappa, plan.K, opt.route), plan.automatic);
    flag_confidence(r, F);
    return r;
}

ExpansionResult shannon_laguerre_asym(const Functional& F, const Options& opt)
{
    require_kind(F, Kind::lag_shannon, "shannon_laguerre_asym");
    if (F.m == 0)
        return trivial_zero();
    const OrderPlan plan = plan_order(opt, route_max(opt.route, 2));
    ExpansionResult r;
    r.branch = Branch::laguerre;
    r.prefactor = LogValue::from_log(lag_log_prefactor(F, 2.0));
    const double L = 2.0 * (F.m * std::log(F.alpha) - log_gamma(F.m + 1.0));
    std::vector<double> terms;
    if (opt.route == Route::printed) {
        for (int k = 0; k <= plan.K; ++k)
            terms.push_back((L * coeffs::lag_D(k, F.mu, F.lambda, 2.0, F.m) +
                             2.0 * coeffs::lag_D_kappa_derivative(k, F.mu, F.lambda, 2.0, F.m)) /
                            std::pow(F.alpha, k));
    } else {
        terms = shannon_from_kappa([&](double kappa) { return lag_terms(F, kappa, plan.K, Route::engine); }, L);
    }
    assemble(r, terms, plan.automatic);
    flag_confidence(r, F);
    return r;
}

ExpansionResult renyi_gegenbauer_asym(const Functional& F, const Options& opt)
{
    require_kind(F, Kind::geg_renyi, "renyi_gegenbauer_asym");
    ExpansionResult r;
    if (symmetric(F)) {
        if (!is_unit(F.c) || !is_unit(F.d))
            throw std::invalid_argument("symmetric weights are supported only for c = d = 1");
        r.branch = Branch::gegenbauer_symmetric;
        const double al = F.alpha;
        if (F.kappa == 2.0) {
            const OrderPlan plan = plan_order(opt, 1);
            r.prefactor = LogValue::from_log(0.5 * (std::log(std::numbers::pi) - std::log(al)) +
                                             F.m * std::log(2 * al) - log_gamma(F.m + 1.0));
            std::vector<double> terms{1.0};
            if (plan.K >= 1)
                terms.push_back(coeffs::geg_sym_D1(F.a, F.b, F.m) / al);
            assemble(r, terms, plan.automatic);
        } else {
            plan_order(opt, 0);
            const LogValue h = oracle::hermite_power_integral(F.m, F.kappa, al).value;
            r.prefactor = h * LogValue::from_log(0.5 * F.kappa * F.m * std::log(al) - 0.5 * std::log(2.0) -
                                                 F.kappa * log_gamma(F.m + 1.0));
            assemble(r, {1.0}, false);
            r.note = "leading term from the Hermite-power integral";
        }
        flag_confidence(r, F);
        return r;
    }
    const GegParams g = oriented(F);
    const OrderPlan plan = plan_order(opt, route_max(opt.route, 0));
    r.branch = Branch::gegenbauer_asymmetric;
    r.prefactor = LogValue::from_log(geg_log_prefactor(F, g, F.kappa));
    assemble(r, geg_terms(F, g, F.kappa, plan.K, opt.route), plan.automatic);
    flag_geg(r, F, g);
    return r;
}

ExpansionResult shannon_gegenbauer_asym(const Functional& F, const Options& opt)
{
    require_kind(F, Kind::geg_shannon, "shannon_gegenbauer_asym");
    if (F.m == 0)
        return trivial_zero();
    if (symmetric(F))
        return oracle_only(F, opt, "no asymptotic expansion is known for c = d");
    const GegParams g = oriented(F);
    const OrderPlan plan = plan_order(opt, route_max(opt.route, 0));
    ExpansionResult r;
    r.branch = Branch::gegenbauer_asymmetric;
    r.prefactor = LogValue::from_log(geg_log_prefactor(F, g, 2.0));
    const double L = 2.0 * (F.m * std::log(2.0) + closedforms::pochhammer(F.alpha, F.m).log_abs -
                            log_gamma(F.m + 1.0));
    std::vector<double> terms;
    if (opt.route == Route::printed) {
        const double d0 = coeffs::geg_D0(g.a, g.b, g.c, g.d, 2.0, F.m);
        const double xm = (g.d - g.c) / (g.d + g.c);
        terms.push_back(L * d0 + 2.0 * d0 * F.m * std::log(xm));
    } else {
        terms = shannon_from_kappa([&](double kappa) { return geg_terms(F, g, kappa, plan.K, Route::engine); }, L);
    }
    assemble(r, terms, plan.automatic);
    flag_geg(r, F, g);
    return r;
}

ExpansionResult ext_renyi_laguerre_asym(const Functional& F, const Options& opt)
{
    require_kind(F, Kind::ext_lag_renyi, "ext_renyi_laguerre_asym");
    ExpansionResult r;
    const double al = F.alpha;
    if (F.m > 0 && is_unit(F.lambda)) {
        plan_order(opt, 0);
        r.branch = Branch::extended_hermite;
        const double base = (al + F.sigma) * std::log(al) - al;
        if (F.kappa == 2.0) {
            r.prefactor = LogValue::from_log(base + F.m * std::log(al) + 0.5 * (log_2pi - std::log(al)) -
                                             log_gamma(F.m + 1.0));
        } else {
            const LogValue h = oracle::hermite_power_integral(F.m, F.kappa, al).value;
            r.prefactor = h * LogValue::from_log(base + 0.5 * F.kappa * F.m * std::log(al / 2) -
                                                 F.kappa * log_gamma(F.m + 1.0));
            r.note = "leading term from the Hermite-power integral";
        }
        assemble(r, {1.0}, false);
        flag_confidence(r, F);
        return r;
    }
    const OrderPlan plan = plan_order(opt, route_max(opt.route, 1));
    r.branch = Branch::extended_saddle;
    r.prefactor = LogValue::from_log(ext_log_prefactor(F, F.kappa));
    assemble(r, ext_terms(F, F.kappa, plan.K, opt.route), plan.automatic);
    flag_confidence(r, F);
    return r;
}

ExpansionResult ext_shannon_laguerre_asym(const Functional& F, const Options& opt)
{
    require_kind(F, Kind::ext_lag_shannon, "ext_shannon_laguerre_asym");
    if (F.m == 0)
        return trivial_zero();
    if (is_unit(F.lambda))
        return oracle_only(F, opt, "no asymptotic expansion is known for lambda = 1");
    const OrderPlan plan = plan_order(opt, route_max(opt.route, 1));
    ExpansionResult r;
    r.branch = Branch::extended_saddle;
    r.prefactor = LogValue::from_log(ext_log_prefactor(F, 2.0));
    const double L = 2.0 * F.m * (std::log(F.alpha) + std::log(std::fabs(F.lambda - 1.0)) - std::log(F.lambda)) -
                     2.0 * log_gamma(F.m + 1.0);
    std::vector<double> terms;
    if (opt.route == Route::printed) {
        for (int k = 0; k <= plan.K; ++k)
            terms.push_back((L * coeffs::ext_lag_D(k, F.sigma, F.lambda, 2.0, F.m) +
                             2.0 * coeffs::ext_lag_D_kappa_derivative(k, F.sigma, F.lambda, 2.0, F.m)) /
                            std::pow(F.alpha, k));
    } else {
        terms = shannon_from_kappa([&](double kappa) { return ext_terms(F, kappa, plan.K, Route::engine); }, L);
    }
    assemble(r, terms, plan.automatic);
    flag_confidence(r, F);
    return r;
}

ExpansionResult expand(const Functional& F, const Options& opt)
{
    switch (F.kind) {
    case Kind::lag_renyi: return renyi_laguerre_asym(F, opt);
    case Kind::lag_shannon: return shannon_laguerre_asym(F, opt);
    case Kind::geg_renyi: return renyi_gegenbauer_asym(F, opt);
    case Kind::geg_shannon: return shannon_gegenbauer_asym(F, opt);
    case Kind::ext_lag_renyi: return ext_renyi_laguerre_asym(F, opt);
    case Kind::ext_lag_shannon: return ext_shannon_laguerre_asym(F, opt);
    }
    throw std::invalid_argument("unknown functional kind");
}

double hermite_type_gegenbauer(int m, double alpha, double x, int orders)
{
    if (orders < 0 || orders > 1)
        throw std::invalid_argument("hermite_type_gegenbauer: orders must be 0 or 1");
    if (!(alpha > 0.0) || !(std::fabs(x) <= 4.0))
        throw std::invalid_argument("hermite_type_gegenbauer: need alpha > 0 and |x| <= 4");
    const coeffs::HermiteGeg h = coeffs::geg_hermite_coeffs(m, x);
    double p = 0.0, q = 0.0;
    for (int k = 0; k <= orders; ++k) {
        p += h.p[k] / std::pow(alpha, k);
        q += h.q[k] / std::pow(alpha, k);
    }
    double v = orthopoly::hermite_value(m, x) * p;
    if (m > 0)
        v += m / alpha * orthopoly::hermite_value(m - 1, x) * q;
    return std::exp(0.5 * m * std::log(alpha) - log_gamma(m + 1.0)) * v;
}

double hermite_type_laguerre(int m, double alpha, double x, int orders)
{
    if (orders < 0 || orders > 1)
        throw std::invalid_argument("hermite_type_laguerre: orders must be 0 or 1");
    if (!(alpha > 0.0))
        throw std::invalid_argument("hermite_type_laguerre: alpha must be positive");
    const double z = std::sqrt(alpha / 2) * (x - 1.0);
    if (!(std::fabs(z) <= 4.0))
        throw std::invalid_argument("hermite_type_laguerre: need |sqrt(alpha/2)(x-1)| <= 4");
    const coeffs::HermiteLag h = coeffs::lag_hermite_coeffs(m, alpha, x);
    double c = 0.0, d = 0.0;
    for (int k = 0; k <= orders; ++k) {
        c += h.c[k] / std::pow(alpha, k);
        d += h.d[k] / std::pow(alpha, k);
    }
    double v = orthopoly::hermite_value(m, z) * c;
    if (m > 0)
        v -= m * std::sqrt(2.0 / alpha) * orthopoly::hermite_value(m - 1, z) * d;
    const double sign = (m % 2) ? -1.0 : 1.0;
    return sign * std::exp(0.5 * m * std::log(alpha / 2) - log_gamma(m + 1.0)) * v;
}

int optimal_truncation(const std::vector<double>& terms)
{
    if (terms.empty())
        throw std::invalid_argument("optimal_truncation: terms must be nonempty");
    for (std::size_t k = 1; k < terms.size(); ++k)
        if (std::fabs(terms[k]) > std::fabs(terms[k - 1]))
            return static_cast<int>(k);
    return static_cast<int>(terms.size());
}

} // namespace entropic::asymptotics
