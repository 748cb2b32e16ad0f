#include "entropic/oracle.hpp"

#include "entropic/errors.hpp"
#include "entropic/orthopoly.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace entropic::oracle {

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

double log_add(double a, double b)
{
    if (a == neg_inf)
        return b;
    if (b == neg_inf)
        return a;
    const double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

// log of int_X^inf x^{s-1} e^{-lambda x} dx
double log_gamma_tail(double s, double lambda, double X)
{
    const double q = boost::math::gamma_q(s, lambda * X);
    if (q <= 0.0)
        return neg_inf;
    return std::log(q) + boost::math::lgamma(s) - s * std::log(lambda);
}

// log of the sum of absolute monomial coefficients of L_m^(alpha)
double log_laguerre_coeff_sum(int m, double alpha)
{
    double acc = neg_inf;
    for (int k = 0; k <= m; ++k) {
        // (alpha + k + 1)_{m-k} / ((m-k)! k!)
        double l = -std::lgamma(m - k + 1.0) - std::lgamma(k + 1.0);
        for (int i = 0; i < m - k; ++i)
            l += std::log(alpha + k + 1.0 + i);
        acc = log_add(acc, l);
    }
    return acc;
}

struct Sample
{
    double log_mag;    // log |weight * p^power|
    double multiplier; // 1 for Renyi, log p^2 for Shannon
};

struct Problem
{
    double lo = 0.0;
    double hi = 0.0;
    bool semi_infinite = false;
    std::vector<double> zeros;
    double log_const = 0.0;
    double var_scale = 1.0; // original variable = var_scale * integration variable
    bool positive = true;
    std::function<Sample(const quadrature::Node&)> eval;
    std::function<double(double)> log_tail; // absolute log bound beyond the given upper limit
};

Sample polynomial_sample(double log_weight, double p, double power, bool shannon)
{
    if (p == 0.0)
        return {neg_inf, 0.0};
    const double lp = std::log(std::fabs(p));
    if (shannon)
        return {log_weight + 2.0 * lp, 2.0 * lp};
    return {log_weight + power * lp, 1.0};
}

quadrature::Node plain_node(double x) { return {x, 0.0, 0.0, neg_inf, -neg_inf}; }

Problem build_problem(const Functional& F)
{
    Problem P;
    const bool shannon = F.is_shannon();
    const double power = F.power();
    P.positive = !shannon;
    const int m = F.m;
    const double alpha = F.alpha;

    switch (F.kind) {
    case Kind::lag_renyi:
    case Kind::lag_shannon: {
        const double mu = F.mu, lambda = F.lambda;
        P.semi_infinite = true;
        P.eval = [=](const quadrature::Node& n) {
            const double x = n.x;
            return polynomial_sample((mu - 1.0) * std::log(x) - lambda * x, orthopoly::laguerre_value(m, alpha, x),
                                     power, shannon);
        };
        const double lp = log_laguerre_coeff_sum(m, alpha);
        P.log_tail = [=](double X) {
            X = std::max(X, 1.0);
            if (!shannon)
                return power * lp + log_gamma_tail(mu + power * m, lambda, X);
            return log_add(4.0 * lp + log_gamma_tail(mu + 4.0 * m, lambda, X),
                           -1.0 + log_gamma_tail(mu, lambda, X));
        };
        if (m > 0)
            P.zeros = orthopoly::polynomial_zeros(orthopoly::Family::laguerre, m, alpha).roots;
        const double zmax = P.zeros.empty() ? 0.0 : P.zeros.back();
        P.hi = std::max(1.0, zmax * 1.1) + (mu + power * m + 40.0) / lambda;
        break;
    }
    case Kind::ext_lag_renyi:
    case Kind::ext_lag_shannon: {
        // x = alpha u
        const double sigma = F.sigma, lambda = F.lambda;
        const double e = alpha + sigma - 1.0;
        P.semi_infinite = true;
        P.var_scale = alpha;
        P.log_const = (alpha + sigma) * std::log(alpha) - e * std::log(lambda) - alpha;
        P.eval = [=](const quadrature::Node& n) {
            const double u = n.x;
            const double lu = lambda * u;
            const double lw = e * std::log(lu) - alpha * (lu - 1.0);
            return polynomial_sample(lw, orthopoly::laguerre_value(m, alpha, alpha * u), power, shannon);
        };
        const double lp = log_laguerre_coeff_sum(m, alpha);
        const double s = alpha + sigma;
        P.log_tail = [=](double U) {
            const double X = std::max(alpha * U, 1.0);
            if (!shannon)
                return power * lp + log_gamma_tail(s + power * m, lambda, X);
            return log_add(4.0 * lp + log_gamma_tail(s + 4.0 * m, lambda, X), -1.0 + log_gamma_tail(s, lambda, X));
        };
        if (m > 0)
            for (double z : orthopoly::polynomial_zeros(orthopoly::Family::laguerre, m, alpha).roots)
                P.zeros.push_back(z / alpha);
        const double zmax = P.zeros.empty() ? 0.0 : P.zeros.back();
        P.hi = std::max(zmax * 1.1, 1.0 / lambda) + (12.0 + power * m) / (lambda * std::sqrt(alpha)) + 1.0 / lambda;
        break;
    }
    case Kind::geg_renyi:
    case Kind::geg_shannon: {
        const double ea = F.c * alpha + F.a, eb = F.d * alpha + F.b;
        P.lo = -1.0;
        P.hi = 1.0;
        P.eval = [=](const quadrature::Node& n) {
            const double x = n.x;
            const double one_minus = (n.hi == 1.0) ? n.from_hi : 1.0 - x;
            const double one_plus = (n.lo == -1.0) ? n.from_lo : 1.0 + x;
            const double lw = ea * std::log(one_minus) + eb * std::log(one_plus);
            return polynomial_sample(lw, orthopoly::gegenbauer_value(m, alpha, x), power, shannon);
        };
        if (m > 0)
            P.zeros = orthopoly::polynomial_zeros(orthopoly::Family::gegenbauer, m, alpha).roots;
        break;
    }
    }
    return P;
}

std::vector<double> probe_grid(const Problem& P)
{
    std::vector<double> g;
    if (P.semi_infinite) {
        const int n = 2000;
        for (int i = 1; i <= n; ++i)
            g.push_back(P.hi * i / n);
        for (int i = 0; i <= 400; ++i)
            g.push_back(P.hi * std::pow(10.0, -8.0 + 8.0 * i / 400.0));
    } else {
        const int n = 4000;
        for (int i = 1; i < n; ++i)
            g.push_back(-std::cos(std::numbers::pi * i / n));
    }
    for (std::size_t i = 0; i + 1 < P.zeros.size(); ++i)
        g.push_back(0.5 * (P.zeros[i] + P.zeros[i + 1]));
    std::sort(g.begin(), g.end());
    return g;
}

struct Run
{
    quadrature::Result q;
    double shift = 0.0;
};

Run integrate_problem(const Problem& P, double hi, double tol_rel, quadrature::Execution exec)
{
    Problem local = P;
    local.hi = hi;
    const std::vector<double> probes = probe_grid(local);
    double S = neg_inf, best = 0.0;
    std::vector<double> logs(probes.size());
    for (std::size_t i = 0; i < probes.size(); ++i) {
        logs[i] = P.eval(plain_node(probes[i])).log_mag;
        if (logs[i] > S) {
            S = logs[i];
            best = probes[i];
        }
    }
    if (S == neg_inf)
        S = 0.0;
    std::vector<double> breaks{P.lo, hi, best};
    for (double z : P.zeros)
        if (z > P.lo && z < hi)
            breaks.push_back(z);
    double va = hi, vb = P.lo;
    for (std::size_t i = 0; i < probes.size(); ++i)
        if (logs[i] >= S - 60.0) {
            va = std::min(va, probes[i]);
            vb = std::max(vb, probes[i]);
        }
    if (vb > va)
        for (int i = 0; i <= 16; ++i)
            breaks.push_back(va + (vb - va) * i / 16.0);
    breaks.erase(std::remove_if(breaks.begin(), breaks.end(), [&](double v) { return v < P.lo || v > hi; }),
                 breaks.end());

    quadrature::Options opt;
    opt.tol_rel = tol_rel;
    opt.execution = exec;
    auto f = [&P, S](const quadrature::Node& n) {
        const Sample s = P.eval(n);
        if (s.multiplier == 0.0 || s.log_mag == neg_inf)
            return 0.0;
        return s.multiplier * std::exp(s.log_mag - S);
    };
    Run r;
    r.q = quadrature::integrate(f, breaks, opt);
    r.shift = S;
    return r;
}

QuadResult finish(const Problem& P, const Run& r)
{
    std::ostringstream diag;
    if (!r.q.converged) {
        diag << "quadrature did not converge within " << r.q.segments.size() << " segments: estimate " << r.q.value
             << " error " << r.q.error;
        throw numeric_failure(diag.str());
    }
    if (P.positive && !(r.q.value > 0.0)) {
        diag << "nonpositive estimate " << r.q.value << " for a nonnegative integrand";
        throw numeric_failure(diag.str());
    }
    QuadResult out;
    const double base = r.shift + P.log_const;
    if (r.q.value == 0.0)
        out.value = LogValue::zero();
    else
        out.value = LogValue::from_log(std::log(std::fabs(r.q.value)) + base, r.q.value > 0 ? 1 : -1);
    out.abs_err_log = r.q.error > 0.0 ? std::log(r.q.error) + base : neg_inf;
    out.n_evals = r.q.n_evals;
    for (const auto& s : r.q.segments)
        out.segments.emplace_back(s.lo * P.var_scale, s.hi * P.var_scale);
    return out;
}

void check_tol(double tol_rel)
{
    if (!(tol_rel >= 1e-13 && tol_rel <= 1e-6))
        throw std::invalid_argument("tol_rel must lie in [1e-13, 1e-6]");
}

} // namespace

QuadResult integrate_functional(const Functional& F, double tol_rel, quadrature::Execution exec)
{
    F.validate();
    check_tol(tol_rel);
    const Problem P = build_problem(F);
    double hi = P.hi;
    if (!P.semi_infinite)
        return finish(P, integrate_problem(P, hi, tol_rel, exec));

    // grow the cut-off until the analytic tail bound is negligible
    for (int attempt = 0; attempt < 40; ++attempt) {
        const Run r = integrate_problem(P, hi, tol_rel, exec);
        const double scale = std::max(std::fabs(r.q.value), 1e-6 * r.q.abs_value);
        if (scale == 0.0)
            return finish(P, r);
        const double log_total = std::log(scale) + r.shift + P.log_const;
        if (P.log_tail(hi) <= log_total + std::log(0.1 * tol_rel))
            return finish(P, r);
        hi *= 1.5;
    }
    throw numeric_failure("tail cut-off did not settle");
}

QuadResult hermite_power_integral(int m, double kappa, double alpha_scale, double tol_rel,
                                  quadrature::Execution exec)
{
    if (!(kappa > 0.0) || !(alpha_scale > 0.0))
        throw std::invalid_argument("hermite_power_integral: need kappa > 0 and alpha > 0");
    check_tol(tol_rel);
    Problem P;
    P.positive = true;
    P.eval = [=](const quadrature::Node& n) {
        const double t = n.x;
        return polynomial_sample(-t * t, orthopoly::hermite_value(m, t), kappa, false);
    };
    if (m > 0)
        P.zeros = orthopoly::polynomial_zeros(orthopoly::Family::hermite, m).roots;
    double T = std::sqrt(2.0 * m + 1.0) + 2.0;
    // |H_m(t)| <= (2|t| + m)^m
    const double peak = kappa * m * std::log(std::sqrt(2.0 * m + 1.0) + 1.0);
    while (-T * T + kappa * m * std::log(2.0 * T + m) > std::min(peak, 0.0) - 60.0 + std::log(tol_rel))
        T += 0.5;
    P.lo = -T;
    P.hi = T;
    P.zeros.push_back(0.0);
    P.log_const = 0.5 * std::log(2.0 / alpha_scale);
    P.var_scale = std::sqrt(2.0 / alpha_scale);
    return finish(P, integrate_problem(P, T, tol_rel, exec));
}

double shannon_integrand_value(const Functional& F, double x)
{
    F.validate();
    double p = 0.0;
    if (F.is_gegenbauer())
        p = orthopoly::gegenbauer_value(F.m, F.alpha, x);
    else
        p = orthopoly::laguerre_value(F.m, F.alpha, x);
    if (p == 0.0)
        return 0.0;
    const double p2 = p * p;
    return p2 * std::log(p2);
}

} // namespace entropic::oracle
