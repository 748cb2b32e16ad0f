#include "entropic/closedforms.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace entropic::closedforms {

namespace {

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

LogValue log_factorial(int n) { return LogValue::from_log(std::lgamma(n + 1.0)); }

} // namespace

double log_gamma(double x)
{
    if (!(x > 0.0))
        throw std::invalid_argument("log_gamma needs a positive argument");
    return boost::math::lgamma(x);
}

LogValue gamma_value(double x)
{
    if (is_nonpositive_integer(x))
        throw std::invalid_argument("Gamma pole at " + std::to_string(x));
    int sign = 1;
    const double lg = boost::math::lgamma(x, &sign);
    return LogValue::from_log(lg, sign);
}

LogValue pochhammer(double a, int n)
{
    if (n < 0)
        throw std::invalid_argument("pochhammer needs n >= 0");
    if (n == 0)
        return LogValue::one();
    if (is_nonpositive_integer(a) && -a < n)
        return LogValue::zero();
    if (a > 0.0 && n > 1000)
        return LogValue::from_log(boost::math::lgamma(a + n) - boost::math::lgamma(a));
    double log_abs = 0.0;
    int sign = 1;
    for (int i = 0; i < n; ++i) {
        const double t = a + i;
        if (t < 0.0)
            sign = -sign;
        log_abs += std::log(std::fabs(t));
    }
    return LogValue::from_log(log_abs, sign);
}

LogValue log_beta(double p, double q)
{
    return LogValue::from_log(log_gamma(p) + log_gamma(q) - log_gamma(p + q));
}

int terminating_index(const HyperTerm& h)
{
    int n = -1;
    for (double a : h.upper)
        if (is_nonpositive_integer(a)) {
            const int k = static_cast<int>(-a);
            n = (n < 0) ? k : std::min(n, k);
        }
    if (n < 0 && h.argument != 0.0)
        throw std::invalid_argument("hypergeometric series does not terminate");
    if (n < 0)
        n = 0;
    for (double b : h.lower)
        if (is_nonpositive_integer(b) && -b < n)
            throw std::invalid_argument("lower parameter " + std::to_string(b) +
                                        " hits a pole before the series terminates");
    return n;
}

LogValue hyper_terminating(const HyperTerm& h)
{
    const int n_last = terminating_index(h);
    // terms from the ratio recurrence, summed in 50 digits: Kummer-type sums
    // cancel by many orders of magnitude
    using Wide = boost::multiprecision::cpp_bin_float_50;
    Wide term = 1, sum = 1;
    for (int n = 0; n < n_last; ++n) {
        Wide ratio = Wide(h.argument) / (n + 1);
        for (double a : h.upper)
            ratio *= Wide(a) + n;
        for (double b : h.lower)
            ratio /= Wide(b) + n;
        term *= ratio;
        sum += term;
    }
    return LogValue::from_double(sum.convert_to<double>());
}

LogValue laguerre_square_unit_rate(int m, double alpha, double mu)
{
    if (m < 0 || !(mu > 0.0) || !(alpha > -1.0))
        throw std::invalid_argument("laguerre_square_unit_rate: need m >= 0, mu > 0, alpha > -1");
    const LogValue front = pochhammer(alpha + 1.0, m) * pochhammer(alpha + 1.0 - mu, m) *
                           LogValue::from_log(log_gamma(mu)) / (log_factorial(m) * log_factorial(m));
    if (front.is_zero())
        throw std::invalid_argument("laguerre_square_unit_rate: degenerate parameters (mu - alpha - 1 integer)");
    const HyperTerm h{{-static_cast<double>(m), mu, mu - alpha}, {alpha + 1.0, mu - alpha - m}, 1.0};
    return front * hyper_terminating(h);
}

LogValue gegenbauer_square_asymmetric(int m, double alpha)
{
    if (m < 0 || !(alpha > 0.0))
        throw std::invalid_argument("gegenbauer_square_asymmetric: need m >= 0, alpha > 0");
    const LogValue two_m = LogValue::from_log(m * std::log(2.0));
    const LogValue den = two_m * pochhammer(alpha + 0.5, m) * log_factorial(m);
    return LogValue::from_log(0.5 * std::log(std::numbers::pi)) * pochhammer(2.0 * alpha, 2 * m) / (den * den) *
           gamma_value(alpha + 2 * m + 0.5) * gamma_value(3.0 * alpha + 2 * m - 0.5) /
           (gamma_value(2.0 * alpha) * gamma_value(2.0 * alpha + 2 * m + 0.5));
}

LogValue gegenbauer_square_symmetric(int m, double alpha)
{
    if (m < 0 || !(alpha > 0.5))
        throw std::invalid_argument("gegenbauer_square_symmetric: need m >= 0, alpha > 1/2");
    return LogValue::from_log(0.5 * std::log(std::numbers::pi)) * pochhammer(2.0 * alpha, m) / log_factorial(m) *
           LogValue::from_log(log_gamma(alpha - 0.5) - log_gamma(alpha));
}

LogValue laguerre_weighted_square(int m, double alpha, double lambda)
{
    if (m < 0 || !(alpha > -1.0) || !(lambda > 0.0))
        throw std::invalid_argument("laguerre_weighted_square: need m >= 0, alpha > -1, lambda > 0");
    const LogValue front = pochhammer(alpha + 1.0, m) * pochhammer(alpha + 1.0, m) *
                           LogValue::from_log(log_gamma(alpha + 1.0) - (2.0 * m + alpha + 1.0) * std::log(lambda)) /
                           (log_factorial(m) * log_factorial(m));
    if (lambda == 1.0) {
        // (lambda-1)^{2m} 2F1(...; 1/(lambda-1)^2) tends to its top term m!/(alpha+1)_m
        return front * log_factorial(m) / pochhammer(alpha + 1.0, m);
    }
    const double t = lambda - 1.0;
    const HyperTerm h{{-static_cast<double>(m), -static_cast<double>(m)}, {alpha + 1.0}, 1.0 / (t * t)};
    return front * LogValue::from_log(2.0 * m * std::log(std::fabs(t))) * hyper_terminating(h);
}

LogValue laguerre_norm_square(int m, double alpha)
{
    if (m < 0 || !(alpha + m + 1.0 > 0.0))
        throw std::invalid_argument("laguerre_norm_square: need m >= 0, alpha + m + 1 > 0");
    return gamma_value(alpha + m + 1.0) / log_factorial(m);
}

std::optional<LogValue> closed_form_value(const Functional& F)
{
    F.validate();
    if (F.is_shannon() && F.m == 0)
        return LogValue::zero();
    switch (F.kind) {
    case Kind::lag_renyi:
        if (F.m == 0)
            return LogValue::from_log(log_gamma(F.mu) - F.mu * std::log(F.lambda));
        if (F.kappa == 2.0 && F.lambda == 1.0) {
            try {
                return laguerre_square_unit_rate(F.m, F.alpha, F.mu);
            } catch (const std::invalid_argument&) {
                return std::nullopt;
            }
        }
        return std::nullopt;
    case Kind::geg_renyi:
        if (F.m == 0) {
            const double p = F.c * F.alpha + F.a + 1.0, q = F.d * F.alpha + F.b + 1.0;
            return LogValue::from_log((p + q - 1.0) * std::log(2.0)) * log_beta(p, q);
        }
        if (F.kappa == 2.0 && F.a == -0.5 && F.c == 1.0 && F.d == 3.0 && F.b == 2.0 * F.m - 1.5)
            return gegenbauer_square_asymmetric(F.m, F.alpha);
        if (F.kappa == 2.0 && F.a == -0.5 && F.b == -1.5 && F.c == 1.0 && F.d == 1.0 && F.alpha > 0.5)
            return gegenbauer_square_symmetric(F.m, F.alpha);
        return std::nullopt;
    case Kind::ext_lag_renyi:
        if (F.m == 0)
            return LogValue::from_log(log_gamma(F.alpha + F.sigma) - (F.alpha + F.sigma) * std::log(F.lambda));
        if (F.kappa == 2.0 && F.sigma == 1.0)
            return F.lambda == 1.0 ? laguerre_norm_square(F.m, F.alpha)
                                   : laguerre_weighted_square(F.m, F.alpha, F.lambda);
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

} // namespace entropic::closedforms
