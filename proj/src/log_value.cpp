#include "entropic/log_value.hpp"

#include <stdexcept>

namespace entropic {

LogValue LogValue::from_log(double log_abs, int sign)
{
    if (sign == 0 || log_abs == -std::numeric_limits<double>::infinity())
        return zero();
    if (std::isnan(log_abs))
        throw std::domain_error("LogValue: NaN magnitude");
    return {sign > 0 ? 1 : -1, log_abs};
}

LogValue LogValue::from_double(double v)
{
    if (std::isnan(v))
        throw std::domain_error("LogValue: NaN input");
    if (v == 0.0)
        return zero();
    return {v > 0 ? 1 : -1, std::log(std::fabs(v))};
}

double LogValue::to_double() const
{
    if (sign == 0)
        return 0.0;
    return sign * std::exp(log_abs);
}

std::optional<double> LogValue::linear() const
{
    if (sign == 0)
        return 0.0;
    if (log_abs >= 700.0)
        return std::nullopt;
    return to_double();
}

LogValue operator*(LogValue a, LogValue b)
{
    if (a.is_zero() || b.is_zero())
        return LogValue::zero();
    return {a.sign * b.sign, a.log_abs + b.log_abs};
}

LogValue operator/(LogValue a, LogValue b)
{
    if (b.is_zero())
        throw std::domain_error("LogValue: division by zero");
    if (a.is_zero())
        return LogValue::zero();
    return {a.sign * b.sign, a.log_abs - b.log_abs};
}

LogValue operator+(LogValue a, LogValue b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.log_abs < b.log_abs)
        std::swap(a, b);
    // |a| >= |b|
    const double r = std::exp(b.log_abs - a.log_abs);
    if (a.sign == b.sign)
        return {a.sign, a.log_abs + std::log1p(r)};
    if (r == 1.0)
        return LogValue::zero();
    return {a.sign, a.log_abs + std::log1p(-r)};
}

LogValue operator-(LogValue a, LogValue b) { return a + (-b); }

LogValue operator*(LogValue a, double b) { return a * LogValue::from_double(b); }

double relative_difference(LogValue a, LogValue reference)
{
    if (reference.is_zero())
        return a.is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
    if (a.is_zero())
        return 1.0;
    const double d = a.log_abs - reference.log_abs;
    if (a.sign == reference.sign)
        return std::fabs(std::expm1(d));
    return 1.0 + std::exp(d);
}

} // namespace entropic
