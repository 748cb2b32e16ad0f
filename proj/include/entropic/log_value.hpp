#pragma once

#include <cmath>
#include <limits>
#include <optional>

namespace entropic {

// Sign and natural-log magnitude. Gamma-scale prefactors such as
// alpha^alpha overflow doubles long before alpha reaches the regimes of
// interest, so every public numeric result travels in this form.
struct LogValue
{
    int sign = 0;
    double log_abs = -std::numeric_limits<double>::infinity();

    static LogValue zero() { return {}; }
    static LogValue one() { return {1, 0.0}; }
    static LogValue from_log(double log_abs, int sign = 1);
    static LogValue from_double(double v);

    bool is_zero() const { return sign == 0; }

    // Linear value; may overflow to +-inf.
    double to_double() const;

    // Linear value only when it is comfortably inside double range.
    std::optional<double> linear() const;

    LogValue operator-() const { return {-sign, log_abs}; }
};

LogValue operator*(LogValue a, LogValue b);
LogValue operator/(LogValue a, LogValue b);
LogValue operator+(LogValue a, LogValue b);
LogValue operator-(LogValue a, LogValue b);
LogValue operator*(LogValue a, double b);

// |a/b - 1| evaluated without leaving log space where possible.
double relative_difference(LogValue a, LogValue reference);

} // namespace entropic
