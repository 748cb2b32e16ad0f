#include "entropic/orthopoly.hpp"

#include "entropic/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

namespace entropic::orthopoly {

namespace {

void check_degree(int m)
{
    if (m < 0 || m > max_degree)
        throw std::invalid_argument("degree " + std::to_string(m) + " outside [0, " +
                                    std::to_string(max_degree) + "]");
}

double laguerre_raw(int m, double alpha, double x)
{
    if (m < 0)
        return 0.0;
    double prev = 1.0;
    if (m == 0)
        return prev;
    double cur = alpha + 1.0 - x;
    for (int k = 1; k < m; ++k) {
        const double next = ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

double gegenbauer_raw(int m, double alpha, double x)
{
    if (m < 0)
        return 0.0;
    double prev = 1.0;
    if (m == 0)
        return prev;
    double cur = 2.0 * alpha * x;
    for (int k = 1; k < m; ++k) {
        const double next = (2.0 * (k + alpha) * x * cur - (k + 2.0 * alpha - 1.0) * prev) / (k + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

double hermite_raw(int m, double x)
{
    if (m < 0)
        return 0.0;
    double prev = 1.0;
    if (m == 0)
        return prev;
    double cur = 2.0 * x;
    for (int k = 1; k < m; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Safeguarded Newton inside a sign-change bracket.
double polish_root(const std::function<PolyEval(double)>& p, double lo, double hi)
{
    double flo = p(lo).value;
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 100; ++it) {
        const PolyEval e = p(x);
        if (e.value == 0.0)
            return x;
        if ((e.value < 0) == (flo < 0)) {
            lo = x;
            flo = e.value;
        } else {
            hi = x;
        }
        double next = x - e.value / e.derivative;
        if (!(next > lo && next < hi) || !std::isfinite(next))
            next = 0.5 * (lo + hi);
        const double step = std::fabs(next - x);
        x = next;
        if (step <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(x)) ||
            hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(x)))
            return x;
    }
    throw numeric_failure("root polish did not converge in 100 iterations on [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

std::vector<double> scan_roots(const std::function<PolyEval(double)>& p, const std::vector<double>& grid)
{
    std::vector<double> roots;
    double x0 = grid.front();
    double v0 = p(x0).value;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double x1 = grid[i];
        const double v1 = p(x1).value;
        if (v0 == 0.0) {
            roots.push_back(x0);
        } else if (v1 != 0.0 && ((v0 < 0) != (v1 < 0))) {
            roots.push_back(polish_root(p, x0, x1));
        }
        x0 = x1;
        v0 = v1;
    }
    return roots;
}

} // namespace

PolyEval laguerre_eval(int m, double alpha, double x)
{
    check_degree(m);
    if (!(alpha > -1.0))
        throw std::invalid_argument("Laguerre parameter must exceed -1");
    return {laguerre_raw(m, alpha, x), m == 0 ? 0.0 : -laguerre_raw(m - 1, alpha + 1.0, x)};
}

double laguerre_value(int m, double alpha, double x)
{
    check_degree(m);
    if (!(alpha > -1.0))
        throw std::invalid_argument("Laguerre parameter must exceed -1");
    return laguerre_raw(m, alpha, x);
}

PolyEval gegenbauer_eval(int m, double alpha, double x)
{
    check_degree(m);
    if (!(alpha > 0.0))
        throw std::invalid_argument("Gegenbauer parameter must be positive");
    return {gegenbauer_raw(m, alpha, x), m == 0 ? 0.0 : 2.0 * alpha * gegenbauer_raw(m - 1, alpha + 1.0, x)};
}

double gegenbauer_value(int m, double alpha, double x)
{
    check_degree(m);
    if (!(alpha > 0.0))
        throw std::invalid_argument("Gegenbauer parameter must be positive");
    return gegenbauer_raw(m, alpha, x);
}

PolyEval hermite_eval(int m, double x)
{
    check_degree(m);
    return {hermite_raw(m, x), m == 0 ? 0.0 : 2.0 * m * hermite_raw(m - 1, x)};
}

double hermite_value(int m, double x)
{
    check_degree(m);
    return hermite_raw(m, x);
}

double gegenbauer_explicit(int m, double alpha, double x)
{
    check_degree(m);
    double sum = 0.0;
    for (int n = 0; n <= m / 2; ++n) {
        // (alpha)_{m-n} / (n! (m-2n)!)
        double term = 1.0;
        for (int i = 0; i < m - n; ++i)
            term *= alpha + i;
        term /= std::tgamma(n + 1.0) * std::tgamma(m - 2.0 * n + 1.0);
        term *= std::pow(2.0 * x, m - 2 * n);
        sum += (n % 2 ? -term : term);
    }
    return sum;
}

ZeroSet polynomial_zeros(Family family, int m, double alpha)
{
    check_degree(m);
    if (m < 1)
        throw std::invalid_argument("polynomial_zeros needs degree >= 1");

    std::function<PolyEval(double)> p;
    double lo = 0.0, hi = 0.0;
    bool chebyshev = false;
    switch (family) {
    case Family::laguerre:
        if (!(alpha > -1.0))
            throw std::invalid_argument("Laguerre parameter must exceed -1");
        p = [=](double x) { return laguerre_eval(m, alpha, x); };
        lo = 0.0;
        hi = std::max(alpha, 0.0) + 2.0 * m * std::sqrt(std::max(alpha, 1.0)) + 4.0 * m * m + 10.0;
        break;
    case Family::gegenbauer:
        if (!(alpha > 0.0))
            throw std::invalid_argument("Gegenbauer parameter must be positive");
        p = [=](double x) { return gegenbauer_eval(m, alpha, x); };
        lo = -1.0;
        hi = 1.0;
        chebyshev = true;
        break;
    case Family::hermite:
        p = [=](double x) { return hermite_eval(m, x); };
        hi = std::sqrt(2.0 * m + 1.0) + 1.0;
        lo = -hi;
        break;
    }

    ZeroSet out;
    out.degree = m;
    for (int n = 64 * (m + 1); n <= (1 << 24); n *= 2) {
        std::vector<double> grid(n + 1);
        for (int i = 0; i <= n; ++i) {
            if (chebyshev)
                grid[i] = -std::cos(std::numbers::pi * i / n);
            else
                grid[i] = lo + (hi - lo) * i / n;
        }
        // open interval: exclude the exact endpoints of the support
        if (chebyshev) {
            grid.front() = -1.0 + 1e-300;
            grid.back() = 1.0 - 1e-300;
        } else if (family == Family::laguerre) {
            grid.front() = std::numeric_limits<double>::min();
        }
        out.roots = scan_roots(p, grid);
        if (static_cast<int>(out.roots.size()) == m)
            break;
        if (family == Family::laguerre && static_cast<int>(out.roots.size()) < m)
            hi *= 1.5;
    }
    if (static_cast<int>(out.roots.size()) != m)
        throw numeric_failure("found " + std::to_string(out.roots.size()) + " of " + std::to_string(m) +
                              " zeros");
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

} // namespace entropic::orthopoly
