#include "entropic/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entropic::series {

Series::Series(std::vector<double> coeffs, int order)
{
    if (order < 0)
        throw std::invalid_argument("series order must be nonnegative");
    coeffs.resize(order + 1, 0.0);
    coeffs_ = std::move(coeffs);
}

Series Series::zero(int order) { return Series({}, order); }

Series Series::constant(double c, int order) { return Series({c}, order); }

Series Series::variable(int order) { return Series({0.0, 1.0}, order); }

Series Series::truncated(int order) const
{
    if (order > this->order())
        throw std::invalid_argument("cannot extend a truncated series");
    return Series(coeffs_, order);
}

double Series::evaluate(double y) const
{
    double acc = 0.0;
    for (int k = order(); k >= 0; --k)
        acc = acc * y + coeffs_[k];
    return acc;
}

Series series_arith(const Series& a, const Series& b, Op op)
{
    const int n = std::min(a.order(), b.order());
    Series r = Series::zero(n);
    switch (op) {
    case Op::add:
        for (int k = 0; k <= n; ++k)
            r[k] = a[k] + b[k];
        break;
    case Op::sub:
        for (int k = 0; k <= n; ++k)
            r[k] = a[k] - b[k];
        break;
    case Op::mul:
        for (int k = 0; k <= n; ++k) {
            double s = 0.0;
            for (int i = 0; i <= k; ++i)
                s += a[i] * b[k - i];
            r[k] = s;
        }
        break;
    case Op::div:
        if (b[0] == 0.0)
            throw std::invalid_argument("series division by a series with zero constant term");
        for (int k = 0; k <= n; ++k) {
            double s = a[k];
            for (int i = 1; i <= k; ++i)
                s -= b[i] * r[k - i];
            r[k] = s / b[0];
        }
        break;
    }
    return r;
}

Series operator+(const Series& a, const Series& b) { return series_arith(a, b, Op::add); }
Series operator-(const Series& a, const Series& b) { return series_arith(a, b, Op::sub); }
Series operator*(const Series& a, const Series& b) { return series_arith(a, b, Op::mul); }
Series operator/(const Series& a, const Series& b) { return series_arith(a, b, Op::div); }

Series operator*(double s, const Series& a)
{
    Series r = a;
    for (int k = 0; k <= r.order(); ++k)
        r[k] *= s;
    return r;
}

Series series_compose(const Series& f, const Series& g)
{
    if (g[0] != 0.0)
        throw std::invalid_argument("composition needs an inner series with zero constant term");
    const int n = std::min(f.order(), g.order());
    Series acc = Series::constant(f[n], n);
    const Series gn = g.truncated(n);
    for (int k = n - 1; k >= 0; --k) {
        acc = acc * gn;
        acc[0] += f[k];
    }
    return acc;
}

Series derivative(const Series& a)
{
    if (a.order() == 0)
        return Series::zero(0);
    Series r = Series::zero(a.order() - 1);
    for (int k = 1; k <= a.order(); ++k)
        r[k - 1] = k * a[k];
    return r;
}

Series series_exp(const Series& a)
{
    const int n = a.order();
    Series b = Series::zero(n);
    b[0] = std::exp(a[0]);
    for (int j = 1; j <= n; ++j) {
        double s = 0.0;
        for (int k = 1; k <= j; ++k)
            s += k * a[k] * b[j - k];
        b[j] = s / j;
    }
    return b;
}

Series series_log(const Series& a)
{
    if (!(a[0] > 0.0))
        throw std::invalid_argument("series log needs a positive constant term");
    const int n = a.order();
    Series b = Series::zero(n);
    b[0] = std::log(a[0]);
    for (int j = 1; j <= n; ++j) {
        double s = j * a[j];
        for (int k = 1; k < j; ++k)
            s -= k * b[k] * a[j - k];
        b[j] = s / (j * a[0]);
    }
    return b;
}

Series series_pow(const Series& a, double rho)
{
    if (!(a[0] > 0.0))
        throw std::invalid_argument("series power needs a positive constant term");
    const int n = a.order();
    Series b = Series::zero(n);
    b[0] = std::pow(a[0], rho);
    for (int j = 1; j <= n; ++j) {
        double s = 0.0;
        for (int k = 1; k <= j; ++k)
            s += (rho * k - (j - k)) * a[k] * b[j - k];
        b[j] = s / (j * a[0]);
    }
    return b;
}

Series series_revert(const Series& f)
{
    if (f[0] != 0.0)
        throw std::invalid_argument("reversion needs zero constant term");
    if (f.order() < 1 || f[1] == 0.0)
        throw std::invalid_argument("reversion needs a nonzero linear coefficient");
    const int n = f.order();
    const Series fp = derivative(f);
    Series g = Series::zero(n);
    g[1] = 1.0 / f[1];
    // Newton: g <- g - (f(g) - y) / f'(g); each step doubles the correct order
    for (int correct = 1; correct < n; correct *= 2) {
        Series resid = series_compose(f, g);
        resid[1] -= 1.0;
        Series fpg = series_compose(fp, g);
        // f'(g) has order n-1; pad by one so the quotient keeps order n
        std::vector<double> pad = fpg.coeffs();
        Series fpg_n(pad, n);
        fpg_n[n] = 0.0;
        g = g - resid / fpg_n;
        g[0] = 0.0;
    }
    // final clean-up step at full order
    Series resid = series_compose(f, g);
    resid[1] -= 1.0;
    Series fpg(series_compose(fp, g).coeffs(), n);
    g = g - resid / fpg;
    g[0] = 0.0;
    return g;
}

Series saddle_series(const Series& psi, int side)
{
    if (psi.order() < 3)
        throw std::invalid_argument("saddle_series needs input order >= 3");
    if (psi[0] != 0.0 || psi[1] != 0.0)
        throw std::invalid_argument("saddle_series needs zero constant and linear terms");
    if (!(psi[2] > 0.0))
        throw std::invalid_argument("saddle_series needs a positive quadratic term");
    if (side != 1 && side != -1)
        throw std::invalid_argument("side must be +1 or -1");
    const int n = psi.order() - 1;
    // psi = s^2 q(s); y = side * s * sqrt(2 q(s))
    std::vector<double> q(psi.order() - 1);
    for (int k = 2; k <= psi.order(); ++k)
        q[k - 2] = 2.0 * psi[k];
    Series root = series_pow(Series(q, n - 1), 0.5);
    Series y = Series::zero(n);
    for (int k = 0; k <= n - 1; ++k)
        y[k + 1] = side * root[k];
    return series_revert(y);
}

std::vector<double> laplace_terms(const Series& amplitude, double alpha, int K)
{
    if (K < 0 || amplitude.order() < 2 * K)
        throw std::invalid_argument("amplitude order too small for the requested Laplace order");
    std::vector<double> out(K + 1);
    double dfact = 1.0; // (2k-1)!!
    double apow = 1.0;
    for (int k = 0; k <= K; ++k) {
        if (k > 0) {
            dfact *= 2.0 * k - 1.0;
            apow *= alpha;
        }
        out[k] = amplitude[2 * k] * dfact / apow;
    }
    return out;
}

double laplace_sum(const Series& amplitude, double alpha, int K)
{
    double s = 0.0;
    for (double t : laplace_terms(amplitude, alpha, K))
        s += t;
    return s;
}

} // namespace entropic::series
