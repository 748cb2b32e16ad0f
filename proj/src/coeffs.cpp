#include "entropic/coeffs.hpp"

#include "entropic/closedforms.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace entropic::coeffs {

using series::Series;

namespace {

// Polynomial in alpha, ascending coefficients.
using Poly = std::vector<double>;

Poly poly_add(const Poly& p, const Poly& q)
{
    Poly r(std::max(p.size(), q.size()), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i)
        r[i] += p[i];
    for (std::size_t i = 0; i < q.size(); ++i)
        r[i] += q[i];
    return r;
}

Poly poly_mul(const Poly& p, const Poly& q)
{
    if (p.empty() || q.empty())
        return {};
    Poly r(p.size() + q.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            r[i + j] += p[i] * q[j];
    return r;
}

Poly poly_scale(const Poly& p, double s)
{
    Poly r = p;
    for (double& v : r)
        v *= s;
    return r;
}

double poly_coeff(const Poly& p, int i) { return i >= 0 && i < static_cast<int>(p.size()) ? p[i] : 0.0; }

double log_factorial(int n) { return std::lgamma(n + 1.0); }

void require(bool ok, const char* what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

// f_n(m; alpha) as polynomials in alpha
std::vector<Poly> f_sequence_poly(int m, int n_max)
{
    std::vector<Poly> f(n_max + 1);
    f[0] = {1.0};
    if (n_max >= 1)
        f[1] = {static_cast<double>(m)};
    for (int n = 1; n < n_max; ++n) {
        Poly t = poly_scale(f[n], m - n);
        Poly shifted(f[n - 1].size() + 1, 0.0);
        for (std::size_t i = 0; i < f[n - 1].size(); ++i)
            shifted[i + 1] = -f[n - 1][i];
        f[n + 1] = poly_scale(poly_add(t, shifted), 1.0 / (n + 1));
    }
    return f;
}

// s_n = m!/(m-n)! f_n, the bracket of the Laguerre power expansion
std::vector<Poly> lag_bracket_poly(int m)
{
    std::vector<Poly> f = f_sequence_poly(m, m);
    std::vector<Poly> s(m + 1);
    double falling = 1.0;
    for (int n = 0; n <= m; ++n) {
        if (n > 0)
            falling *= m - n + 1;
        s[n] = poly_scale(f[n], falling);
    }
    return s;
}

std::vector<Poly> lag_A_poly(double kappa, int m, int j_max)
{
    return series::unit_series_pow<Poly>(lag_bracket_poly(m), kappa, j_max, Poly{}, Poly{1.0}, poly_add, poly_mul,
                                         poly_scale);
}

double double_factorial_odd(int k) // (2k-1)!!
{
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r *= 2.0 * i - 1.0;
    return r;
}

int ceil_half(int j) { return (j + 1) / 2; }

} // namespace

// ---- Laguerre, fixed mu ----------------------------------------------------

std::vector<double> f_sequence(int m, double alpha, int n_max)
{
    require(m >= 0 && n_max >= 0, "f_sequence: need m >= 0, n_max >= 0");
    std::vector<double> f(n_max + 1);
    f[0] = 1.0;
    if (n_max >= 1)
        f[1] = m;
    for (int n = 1; n < n_max; ++n)
        f[n + 1] = ((m - n) * f[n] - alpha * f[n - 1]) / (n + 1);
    return f;
}

double f_printed(int n, int m, double alpha)
{
    const double mm = m;
    switch (n) {
    case 0: return 1.0;
    case 1: return mm;
    case 2: return 0.5 * (mm * (mm - 1) - alpha);
    case 3: return (mm * (mm - 1) * (mm - 2) + 2 * alpha - 3 * mm * alpha) / 6.0;
    case 4:
        return (mm * (mm - 1) * (mm - 2) * (mm - 3) - 2 * alpha * (3 * mm * mm - 7 * mm + 3) + 3 * alpha * alpha) /
               24.0;
    default: throw std::invalid_argument("f_printed: n must be <= 4");
    }
}

double f_kummer(int n, int m, double alpha)
{
    require(n >= 0, "f_kummer: n must be nonnegative");
    const double top = alpha + m;
    const double b = top + 1.0 - n;
    if (!(b <= 0.0 && b == std::floor(b))) {
        LogValue binom = closedforms::pochhammer(top - n + 1.0, n) / LogValue::from_log(log_factorial(n));
        closedforms::HyperTerm h{{-static_cast<double>(n)}, {b}, alpha};
        return (binom * closedforms::hyper_terminating(h)).to_double();
    }
    // the binomial vanishes against the lower-parameter pole; cancel term by term
    using Wide = boost::multiprecision::cpp_bin_float_50;
    Wide sum = 0;
    for (int k = 0; k <= n; ++k) {
        // (-1)^k alpha^k / (k! (n-k)!) * top (top-1) ... (top-n+k+1)
        Wide t = (k % 2) ? -1 : 1;
        for (int i = 1; i <= k; ++i)
            t *= Wide(alpha) / i;
        for (int j = 0; j < n - k; ++j)
            t *= (Wide(top) - j) / (j + 1);
        sum += t;
    }
    return sum.convert_to<double>();
}

std::array<double, 3> g_coeffs(int m, double t)
{
    require(t != 1.0, "g_coeffs: t = 1 is excluded");
    const double mm = m, u = 1.0 - t;
    const double g1 = mm * (mm + 1 - 2 * mm * t) / (2 * u * u);
    const double g2 = mm * (mm - 1) *
                      (3 * mm * mm * (1 - 2 * t) * (1 - 2 * t) - mm * (12 * t * t + 8 * t - 5) + 16 * t + 2) /
                      (24 * u * u * u * u);
    return {1.0, g1, g2};
}

std::vector<double> lag_A_coeffs(double kappa, int m, double alpha, int j_max)
{
    require(kappa > 0.0, "lag_A_coeffs: kappa must be positive");
    std::vector<double> f = f_sequence(m, alpha, m);
    std::vector<double> s(m + 1);
    double falling = 1.0;
    for (int n = 0; n <= m; ++n) {
        if (n > 0)
            falling *= m - n + 1;
        s[n] = falling * f[n];
    }
    return series::series_pow(Series(s, j_max), kappa).coeffs();
}

double lag_A_printed(int j, double kappa, int m, double alpha)
{
    const double f1 = f_printed(1, m, alpha), f2 = f_printed(2, m, alpha);
    switch (j) {
    case 0: return 1.0;
    case 1: return kappa * m * f1;
    case 2: return 0.5 * kappa * m * (2 * m * f2 - 2 * f2 - m * f1 * f1 + kappa * m * f1 * f1);
    default: throw std::invalid_argument("lag_A_printed: j must be <= 2");
    }
}

double lag_B(int j, int n, double mu, double lambda, double kappa, int m)
{
    require(lambda > 0.0 && mu > 0.0, "lag_B: need lambda > 0, mu > 0");
    double r = 1.0;
    for (int i = 0; i < n; ++i)
        r *= (mu + i) * (j - kappa * m + i) / ((i + 1) * lambda);
    return r;
}

CoeffLadder lag_C_ladder(double mu, double lambda, double kappa, int m, double alpha, int k_max)
{
    const std::vector<double> A = lag_A_coeffs(kappa, m, alpha, k_max);
    CoeffLadder out;
    out.family = LadderFamily::lag_renyi;
    out.alpha_dependent = true;
    out.params.m = m;
    out.params.kappa = kappa;
    out.params.mu = mu;
    out.params.lambda = lambda;
    for (int k = 0; k <= k_max; ++k) {
        double c = 0.0;
        for (int j = 0; j <= k; ++j)
            c += A[j] * lag_B(j, k - j, mu, lambda, kappa, m);
        out.values.push_back(c);
    }
    return out;
}

double lag_D(int k, double mu, double lambda, double kappa, int m)
{
    const double mm = m, l = lambda, k_ = kappa;
    switch (k) {
    case 0: return 1.0;
    case 1: return k_ * mm * (-2 * mu + mm * l + l) / (2 * l);
    case 2: {
        const double p = -12 * mu * l * k_ * mm * mm + 24 * mu * l - 12 * mu * l * k_ * mm - 4 * mm * mm * l * l -
                         6 * mm * l * l + 3 * mm * mm * mm * l * l * k_ - 12 * mu * mu + 12 * mu * mu * k_ * mm -
                         12 * mu + 12 * mu * k_ * mm + 6 * l * l * k_ * mm * mm - 2 * l * l + 3 * l * l * k_ * mm;
        return k_ * mm * p / (24 * l * l);
    }
    default: throw std::invalid_argument("lag_D: only k <= 2 is available in closed form");
    }
}

double lag_D_kappa_derivative(int k, double mu, double lambda, double kappa, int m)
{
    const double mm = m, l = lambda, k_ = kappa;
    switch (k) {
    case 0: return 0.0;
    case 1: return mm * (-2 * mu + mm * l + l) / (2 * l);
    case 2: {
        const double p = -12 * mu * l * k_ * mm * mm + 24 * mu * l - 12 * mu * l * k_ * mm - 4 * mm * mm * l * l -
                         6 * mm * l * l + 3 * mm * mm * mm * l * l * k_ - 12 * mu * mu + 12 * mu * mu * k_ * mm -
                         12 * mu + 12 * mu * k_ * mm + 6 * l * l * k_ * mm * mm - 2 * l * l + 3 * l * l * k_ * mm;
        const double dp = -12 * mu * l * mm * mm - 12 * mu * l * mm + 3 * mm * mm * mm * l * l + 12 * mu * mu * mm +
                          12 * mu * mm + 6 * l * l * mm * mm + 3 * l * l * mm;
        return mm * (p + k_ * dp) / (24 * l * l);
    }
    default: throw std::invalid_argument("lag_D_kappa_derivative: only k <= 2");
    }
}

double lag_D2_unit_rate(double mu, int m)
{
    const double mm = m;
    return mm * (-1 + 6 * mu - 6 * mu * mu + 12 * mu * mu * mm - 12 * mm * mm * mu + 4 * mm * mm + 3 * mm * mm * mm) /
           6.0;
}

std::vector<double> lag_grouped_terms(double mu, double lambda, double kappa, int m, double alpha, int K)
{
    require(K >= 0, "lag_grouped_terms: K must be nonnegative");
    const std::vector<double> A = lag_A_coeffs(kappa, m, alpha, 2 * K);
    std::vector<double> terms(K + 1, 0.0);
    for (int j = 0; j <= 2 * K; ++j) {
        const double aj = A[j] / std::pow(alpha, j);
        for (int k = 0; ceil_half(j) + k <= K; ++k)
            terms[ceil_half(j) + k] += aj * lag_B(j, k, mu, lambda, kappa, m) / std::pow(alpha, k);
    }
    return terms;
}

// ---- Gegenbauer ------------------------------------------------------------

std::vector<double> geg_f_sequence(int m, double alpha)
{
    require(m >= 0 && alpha > 0.0, "geg_f_sequence: need m >= 0, alpha > 0");
    std::vector<double> f(m / 2 + 1);
    for (int n = 0; n <= m / 2; ++n) {
        double log_r = log_factorial(m) + n * std::log(alpha) - log_factorial(n) - log_factorial(m - 2 * n) -
                       n * std::log(4.0);
        for (int i = m - n; i < m; ++i)
            log_r -= std::log(alpha + i);
        f[n] = (n % 2 ? -1.0 : 1.0) * std::exp(log_r);
    }
    return f;
}

std::vector<double> geg_A_coeffs(double kappa, int m, double alpha, int j_max)
{
    require(kappa > 0.0, "geg_A_coeffs: kappa must be positive");
    return series::series_pow(Series(geg_f_sequence(m, alpha), j_max), kappa).coeffs();
}

double geg_A_printed(int j, double kappa, int m, double alpha)
{
    const std::vector<double> fm = geg_f_sequence(m, alpha);
    const double f1 = fm.size() > 1 ? fm[1] : 0.0;
    const double f2 = fm.size() > 2 ? fm[2] : 0.0;
    switch (j) {
    case 0: return 1.0;
    case 1: return kappa * f1;
    case 2: return 0.5 * kappa * (2 * f2 - f1 * f1 + kappa * f1 * f1);
    default: throw std::invalid_argument("geg_A_printed: j must be <= 2");
    }
}

Series saddle_geg(double c, double d, int order)
{
    require(c > 0.0 && d > 0.0, "saddle_geg: c, d must be positive");
    const double xm = (d - c) / (d + c);
    const int n = std::max(order + 1, 3);
    Series psi = Series::zero(n);
    for (int k = 2; k <= n; ++k)
        psi[k] = c / (k * std::pow(1 - xm, k)) + ((k % 2) ? -d : d) / (k * std::pow(1 + xm, k));
    return series::saddle_series(psi, 1).truncated(order);
}

std::array<double, 3> saddle_geg_printed(double c, double d)
{
    const double s = c + d;
    const double a1 = 2 * std::sqrt(c * d / (s * s * s));
    return {a1, 2 * (c - d) / (3 * s * s), (c * c - 11 * c * d + d * d) / (9 * a1 * s * s * s * s)};
}

Series geg_laplace_c(int j, double a, double b, double c, double d, double kappa, int m, int order)
{
    require(c > 0.0 && c < d, "geg_laplace_c: requires 0 < c < d");
    const double xm = (d - c) / (d + c);
    const Series s = saddle_geg(c, d, order + 1);
    const int n = order;
    Series one = Series::constant(1.0, n);
    Series st = s.truncated(n);
    Series lo = one - (1.0 / (1 - xm)) * st; // (1-x)/(1-x_m)
    Series hi = one + (1.0 / (1 + xm)) * st; // (1+x)/(1+x_m)
    Series xx = one + (1.0 / xm) * st;       // x/x_m
    Series amp = series::series_pow(lo, a) * series::series_pow(hi, b) * series::series_pow(xx, kappa * m - 2 * j) *
                 series::derivative(s);
    const double scale = std::pow(1 - xm, a) * std::pow(1 + xm, b) * std::pow(xm, kappa * m - 2 * j);
    return scale * amp;
}

std::array<double, 2> geg_laplace_c_printed(int j, double a, double b, double c, double d, double kappa, int m)
{
    const double s = c + d;
    const double a1 = saddle_geg_printed(c, d)[0];
    const double e = kappa * m - 2 * j;
    const double c0 = a1 * std::pow(2 * c / s, a) * std::pow(2 * d / s, b) * std::pow((d - c) / s, e);
    const double c1 =
        c0 * a1 * s * (6 * c * d * e + (d - c) * (3 * b * c - 3 * a * d + 2 * c - 2 * d)) / (6 * c * d * (d - c));
    return {c0, c1};
}

double geg_D0(double a, double b, double c, double d, double kappa, int m)
{
    require(c > 0.0 && c < d, "geg_D0: requires 0 < c < d");
    return geg_laplace_c_printed(0, a, b, c, d, kappa, m)[0];
}

std::vector<double> geg_grouped_terms(double a, double b, double c, double d, double kappa, int m, double alpha,
                                      int K)
{
    require(K >= 0, "geg_grouped_terms: K must be nonnegative");
    const std::vector<double> A = geg_A_coeffs(kappa, m, alpha, K);
    std::vector<double> terms(K + 1, 0.0);
    for (int j = 0; j <= K; ++j) {
        if (A[j] == 0.0)
            continue;
        const Series amp = geg_laplace_c(j, a, b, c, d, kappa, m, 2 * (K - j));
        const std::vector<double> lt = series::laplace_terms(amp, alpha, K - j);
        for (int k = 0; j + k <= K; ++k)
            terms[j + k] += A[j] / std::pow(alpha, j) * lt[k];
    }
    return terms;
}

double geg_sym_D1(double a, double b, int m)
{
    const double mm = m;
    return (2 * (2 * mm + 1) * ((a - b) * (a - b) - (a + b)) + 2 * mm * mm - 14 * mm - 3) / 8.0;
}

HermiteGeg geg_hermite_coeffs(int m, double x)
{
    const double mm = m, x2 = x * x;
    HermiteGeg h;
    h.p = {1.0, mm * (mm - 2 * x2 - 2) / 8.0};
    h.q = {x * (2 * x2 + 2 * mm - 1) / 4.0,
           x *
               (3 + 24 * mm - 42 * mm * mm + 12 * mm * mm * mm + (400 * mm - 48 * mm * mm - 640) * x2 +
                (1280 - 384 * mm) * x2 * x2) /
               192.0};
    return h;
}

HermiteLag lag_hermite_coeffs(int m, double alpha, double x)
{
    const double mm = m, a = alpha;
    HermiteLag h;
    h.c = {1.0, mm * (a * (x - 1) - 1)};
    h.d = {1.0, (3 + 7 * a - 3 * mm - 9 * a * x + 3 * a * a * (x - 1) * (x - 1) - 4 * a * mm + 6 * a * x * mm) / 3.0};
    return h;
}

// ---- Laguerre, mu = alpha + sigma ------------------------------------------

Series saddle_ext(double lambda, int order)
{
    require(lambda > 0.0, "saddle_ext: lambda must be positive");
    // phi(x0 + s) - phi(x0) = lambda s - log(1 + lambda s)
    const int n = std::max(order + 1, 3);
    Series psi = Series::zero(n);
    for (int k = 2; k <= n; ++k)
        psi[k] = ((k % 2) ? -1.0 : 1.0) * std::pow(lambda, k) / k;
    return series::saddle_series(psi, 1).truncated(order);
}

std::array<double, 5> saddle_ext_printed(double lambda)
{
    return {1.0 / lambda, 1.0 / (3 * lambda), 1.0 / (36 * lambda), -1.0 / (270 * lambda), 1.0 / (4320 * lambda)};
}

Series ext_amplitude(int j, double sigma, double lambda, double kappa, int m, int order)
{
    require(lambda > 0.0, "ext_amplitude: lambda must be positive");
    const Series s = saddle_ext(lambda, order + 1);
    const int n = order;
    Series one = Series::constant(1.0, n);
    Series st = s.truncated(n);
    Series amp = series::series_pow(one + lambda * st, sigma - 1.0) * (lambda * series::derivative(s));
    if (m > 0) {
        require(lambda != 1.0, "ext_amplitude: lambda = 1 has no Laplace amplitude for m > 0");
        const double u0 = 1.0 - 1.0 / lambda;
        amp = amp * series::series_pow(one - (1.0 / u0) * st, kappa * m - j);
        amp = std::pow(u0, -j) * amp;
    } else if (j > 0) {
        return Series::zero(n);
    }
    return amp;
}

double ext_lag_D(int k, double sigma, double lambda, double kappa, int m)
{
    require(lambda != 1.0, "ext_lag_D: lambda = 1 is excluded");
    const double s = sigma, l = lambda, K = kappa, mm = m;
    switch (k) {
    case 0: return 1.0;
    case 1: {
        const double num = 6 * K * K * mm * mm + 6 * K * l * l * mm * mm + 6 * K * l * l * mm - 12 * K * l * mm * mm -
                           12 * K * l * mm * s + 12 * K * mm * s - 6 * K * mm + 6 * l * l * s * s - 6 * l * l * s +
                           l * l - 12 * l * s * s + 12 * l * s - 2 * l + 6 * s * s - 6 * s + 1;
        return num / (12 * (l - 1) * (l - 1));
    }
    default: throw std::invalid_argument("ext_lag_D: only k <= 1 is available in closed form");
    }
}

double ext_lag_D_kappa_derivative(int k, double sigma, double lambda, double kappa, int m)
{
    require(lambda != 1.0, "ext_lag_D_kappa_derivative: lambda = 1 is excluded");
    const double s = sigma, l = lambda, K = kappa, mm = m;
    switch (k) {
    case 0: return 0.0;
    case 1: {
        const double num = 12 * K * mm * mm + 6 * l * l * mm * mm + 6 * l * l * mm - 12 * l * mm * mm -
                           12 * l * mm * s + 12 * mm * s - 6 * mm;
        return num / (12 * (l - 1) * (l - 1));
    }
    default: throw std::invalid_argument("ext_lag_D_kappa_derivative: only k <= 1");
    }
}

double ext_lag_D1_printed(double sigma, double lambda, double kappa, int m)
{
    const double s = sigma, l = lambda, K = kappa, mm = m;
    const double num = 1 - 12 * K * mm * s * l + 6 * s * s * l * l - 12 * s * s * l - 6 * s * l * l + 12 * s * l +
                       6 * K * K * mm * mm + 12 * K * mm * s - 12 * K * mm * mm * l - 12 * K * mm * l +
                       6 * K * mm * l * l + 6 * K * mm * mm * l * l + l * l + 6 * s * s - 2 * l - 6 * s +
                       6 * K * mm * mm;
    return num / (12 * (l - 1) * (l - 1));
}

double ext_lag_D1_kappa2_sigma1(double lambda, int m)
{
    const double l = lambda, mm = m;
    return (24 * mm * mm + l * l - 2 * l + 1 + 12 * mm * mm * l * l - 24 * mm * mm * l + 12 * mm * l * l -
            24 * mm * l + 12 * mm) /
           (12 * (l - 1) * (l - 1));
}

std::vector<double> ext_grouped_terms(double sigma, double lambda, double kappa, int m, double alpha, int K)
{
    require(K >= 0, "ext_grouped_terms: K must be nonnegative");
    const int jmax = m > 0 ? 2 * K : 0;
    const std::vector<double> A = lag_A_coeffs(kappa, m, alpha, std::max(jmax, 1));
    std::vector<double> terms(K + 1, 0.0);
    for (int j = 0; j <= jmax; ++j) {
        const int kmax = K - ceil_half(j);
        const Series amp = ext_amplitude(j, sigma, lambda, kappa, m, 2 * kmax);
        const std::vector<double> lt = series::laplace_terms(amp, alpha, kmax);
        for (int k = 0; k <= kmax; ++k)
            terms[ceil_half(j) + k] += A[j] / std::pow(alpha, j) * lt[k];
    }
    return terms;
}

// ---- alpha-free coefficients from the engine -------------------------------

std::vector<double> engine_lag_D(int k_max, double mu, double lambda, double kappa, int m)
{
    require(k_max >= 0, "engine_lag_D: k_max must be nonnegative");
    const std::vector<Poly> A = lag_A_poly(kappa, m, 2 * k_max);
    std::vector<double> D(k_max + 1, 0.0);
    // A_j(alpha) alpha^{-j} B_{j,k} alpha^{-k}: alpha^p contributes to D_{j+k-p}
    for (int j = 0; j <= 2 * k_max; ++j)
        for (int p = 0; p < static_cast<int>(A[j].size()); ++p)
            for (int k = 0; j + k - p <= k_max; ++k)
                if (j + k - p >= 0)
                    D[j + k - p] += poly_coeff(A[j], p) * lag_B(j, k, mu, lambda, kappa, m);
    return D;
}

std::vector<double> engine_ext_D(int k_max, double sigma, double lambda, double kappa, int m)
{
    require(k_max >= 0, "engine_ext_D: k_max must be nonnegative");
    const int jmax = m > 0 ? 2 * k_max : 0;
    const std::vector<Poly> A = lag_A_poly(kappa, m, jmax);
    std::vector<double> D(k_max + 1, 0.0);
    for (int j = 0; j <= jmax; ++j) {
        const Series amp = ext_amplitude(j, sigma, lambda, kappa, m, 2 * k_max);
        for (int k = 0; k <= k_max; ++k) {
            const double w = amp[2 * k] * double_factorial_odd(k);
            for (int p = 0; p < static_cast<int>(A[j].size()); ++p) {
                const int n = j + k - p;
                if (n >= 0 && n <= k_max)
                    D[n] += poly_coeff(A[j], p) * w;
            }
        }
    }
    return D;
}

} // namespace entropic::coeffs
