#include "entropic/closedforms.hpp"
#include "entropic/errors.hpp"
#include "entropic/oracle.hpp"
#include "entropic/orthopoly.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace entropic;
using oracle::integrate_functional;

namespace {

double log_rel(LogValue a, double log_ref) { return relative_difference(a, LogValue::from_log(log_ref)); }

// Gauss-Kronrod over [lo, hi] split at the given interior points
template <class F>
double gk(F f, std::vector<double> pts)
{
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        s += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, pts[i], pts[i + 1], 15, 1e-14);
    return s;
}

} // namespace

TEST_CASE("degree-zero and orthogonality values")
{
    CHECK(log_rel(integrate_functional(lag_renyi(0, 30.0, 2.7, 1.3, 1.9)).value,
                  std::lgamma(2.7) - 2.7 * std::log(1.3)) < 1e-10);
    for (int m = 0; m <= 4; ++m) {
        const double alpha = 40.0;
        CHECK(log_rel(integrate_functional(ext_lag_renyi(m, alpha, 1.0, 1.0, 2.0)).value,
                      std::lgamma(m + alpha + 1) - std::lgamma(m + 1.0)) < 1e-10);
        const double geg = 0.5 * std::log(M_PI) + closedforms::pochhammer(2 * alpha, m).log_abs - std::lgamma(m + 1.0) +
                           std::lgamma(alpha - 0.5) - std::lgamma(alpha);
        CHECK(log_rel(integrate_functional(geg_renyi(m, alpha, -0.5, -1.5, 1.0, 1.0, 2.0)).value, geg) < 1e-10);
    }
}

TEST_CASE("very large alpha stays in log space")
{
    const auto q = integrate_functional(ext_lag_renyi(3, 1e4, 1.0, 1.0, 2.0));
    CHECK(q.value.log_abs > 700.0);
    CHECK(log_rel(q.value, std::lgamma(1e4 + 4) - std::lgamma(4.0)) < 1e-10);
}

TEST_CASE("Hermite power integrals")
{
    for (int m = 0; m <= 6; ++m)
        for (double alpha : {1.0, 50.0}) {
            const auto q = oracle::hermite_power_integral(m, 2.0, alpha);
            const double ref = 0.5 * std::log(2.0 / alpha) + m * std::log(2.0) + std::lgamma(m + 1.0) +
                               0.5 * std::log(M_PI);
            CHECK(log_rel(q.value, ref) < 1e-11);
        }
    for (double kappa : {0.5, 3.0})
        CHECK(log_rel(oracle::hermite_power_integral(0, kappa, 8.0).value, 0.5 * std::log(2 * M_PI / 8.0)) < 1e-12);
}

TEST_CASE("Hermite moment normalisations")
{
    using orthopoly::hermite_value;
    for (int m = 1; m <= 6; ++m) {
        const double v1 = gk([m](double t) { return std::exp(-t * t) * t * hermite_value(m, t) * hermite_value(m - 1, t); },
                             {-14.0, 0.0, 14.0});
        const double v2 =
            gk([m](double t) { return std::exp(-t * t) * t * t * hermite_value(m, t) * hermite_value(m, t); },
               {-14.0, 0.0, 14.0});
        const double sp = std::sqrt(M_PI);
        // the numerically supported first-moment value is 2^{m-1} m! sqrt(pi)
        CHECK(v1 == doctest::Approx(std::pow(2.0, m - 1) * std::tgamma(m + 1.0) * sp).epsilon(1e-11));
        CHECK(v1 != doctest::Approx(std::pow(2.0, m) * std::tgamma(m + 2.0) * sp).epsilon(1e-3));
        CHECK(v2 == doctest::Approx(std::pow(2.0, m - 1) * (2 * m + 1) * std::tgamma(m + 1.0) * sp).epsilon(1e-11));
    }
}

TEST_CASE("Shannon integrals against an independent quadrature")
{
    SUBCASE("fixed mu Laguerre")
    {
        const Functional F = lag_shannon(2, 6.0, 1.7, 1.2);
        const auto z = orthopoly::polynomial_zeros(orthopoly::Family::laguerre, 2, 6.0).roots;
        const double ref = gk(
            [&](double x) {
                return std::pow(x, 0.7) * std::exp(-1.2 * x) * oracle::shannon_integrand_value(F, x);
            },
            {0.0, z[0], z[1], 60.0, 200.0});
        const auto q = integrate_functional(F, 1e-12);
        CHECK(q.value.to_double() == doctest::Approx(ref).epsilon(1e-9));
    }
    SUBCASE("symmetric Gegenbauer")
    {
        const Functional F = geg_shannon(3, 5.0, -0.5, -0.5, 1.0, 1.0);
        const auto z = orthopoly::polynomial_zeros(orthopoly::Family::gegenbauer, 3, 5.0).roots;
        const double ref = gk(
            [&](double x) { return std::pow(1 - x * x, 4.5) * oracle::shannon_integrand_value(F, x); },
            {-1.0, z[0], z[1], z[2], 1.0});
        CHECK(integrate_functional(F, 1e-12).value.to_double() == doctest::Approx(ref).epsilon(1e-9));
    }
}

TEST_CASE("result structure")
{
    const Functional fs[] = {lag_renyi(4, 25.0, 1.5, 0.8, 1.3), geg_renyi(5, 12.0, 0.2, -0.3, 1.0, 2.0, 0.7),
                             ext_lag_renyi(3, 60.0, 0.5, 1.7, 3.0), lag_shannon(3, 20.0, 2.0, 1.0),
                             ext_lag_shannon(2, 30.0, 1.0, 0.6)};
    for (const Functional& F : fs) {
        const double tol = 1e-10;
        const auto q = integrate_functional(F, tol);
        CAPTURE(kind_name(F.kind));
        if (!F.is_shannon())
            CHECK(q.value.sign == 1);
        CHECK(q.abs_err_log <= q.value.log_abs + std::log(tol));
        REQUIRE(!q.segments.empty());
        for (std::size_t i = 1; i < q.segments.size(); ++i) {
            CHECK(q.segments[i].first == doctest::Approx(q.segments[i - 1].second).epsilon(1e-15));
            CHECK(q.segments[i].first > q.segments[i - 1].first);
        }
        // every interior zero is a segment boundary
        const auto fam = F.is_gegenbauer() ? orthopoly::Family::gegenbauer : orthopoly::Family::laguerre;
        for (double z : orthopoly::polynomial_zeros(fam, F.m, F.alpha).roots) {
            bool found = false;
            for (const auto& s : q.segments)
                found = found || std::fabs(s.first - z) <= 1e-14 * std::max(1.0, std::fabs(z));
            CHECK(found);
        }
    }
}

TEST_CASE("refinement is consistent with the error estimate")
{
    const Functional fs[] = {lag_renyi(3, 40.0, 2.0, 1.0, 2.5), geg_renyi(2, 30.0, 0.0, 0.5, 1.0, 3.0, 1.5),
                             ext_lag_renyi(2, 80.0, 1.0, 2.0, 0.5)};
    for (const Functional& F : fs) {
        const auto q1 = integrate_functional(F, 1e-8);
        const auto q2 = integrate_functional(F, 5e-9);
        const double change = std::fabs(std::expm1(q2.value.log_abs - q1.value.log_abs));
        CHECK(change <= std::exp(q1.abs_err_log - q1.value.log_abs));
    }
}

TEST_CASE("serial and parallel oracle agree exactly")
{
    const Functional F = geg_shannon(4, 50.0, 0.0, 0.0, 1.0, 2.0);
    const auto a = integrate_functional(F, 1e-10, quadrature::Execution::serial);
    const auto b = integrate_functional(F, 1e-10, quadrature::Execution::parallel);
    CHECK(a.value.log_abs == b.value.log_abs);
    CHECK(a.value.sign == b.value.sign);
}

TEST_CASE("Shannon integrand values")
{
    const Functional F = lag_shannon(1, 2.0, 2.0, 1.0);
    CHECK(oracle::shannon_integrand_value(F, 1.0) == doctest::Approx(4 * std::log(4.0)));
    CHECK(oracle::shannon_integrand_value(F, 3.0) == 0.0);
    CHECK(oracle::shannon_integrand_value(lag_shannon(0, 2.0, 2.0, 1.0), 0.7) == 0.0);
}

TEST_CASE("input validation")
{
    CHECK_THROWS_AS(integrate_functional(lag_renyi(1, 10.0, 1.0, 1.0, 2.0), 1e-14), std::invalid_argument);
    CHECK_THROWS_AS(integrate_functional(lag_renyi(1, 10.0, 1.0, 1.0, 2.0), 1e-5), std::invalid_argument);
    CHECK_THROWS_AS(integrate_functional(lag_renyi(1, 10.0, -1.0, 1.0, 2.0)), std::invalid_argument);
    CHECK_THROWS_AS(integrate_functional(geg_renyi(1, 10.0, -20.0, 0.0, 1.0, 1.0, 2.0)), std::invalid_argument);
    CHECK_THROWS_AS(oracle::hermite_power_integral(2, 0.0, 1.0), std::invalid_argument);
}
