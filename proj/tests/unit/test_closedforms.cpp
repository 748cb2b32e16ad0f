#include "entropic/closedforms.hpp"
#include "entropic/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace entropic;
using namespace entropic::closedforms;

namespace {

// int_0^inf x^{mu-1} e^{-lambda x} L_m(x)^2 dx by expanding the square into
// monomials and using Gamma moments, in long double.
long double laguerre_square_by_moments(int m, double alpha, double mu, double lambda)
{
    std::vector<long double> c(m + 1);
    for (int k = 0; k <= m; ++k) {
        long double binom = 1.0L;
        for (int i = 1; i <= m - k; ++i)
            binom *= (alpha + k + i) / static_cast<long double>(i);
        c[k] = binom * ((k % 2) ? -1.0L : 1.0L) / std::tgamma(k + 1.0L);
    }
    long double s = 0.0L;
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j) {
            const long double e = mu + i + j;
            s += c[i] * c[j] * std::exp(std::lgamma(e) - e * std::log(static_cast<long double>(lambda)));
        }
    return s;
}

double rel(LogValue a, double b) { return relative_difference(a, LogValue::from_double(b)); }

} // namespace

TEST_CASE("log-gamma and gamma")
{
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-15));
    CHECK_THROWS_AS(log_gamma(0.0), std::invalid_argument);
    CHECK_THROWS_AS(log_gamma(-2.5), std::invalid_argument);
    CHECK(gamma_value(-0.5).to_double() == doctest::Approx(-2 * std::sqrt(M_PI)).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_value(-3.0), std::invalid_argument);
}

TEST_CASE("pochhammer")
{
    CHECK(pochhammer(3.7, 0).to_double() == 1.0);
    CHECK(pochhammer(-3.0, 5).is_zero());
    CHECK(pochhammer(20.0, 2).to_double() == doctest::Approx(420.0).epsilon(1e-15));
    CHECK(pochhammer(-2.5, 3).to_double() == doctest::Approx(-2.5 * -1.5 * -0.5).epsilon(1e-15));
    for (double a : {-7.5, -0.3, 0.5, 12.0, 5000.0})
        for (int n = 0; n < 1500; n += 37) {
            const LogValue lhs = pochhammer(a, n + 1);
            const LogValue rhs = pochhammer(a, n) * LogValue::from_double(a + n);
            CHECK(lhs.sign == rhs.sign);
            CHECK(std::fabs(lhs.log_abs - rhs.log_abs) <= 1e-14 * std::max(1.0, std::fabs(lhs.log_abs)));
        }
    CHECK_THROWS_AS(pochhammer(1.0, -1), std::invalid_argument);
}

TEST_CASE("terminating hypergeometric sums")
{
    CHECK(hyper_terminating({{0.0}, {2.5}, 3.0}).to_double() == 1.0);
    for (double alpha : {0.5, 4.0, 30.0})
        for (double z : {-2.0, 0.3, 5.0})
            CHECK(hyper_terminating({{-1.0, -1.0}, {alpha + 1}, z}).to_double() ==
                  doctest::Approx(1 + z / (alpha + 1)).epsilon(1e-14));
    CHECK_THROWS_AS(hyper_terminating({{0.5, 1.5}, {2.0}, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(hyper_terminating({{-4.0}, {-2.0}, 0.5}), std::invalid_argument);
    CHECK(terminating_index({{-3.0, 2.0}, {1.5}, 1.0}) == 3);
}

TEST_CASE("hypergeometric sums are invariant under parameter permutations")
{
    const LogValue a = hyper_terminating({{-5.0, 2.5, -7.3}, {1.2, 4.4}, 1.0});
    const LogValue b = hyper_terminating({{2.5, -7.3, -5.0}, {4.4, 1.2}, 1.0});
    const LogValue c = hyper_terminating({{-7.3, -5.0, 2.5}, {1.2, 4.4}, 1.0});
    CHECK(relative_difference(b, a) < 1e-14);
    CHECK(relative_difference(c, a) < 1e-14);
}

TEST_CASE("laguerre closed forms against moment expansions")
{
    CHECK(rel(laguerre_square_unit_rate(0, 10.0, 2.5), std::tgamma(2.5)) < 1e-14);
    // m = 1, mu = 2: (alpha+1)^2 Gamma(2) - 2 (alpha+1) Gamma(3) + Gamma(4)
    CHECK(rel(laguerre_square_unit_rate(1, 10.0, 2.0), 121.0 - 44.0 + 6.0) < 1e-14);
    for (int m = 0; m <= 4; ++m)
        for (double alpha : {3.0, 10.0}) {
            CHECK(rel(laguerre_square_unit_rate(m, alpha, 2.5),
                      static_cast<double>(laguerre_square_by_moments(m, alpha, 2.5, 1.0))) < 1e-11);
            CHECK(rel(laguerre_norm_square(m, alpha),
                      static_cast<double>(laguerre_square_by_moments(m, alpha, alpha + 1, 1.0))) < 1e-11);
            for (double lambda : {0.5, 2.0})
                CHECK(rel(laguerre_weighted_square(m, alpha, lambda),
                          static_cast<double>(laguerre_square_by_moments(m, alpha, alpha + 1, lambda))) < 1e-11);
        }
    CHECK(relative_difference(laguerre_norm_square(0, 7.0), gamma_value(8.0)) < 1e-14);
    CHECK(relative_difference(laguerre_weighted_square(3, 7.0, 1.0), laguerre_norm_square(3, 7.0)) < 1e-13);
    CHECK_THROWS_AS(laguerre_square_unit_rate(2, 3.0, 4.0), std::invalid_argument);
}

TEST_CASE("symmetric gegenbauer closed form")
{
    for (int m = 0; m <= 5; ++m)
        for (double alpha : {0.75, 3.0, 40.0}) {
            const double lhs = std::log(std::sqrt(M_PI)) + pochhammer(2 * alpha, m).log_abs - std::lgamma(m + 1.0) +
                               std::lgamma(alpha - 0.5) - std::lgamma(alpha);
            CHECK(std::fabs(gegenbauer_square_symmetric(m, alpha).log_abs - lhs) < 1e-13);
        }
    CHECK_THROWS_AS(gegenbauer_square_symmetric(1, 0.5), std::invalid_argument);
}

TEST_CASE("closed forms agree with the oracle")
{
    for (int m = 0; m <= 4; ++m)
        for (double alpha : {20.0, 50.0}) {
            const Functional fs[] = {
                lag_renyi(m, alpha, 2.5, 1.0, 2.0),
                geg_renyi(m, alpha, -0.5, 2 * m - 1.5, 1.0, 3.0, 2.0),
                geg_renyi(m, alpha, -0.5, -1.5, 1.0, 1.0, 2.0),
                ext_lag_renyi(m, alpha, 1.0, 0.5, 2.0),
                ext_lag_renyi(m, alpha, 1.0, 1.0, 2.0),
            };
            for (const Functional& F : fs) {
                const auto cf = closed_form_value(F);
                REQUIRE(cf.has_value());
                CHECK(relative_difference(oracle::integrate_functional(F, 1e-10).value, *cf) < 1e-10);
            }
        }
}

TEST_CASE("dispatcher")
{
    CHECK(closed_form_value(lag_shannon(0, 10.0, 2.0, 1.0)).value().is_zero());
    CHECK(relative_difference(*closed_form_value(lag_renyi(0, 10.0, 2.0, 3.0, 1.7)),
                              LogValue::from_double(1.0 / 9.0)) < 1e-14);
    CHECK(relative_difference(*closed_form_value(ext_lag_renyi(0, 10.0, 0.5, 2.0, 0.3)),
                              LogValue::from_log(std::lgamma(10.5) - 10.5 * std::log(2.0))) < 1e-13);
    // I3 with m = 0 is a Beta integral
    const Functional g = geg_renyi(0, 10.0, 0.5, 1.5, 2.0, 1.0, 2.0);
    const double lb = std::lgamma(21.5) + std::lgamma(12.5) - std::lgamma(34.0);
    CHECK(std::fabs(closed_form_value(g)->log_abs - (33.0 * std::log(2.0) + lb)) < 1e-12);
    CHECK_FALSE(closed_form_value(lag_renyi(2, 10.0, 2.0, 1.5, 2.0)).has_value());
}
