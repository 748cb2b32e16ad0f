#include "entropic/series.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

using namespace entropic::series;

namespace {

void check_coeffs(const Series& s, std::vector<double> expected, double tol = 1e-14)
{
    REQUIRE(s.order() + 1 == static_cast<int>(expected.size()));
    for (std::size_t k = 0; k < expected.size(); ++k) {
        CAPTURE(k);
        CHECK(std::fabs(s[k] - expected[k]) <= tol * std::max(1.0, std::fabs(expected[k])));
    }
}

Series random_series(std::mt19937& rng, int order, double c0)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Series s = Series::zero(order);
    s[0] = c0;
    for (int k = 1; k <= order; ++k)
        s[k] = u(rng);
    return s;
}

double max_abs(const Series& s, int from = 0)
{
    double r = 0.0;
    for (int k = from; k <= s.order(); ++k)
        r = std::max(r, std::fabs(s[k]));
    return r;
}

Series abs_coeffs(const Series& s)
{
    Series r = s;
    for (int k = 0; k <= r.order(); ++k)
        r[k] = std::fabs(r[k]);
    return r;
}

// largest residual coefficient relative to the same coefficient of the
// composition of absolute values, which bounds the summands it is built from
double composition_residual(const Series& f, const Series& g, const Series& target)
{
    const Series r = series_compose(f, g) - target;
    const Series scale = series_compose(abs_coeffs(f), abs_coeffs(g));
    double worst = 0.0;
    for (int k = 0; k <= r.order(); ++k)
        if (scale[k] > 0.0)
            worst = std::max(worst, std::fabs(r[k]) / scale[k]);
    return worst;
}

} // namespace

TEST_CASE("arithmetic examples")
{
    const Series one_plus({1.0, 1.0}, 2), one_minus({1.0, -1.0}, 2);
    check_coeffs(one_plus * one_minus, {1.0, 0.0, -1.0});
    check_coeffs(Series::constant(1.0, 3) / Series({1.0, -1.0}, 3), {1.0, 1.0, 1.0, 1.0});
    check_coeffs(Series({1.0, 2.0, 1.0}, 2) / Series({1.0, 1.0}, 2), {1.0, 1.0, 0.0});
    CHECK_THROWS_AS(Series::constant(1.0, 2) / Series({0.0, 1.0}, 2), std::invalid_argument);
}

TEST_CASE("results carry the smaller order")
{
    const Series a({1.0, 2.0, 3.0, 4.0}, 3), b({1.0, 1.0}, 1);
    CHECK((a + b).order() == 1);
    CHECK(series_arith(a, b, Op::mul).order() == 1);
    CHECK_THROWS_AS(b.truncated(2), std::invalid_argument);
}

TEST_CASE("composition examples")
{
    const Series y2({0.0, 0.0, 1.0}, 3), g({0.0, 1.0, 1.0}, 3);
    check_coeffs(series_compose(y2, g), {0.0, 0.0, 1.0, 2.0});
    const Series e = series_exp(Series::variable(5));
    check_coeffs(series_compose(e, Series::zero(5)), {1.0, 0.0, 0.0, 0.0, 0.0, 0.0});
    const Series em1 = series_exp(Series::variable(4)) - Series::constant(1.0, 4);
    const Series log1p = series_log(Series::constant(1.0, 4) + Series::variable(4));
    check_coeffs(series_compose(log1p, em1), {0.0, 1.0, 0.0, 0.0, 0.0});
    CHECK_THROWS_AS(series_compose(y2, Series({1.0, 1.0}, 3)), std::invalid_argument);
}

TEST_CASE("transcendental examples")
{
    const Series opy({1.0, 1.0}, 2);
    check_coeffs(series_pow(opy, 2.0), {1.0, 2.0, 1.0});
    check_coeffs(series_pow(opy, 0.5), {1.0, 0.5, -0.125});
    check_coeffs(series_log(Series({1.0, 1.0}, 3)), {0.0, 1.0, -0.5, 1.0 / 3.0});
    CHECK_THROWS_AS(series_log(Series({-1.0, 1.0}, 3)), std::invalid_argument);
    CHECK_THROWS_AS(series_pow(Series({0.0, 1.0}, 3), 1.5), std::invalid_argument);
}

TEST_CASE("reversion examples")
{
    check_coeffs(series_revert(Series::variable(4)), {0.0, 1.0, 0.0, 0.0, 0.0});
    check_coeffs(series_revert(Series({0.0, 1.0, 1.0}, 3)), {0.0, 1.0, -1.0, 2.0});
    CHECK_THROWS_AS(series_revert(Series({0.0, 0.0, 1.0}, 3)), std::invalid_argument);
    CHECK_THROWS_AS(series_revert(Series({1.0, 1.0}, 3)), std::invalid_argument);
}

TEST_CASE("saddle reversion for lambda x - log x - 1")
{
    for (double lambda : {0.5, 2.0, 3.0}) {
        // psi(s) = lambda s - log(1 + lambda s)
        Series psi = Series::zero(7);
        for (int k = 2; k <= 7; ++k)
            psi[k] = ((k % 2) ? -1.0 : 1.0) * std::pow(lambda, k) / k;
        const Series x = saddle_series(psi, 1);
        const double expected[] = {0.0, 1.0, 1.0 / 3, 1.0 / 36, -1.0 / 270, 1.0 / 4320};
        for (int k = 1; k <= 5; ++k)
            CHECK(x[k] == doctest::Approx(expected[k] / lambda).epsilon(1e-12));
    }
}

TEST_CASE("saddle series: first coefficient and residual")
{
    // phi(x) = -c log(1-x) - d log(1+x) about x_m = (d-c)/(c+d)
    for (auto [c, d] : {std::pair{1.0, 3.0}, std::pair{1.0, 1.0}, std::pair{0.7, 2.2}}) {
        const double xm = (d - c) / (c + d);
        const int N = 12;
        Series psi = Series::zero(N + 1);
        for (int k = 2; k <= N + 1; ++k)
            psi[k] = c / (k * std::pow(1 - xm, k)) + ((k % 2) ? -d : d) / (k * std::pow(1 + xm, k));
        const Series s = saddle_series(psi, 1);
        CHECK(s[1] == doctest::Approx(2 * std::sqrt(c * d / std::pow(c + d, 3))).epsilon(1e-13));
        CHECK(s[2] == doctest::Approx(2 * (c - d) / (3 * (c + d) * (c + d))).epsilon(1e-12));
        if (c == 1.0 && d == 3.0)
            CHECK(s[1] == doctest::Approx(std::sqrt(3.0) / 4).epsilon(1e-14));
        if (c == d)
            CHECK(s[1] == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-14));
        // psi(s(y)) - y^2/2
        Series r = series_compose(psi.truncated(N), s.truncated(N));
        r[2] -= 0.5;
        CHECK(max_abs(r) <= 1e-10);
    }
    Series bad = Series::zero(4);
    bad[2] = -1.0;
    CHECK_THROWS_AS(saddle_series(bad), std::invalid_argument);
}

TEST_CASE("laplace sums")
{
    CHECK(laplace_sum(Series::constant(2.5, 6), 10.0, 3) == doctest::Approx(2.5));
    CHECK(laplace_sum(Series({0.0, 0.0, 1.0}, 2), 7.0, 1) == doctest::Approx(1.0 / 7.0));
    // c_4 * 3 / alpha^2
    CHECK(laplace_sum(Series({0.0, 0.0, 0.0, 0.0, 1.0}, 4), 2.0, 2) == doctest::Approx(0.75));
    CHECK_THROWS_AS(laplace_sum(Series::constant(1.0, 3), 10.0, 2), std::invalid_argument);
}

TEST_CASE("properties on random series")
{
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 50; ++trial) {
        const int N = 12;
        Series f = random_series(rng, N, 0.0);
        f[1] = 0.5 + std::fabs(f[1]);
        CHECK(composition_residual(f, series_revert(f), Series::variable(N)) <= 1e-12);

        const Series a = random_series(rng, N, 1.5);
        Series back = series_exp(series_log(a)) - a;
        CHECK(max_abs(back) <= 1e-12 * max_abs(a));

        const double k1 = 0.7, k2 = 1.9;
        Series pp = series_pow(a, k1) * series_pow(a, k2) - series_pow(a, k1 + k2);
        CHECK(max_abs(pp) <= 1e-12 * max_abs(series_pow(a, k1 + k2)));
    }
}

TEST_CASE("generic ring power matches the real power")
{
    const std::vector<double> a{1.0, 0.3, -0.2, 0.05};
    const auto add = [](double x, double y) { return x + y; };
    const auto mul = [](double x, double y) { return x * y; };
    const auto scale = [](double x, double s) { return x * s; };
    const std::vector<double> b = unit_series_pow(a, 2.7, 6, 0.0, 1.0, add, mul, scale);
    const Series ref = series_pow(Series(a, 6), 2.7);
    for (int k = 0; k <= 6; ++k)
        CHECK(b[k] == doctest::Approx(ref[k]).epsilon(1e-13));
}
