#include "entropic/errors.hpp"
#include "entropic/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numeric>

using namespace entropic::quadrature;

namespace {

Options opts(Execution e = Execution::parallel)
{
    Options o;
    o.execution = e;
    return o;
}

} // namespace

TEST_CASE("smooth integrand")
{
    const Result r = integrate([](const Node& n) { return std::sin(n.x); }, {0.0, M_PI}, opts());
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r.abs_value == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("endpoint singularities through exact endpoint distances")
{
    const Result r = integrate([](const Node& n) { return 1.0 / std::sqrt(n.from_lo); }, {0.0, 1.0}, opts());
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));

    // int_{-1}^{1} (1-x)^{-0.8} (1+x)^{2.5} dx = 2^{2.7} B(0.2, 3.5)
    const double p = 0.2, q = 3.5;
    Options tight = opts();
    tight.tol_rel = 1e-12;
    const Result b = integrate(
        [&](const Node& n) {
            const double om = n.hi == 1.0 ? n.from_hi : 1.0 - n.x;
            const double op = n.lo == -1.0 ? n.from_lo : 1.0 + n.x;
            return std::pow(om, p - 1) * std::pow(op, q - 1);
        },
        {-1.0, 0.0, 1.0}, tight);
    const double ref = std::pow(2.0, p + q - 1) * std::exp(std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q));
    CHECK(b.value == doctest::Approx(ref).epsilon(1e-11));
}

TEST_CASE("segments are sorted and contiguous")
{
    const Result r = integrate([](const Node& n) { return std::fabs(n.x - 0.37); }, {0.0, 1.0, 0.5}, opts());
    REQUIRE(!r.segments.empty());
    CHECK(r.segments.front().lo == 0.0);
    CHECK(r.segments.back().hi == 1.0);
    for (std::size_t i = 1; i < r.segments.size(); ++i)
        CHECK(r.segments[i].lo == r.segments[i - 1].hi);
    CHECK(r.value == doctest::Approx(0.5 * (0.37 * 0.37 + 0.63 * 0.63)).epsilon(1e-10));
}

TEST_CASE("serial and parallel paths are bit-identical")
{
    auto f = [](const Node& n) { return std::exp(-30 * n.x) * std::pow(std::fabs(std::cos(9 * n.x)), 1.3); };
    const Result a = integrate(f, {0.0, 0.4, 3.0}, opts(Execution::serial));
    const Result b = integrate(f, {0.0, 0.4, 3.0}, opts(Execution::parallel));
    CHECK(a.value == b.value);
    CHECK(a.error == b.error);
    CHECK(a.n_evals == b.n_evals);
    CHECK(a.segments.size() == b.segments.size());
}

TEST_CASE("non-finite integrand values are reported")
{
    CHECK_THROWS_AS(integrate([](const Node&) { return std::numeric_limits<double>::quiet_NaN(); }, {0.0, 1.0},
                              opts()),
                    entropic::numeric_failure);
}

TEST_CASE("segment budget exhaustion is reported")
{
    Options o = opts();
    o.max_segments = 3;
    o.tol_rel = 1e-14;
    const Result r = integrate([](const Node& n) { return std::pow(std::fabs(n.x - 0.3141), -0.7); }, {0.0, 1.0}, o);
    CHECK_FALSE(r.converged);
}

TEST_CASE("pairwise summation")
{
    std::vector<double> v(1001);
    std::iota(v.begin(), v.end(), 0.0);
    CHECK(pairwise_sum(v.data(), v.size()) == 500500.0);
    CHECK(pairwise_sum(v.data(), 0) == 0.0);
}
