#include "entropic/log_value.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

using entropic::LogValue;

TEST_CASE("round trip through linear space")
{
    for (double v : {-3.5, -1e-200, 1e-300, 2.0, 7e250}) {
        const LogValue l = LogValue::from_double(v);
        // exp of a log of size L carries a relative error of about L ulp
        CHECK(l.to_double() == doctest::Approx(v).epsilon(1e-15 * std::max(1.0, std::fabs(std::log(std::fabs(v))))));
    }
    CHECK(LogValue::from_double(0.0).is_zero());
    CHECK(LogValue::zero().to_double() == 0.0);
}

TEST_CASE("multiplication adds logs and multiplies signs")
{
    const LogValue a = LogValue::from_log(800.0, -1);
    const LogValue b = LogValue::from_log(-30.0, -1);
    const LogValue p = a * b;
    CHECK(p.sign == 1);
    CHECK(p.log_abs == doctest::Approx(770.0));
    CHECK((a * LogValue::zero()).is_zero());
    CHECK((a / b).log_abs == doctest::Approx(830.0));
    CHECK_THROWS_AS(a / LogValue::zero(), std::domain_error);
}

TEST_CASE("addition with mixed signs")
{
    const LogValue three = LogValue::from_double(3.0);
    const LogValue two = LogValue::from_double(2.0);
    CHECK((three - two).to_double() == doctest::Approx(1.0));
    CHECK((two - three).to_double() == doctest::Approx(-1.0));
    CHECK((three - three).is_zero());
    // far beyond double range
    const LogValue big = LogValue::from_log(5000.0);
    const LogValue sum = big + big;
    CHECK(sum.log_abs == doctest::Approx(5000.0 + std::log(2.0)));
}

TEST_CASE("linear view only inside range")
{
    CHECK(LogValue::from_log(699.0).linear().has_value());
    CHECK_FALSE(LogValue::from_log(701.0).linear().has_value());
}

TEST_CASE("relative difference")
{
    const LogValue a = LogValue::from_log(1000.0);
    const LogValue b = LogValue::from_log(1000.0 + 1e-9);
    CHECK(entropic::relative_difference(b, a) == doctest::Approx(1e-9).epsilon(1e-6));
    CHECK(entropic::relative_difference(-a, a) == doctest::Approx(2.0));
    CHECK(entropic::relative_difference(LogValue::zero(), LogValue::zero()) == 0.0);
    CHECK_THROWS(LogValue::from_log(std::nan("")));
}
