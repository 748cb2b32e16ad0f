#include "entropic/functional.hpp"

#include "entropic/orthopoly.hpp"

#include <cmath>
#include <stdexcept>

namespace entropic {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

bool finite(double v) { return std::isfinite(v); }

} // namespace

bool Functional::is_shannon() const
{
    return kind == Kind::lag_shannon || kind == Kind::geg_shannon || kind == Kind::ext_lag_shannon;
}

bool Functional::is_laguerre() const
{
    return kind == Kind::lag_renyi || kind == Kind::lag_shannon || is_extended();
}

void Functional::validate() const
{
    require(m >= 0 && m <= orthopoly::max_degree, "m must lie in [0, 60]");
    require(finite(alpha) && alpha > 0.0, "alpha must be positive");
    if (is_shannon())
        require(kappa == 2.0, "Shannon functionals fix kappa = 2");
    else
        require(finite(kappa) && kappa > 0.0, "kappa must be positive");
    switch (kind) {
    case Kind::lag_renyi:
    case Kind::lag_shannon:
        require(finite(mu) && mu > 0.0, "mu must be positive");
        require(finite(lambda) && lambda > 0.0, "lambda must be positive");
        break;
    case Kind::ext_lag_renyi:
    case Kind::ext_lag_shannon:
        require(finite(sigma) && alpha + sigma > 0.0, "alpha + sigma must be positive");
        require(finite(lambda) && lambda > 0.0, "lambda must be positive");
        break;
    case Kind::geg_renyi:
    case Kind::geg_shannon:
        require(finite(c) && c > 0.0 && finite(d) && d > 0.0, "c and d must be positive");
        require(finite(a) && finite(b), "a and b must be finite");
        require(c * alpha + a > -1.0 && d * alpha + b > -1.0, "weight exponents must exceed -1");
        break;
    }
}

std::string kind_name(Kind k)
{
    switch (k) {
    case Kind::lag_renyi: return "i1";
    case Kind::lag_shannon: return "i2";
    case Kind::geg_renyi: return "i3";
    case Kind::geg_shannon: return "i4";
    case Kind::ext_lag_renyi: return "i5";
    case Kind::ext_lag_shannon: return "i5s";
    }
    return "?";
}

Kind kind_from_name(const std::string& name)
{
    for (Kind k : {Kind::lag_renyi, Kind::lag_shannon, Kind::geg_renyi, Kind::geg_shannon, Kind::ext_lag_renyi,
                   Kind::ext_lag_shannon})
        if (kind_name(k) == name)
            return k;
    throw std::invalid_argument("unknown functional kind '" + name + "'");
}

Functional lag_renyi(int m, double alpha, double mu, double lambda, double kappa)
{
    Functional f;
    f.kind = Kind::lag_renyi;
    f.m = m;
    f.alpha = alpha;
    f.mu = mu;
    f.lambda = lambda;
    f.kappa = kappa;
    return f;
}

Functional lag_shannon(int m, double alpha, double mu, double lambda)
{
    Functional f = lag_renyi(m, alpha, mu, lambda, 2.0);
    f.kind = Kind::lag_shannon;
    return f;
}

Functional geg_renyi(int m, double alpha, double a, double b, double c, double d, double kappa)
{
    Functional f;
    f.kind = Kind::geg_renyi;
    f.m = m;
    f.alpha = alpha;
    f.a = a;
    f.b = b;
    f.c = c;
    f.d = d;
    f.kappa = kappa;
    return f;
}

Functional geg_shannon(int m, double alpha, double a, double b, double c, double d)
{
    Functional f = geg_renyi(m, alpha, a, b, c, d, 2.0);
    f.kind = Kind::geg_shannon;
    return f;
}

Functional ext_lag_renyi(int m, double alpha, double sigma, double lambda, double kappa)
{
    Functional f;
    f.kind = Kind::ext_lag_renyi;
    f.m = m;
    f.alpha = alpha;
    f.sigma = sigma;
    f.lambda = lambda;
    f.kappa = kappa;
    return f;
}

Functional ext_lag_shannon(int m, double alpha, double sigma, double lambda)
{
    Functional f = ext_lag_renyi(m, alpha, sigma, lambda, 2.0);
    f.kind = Kind::ext_lag_shannon;
    return f;
}

} // namespace entropic
