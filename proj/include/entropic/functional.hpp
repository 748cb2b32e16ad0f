#pragma once

#include <string>

namespace entropic {

enum class Kind {
    lag_renyi,       // I1: x^{mu-1} e^{-lambda x} |L_m^(alpha)(x)|^kappa on (0, inf)
    lag_shannon,     // I2: same weight, L^2 log L^2
    geg_renyi,       // I3: (1-x)^{c alpha + a} (1+x)^{d alpha + b} |C_m^(alpha)(x)|^kappa on (-1, 1)
    geg_shannon,     // I4: same weight, C^2 log C^2
    ext_lag_renyi,   // I5: x^{alpha + sigma - 1} e^{-lambda x} |L_m^(alpha)(x)|^kappa
    ext_lag_shannon, // I5*: same weight, L^2 log L^2
};

struct Functional
{
    Kind kind = Kind::lag_renyi;
    int m = 0;
    double alpha = 1.0;
    double mu = 1.0;
    double sigma = 0.0;
    double lambda = 1.0;
    double kappa = 2.0;
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;
    double d = 1.0;

    // Throws std::invalid_argument on parameters outside the domain of
    // the integral.
    void validate() const;

    bool is_shannon() const;
    bool is_laguerre() const;
    bool is_gegenbauer() const { return kind == Kind::geg_renyi || kind == Kind::geg_shannon; }
    bool is_extended() const { return kind == Kind::ext_lag_renyi || kind == Kind::ext_lag_shannon; }
    // polynomial exponent: kappa for Renyi kinds, 2 for Shannon kinds
    double power() const { return is_shannon() ? 2.0 : kappa; }
};

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& name);

Functional lag_renyi(int m, double alpha, double mu, double lambda, double kappa);
Functional lag_shannon(int m, double alpha, double mu, double lambda);
Functional geg_renyi(int m, double alpha, double a, double b, double c, double d, double kappa);
Functional geg_shannon(int m, double alpha, double a, double b, double c, double d);
Functional ext_lag_renyi(int m, double alpha, double sigma, double lambda, double kappa);
Functional ext_lag_shannon(int m, double alpha, double sigma, double lambda);

} // namespace entropic
