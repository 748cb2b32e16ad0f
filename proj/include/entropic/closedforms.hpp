#pragma once

#include "entropic/functional.hpp"
#include "entropic/log_value.hpp"

#include <optional>
#include <vector>

// Scalar special functions and exact finite-sum evaluations of the
// integrals for the parameter choices where they are known in closed form.
namespace entropic::closedforms {

double log_gamma(double x);                // x > 0
LogValue gamma_value(double x);            // Gamma(x) for real x away from poles
LogValue pochhammer(double a, int n);      // (a)_n, any real a
LogValue log_beta(double p, double q);     // B(p, q), p, q > 0

struct HyperTerm
{
    std::vector<double> upper;
    std::vector<double> lower;
    double argument = 0.0;
};

// Index N of the last nonzero term; throws if the series does not terminate.
int terminating_index(const HyperTerm& h);

// Exact finite pFq sum with compensated summation.
LogValue hyper_terminating(const HyperTerm& h);

// int_0^inf x^{mu-1} e^{-x} L_m^(alpha)(x)^2 dx via a terminating 3F2
LogValue laguerre_square_unit_rate(int m, double alpha, double mu);
// int (1-x)^{alpha-1/2} (1+x)^{3 alpha+2m-3/2} C_m^(alpha)(x)^2 dx
LogValue gegenbauer_square_asymmetric(int m, double alpha);
// int (1-x)^{alpha-1/2} (1+x)^{alpha-3/2} C_m^(alpha)(x)^2 dx
LogValue gegenbauer_square_symmetric(int m, double alpha);
// int_0^inf x^alpha e^{-lambda x} L_m^(alpha)(x)^2 dx via a terminating 2F1
LogValue laguerre_weighted_square(int m, double alpha, double lambda);
// int_0^inf x^alpha e^{-x} L_m^(alpha)(x)^2 dx = Gamma(m+alpha+1)/m!
LogValue laguerre_norm_square(int m, double alpha);

// Exact value when one of the forms above (or a degree-zero reduction)
// applies to F; nullopt otherwise.
std::optional<LogValue> closed_form_value(const Functional& F);

} // namespace entropic::closedforms
