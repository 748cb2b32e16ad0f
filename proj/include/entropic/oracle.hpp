#pragma once

#include "entropic/functional.hpp"
#include "entropic/log_value.hpp"
#include "entropic/quadrature.hpp"

#include <utility>
#include <vector>

// Direct numerical evaluation of the integrals; the reference every
// expansion is measured against.
namespace entropic::oracle {

struct QuadResult
{
    LogValue value;
    double abs_err_log = -std::numeric_limits<double>::infinity();
    long n_evals = 0;
    std::vector<std::pair<double, double>> segments; // in the original variable
};

// 1e-13 <= tol_rel <= 1e-6. Throws numeric_failure if the segment budget is
// exhausted or a Renyi integral comes out nonpositive.
QuadResult integrate_functional(const Functional& F, double tol_rel = 1e-10,
                                quadrature::Execution exec = quadrature::Execution::parallel);

// int e^{-alpha y^2 / 2} |H_m(y sqrt(alpha/2))|^kappa dy
QuadResult hermite_power_integral(int m, double kappa, double alpha_scale, double tol_rel = 1e-12,
                                  quadrature::Execution exec = quadrature::Execution::parallel);

// p(x)^2 log p(x)^2 for the polynomial of a Shannon functional; 0 at zeros.
double shannon_integrand_value(const Functional& F, double x);

} // namespace entropic::oracle
