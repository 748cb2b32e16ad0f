#pragma once

#include "entropic/series.hpp"

#include <array>
#include <vector>

// Coefficient ladders of the large-alpha expansions. Low orders come from
// the printed closed forms; arbitrary orders come from the series engine.
namespace entropic::coeffs {

enum class LadderFamily { lag_renyi, geg_asym, geg_sym, ext_lag };

struct LadderParams
{
    int m = 0;
    double kappa = 2.0;
    double mu = 0.0;
    double sigma = 0.0;
    double lambda = 1.0;
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
};

struct CoeffLadder
{
    LadderFamily family = LadderFamily::lag_renyi;
    std::vector<double> values;
    bool alpha_dependent = false;
    LadderParams params;
};

// ---- Laguerre, fixed mu ----------------------------------------------------

// (n+1) f_{n+1} = (m-n) f_n - alpha f_{n-1}, f_0 = 1
std::vector<double> f_sequence(int m, double alpha, int n_max);
double f_printed(int n, int m, double alpha); // n <= 4
double f_kummer(int n, int m, double alpha);  // binomial times terminating 1F1

// g_0..g_2 of the rearranged polynomial in 1/alpha; t != 1
std::array<double, 3> g_coeffs(int m, double t);

std::vector<double> lag_A_coeffs(double kappa, int m, double alpha, int j_max);
double lag_A_printed(int j, double kappa, int m, double alpha); // j <= 2
double lag_B(int j, int n, double mu, double lambda, double kappa, int m);
CoeffLadder lag_C_ladder(double mu, double lambda, double kappa, int m, double alpha, int k_max);

double lag_D(int k, double mu, double lambda, double kappa, int m);                  // k <= 2
double lag_D_kappa_derivative(int k, double mu, double lambda, double kappa, int m); // k <= 2
// second coefficient specialised to kappa = 2, lambda = 1 (hypergeometric route)
double lag_D2_unit_rate(double mu, int m);

// Dimensionless correction terms grouped by leading order in 1/alpha:
// term n collects A_j B_{j,k} / alpha^{j+k} with ceil(j/2) + k = n.
std::vector<double> lag_grouped_terms(double mu, double lambda, double kappa, int m, double alpha, int K);

// ---- Gegenbauer ------------------------------------------------------------

std::vector<double> geg_f_sequence(int m, double alpha);
std::vector<double> geg_A_coeffs(double kappa, int m, double alpha, int j_max);
double geg_A_printed(int j, double kappa, int m, double alpha); // j <= 2

// x(y) - x_m for phi(x) = -c log(1-x) - d log(1+x), to the given order
series::Series saddle_geg(double c, double d, int order);
std::array<double, 3> saddle_geg_printed(double c, double d); // a_1..a_3

// amplitude (1-x)^a (1+x)^b x^{kappa m - 2j} dx/dy; requires 0 < c < d
series::Series geg_laplace_c(int j, double a, double b, double c, double d, double kappa, int m, int order);
std::array<double, 2> geg_laplace_c_printed(int j, double a, double b, double c, double d, double kappa, int m);
double geg_D0(double a, double b, double c, double d, double kappa, int m);

// term n collects A_j c_{2k}^{(2j)} (2k-1)!! / alpha^{j+k} with j + k = n
std::vector<double> geg_grouped_terms(double a, double b, double c, double d, double kappa, int m, double alpha,
                                      int K);

double geg_sym_D1(double a, double b, int m);

struct HermiteGeg
{
    std::array<double, 2> p;
    std::array<double, 2> q;
};
HermiteGeg geg_hermite_coeffs(int m, double x);

struct HermiteLag
{
    std::array<double, 2> c;
    std::array<double, 2> d;
};
HermiteLag lag_hermite_coeffs(int m, double alpha, double x);

// ---- Laguerre, mu = alpha + sigma ------------------------------------------

series::Series saddle_ext(double lambda, int order); // x(y) - 1/lambda
std::array<double, 5> saddle_ext_printed(double lambda);

// normalised amplitude of the j-th Laplace integral (value 1 at y = 0 for j = 0)
series::Series ext_amplitude(int j, double sigma, double lambda, double kappa, int m, int order);

double ext_lag_D(int k, double sigma, double lambda, double kappa, int m);                  // k <= 1
double ext_lag_D_kappa_derivative(int k, double sigma, double lambda, double kappa, int m); // k <= 1
double ext_lag_D1_printed(double sigma, double lambda, double kappa, int m);              // as typeset
double ext_lag_D1_kappa2_sigma1(double lambda, int m);

std::vector<double> ext_grouped_terms(double sigma, double lambda, double kappa, int m, double alpha, int K);

// ---- alpha-free coefficients from the engine -------------------------------

// Exact rearrangement using polynomial-in-alpha arithmetic on the ladders.
std::vector<double> engine_lag_D(int k_max, double mu, double lambda, double kappa, int m);
std::vector<double> engine_ext_D(int k_max, double sigma, double lambda, double kappa, int m);

} // namespace entropic::coeffs
