#pragma once

#include <vector>

// Laguerre, Gegenbauer and Hermite polynomials of modest degree evaluated
// by upward three-term recurrence, plus their real zeros.
namespace entropic::orthopoly {

inline constexpr int max_degree = 60;

struct PolyEval
{
    double value;
    double derivative;
};

enum class Family { laguerre, gegenbauer, hermite };

struct ZeroSet
{
    std::vector<double> roots; // strictly increasing
    int degree = 0;
};

// L_m^(alpha)(x); derivative is -L_{m-1}^(alpha+1)(x).
PolyEval laguerre_eval(int m, double alpha, double x);
double laguerre_value(int m, double alpha, double x);

// C_m^(alpha)(x); derivative is 2 alpha C_{m-1}^(alpha+1)(x).
PolyEval gegenbauer_eval(int m, double alpha, double x);
double gegenbauer_value(int m, double alpha, double x);

// Physicists' Hermite H_m(x).
PolyEval hermite_eval(int m, double x);
double hermite_value(int m, double x);

// Explicit finite sum for C_m^(alpha)(x); an independent check on the
// recurrence rather than a production path.
double gegenbauer_explicit(int m, double alpha, double x);

// All m real zeros; bracketed on a scan of the support and polished by
// safeguarded Newton. Throws numeric_failure if polishing stalls.
ZeroSet polynomial_zeros(Family family, int m, double alpha = 0.0);

} // namespace entropic::orthopoly
