#pragma once

#include <functional>
#include <vector>

// Tanh-sinh quadrature on segments with global adaptive bisection.
namespace entropic::quadrature {

// Abscissa together with its exact distances to the segment ends, so that
// integrands with endpoint factors like (1-x)^p avoid cancellation.
struct Node
{
    double x;
    double from_lo;
    double from_hi;
    double lo; // segment ends
    double hi;
};

using Integrand = std::function<double(const Node&)>;

struct Segment
{
    double lo = 0.0;
    double hi = 0.0;
    double value = 0.0;
    double abs_value = 0.0; // integral of |f|
    double error = 0.0;
    int level = 0;
    long evals = 0;
};

enum class Execution { serial, parallel };

struct Options
{
    double tol_rel = 1e-10;
    int max_segments = 10000;
    int min_level = 3;
    int max_level = 7;
    double t_max = 6.0; // nearest node about 1e-275 of the segment width from its end
    Execution execution = Execution::parallel;
};

struct Result
{
    double value = 0.0;
    double error = 0.0;
    double abs_value = 0.0;
    long n_evals = 0;
    bool converged = false;
    std::vector<Segment> segments; // sorted, contiguous
};

// Single segment; stops refining once successive levels agree to the
// given absolute target (after min_level) or at max_level.
Segment tanh_sinh(const Integrand& f, double lo, double hi, double abs_target, const Options& opt);

// Integrates over [breaks.front(), breaks.back()] using the sorted
// breakpoints as initial segments; throws numeric_failure on a
// non-finite integrand value. Returns converged = false if the segment
// budget runs out.
Result integrate(const Integrand& f, std::vector<double> breaks, const Options& opt);

// Pairwise sum in index order.
double pairwise_sum(const double* v, std::size_t n);

} // namespace entropic::quadrature
