#pragma once

#include <vector>

// Truncated power series in one variable with real coefficients.
namespace entropic::series {

inline constexpr int default_order = 16;

class Series
{
public:
    Series() = default;
    // Coefficients beyond `order` are dropped; missing ones are zero.
    Series(std::vector<double> coeffs, int order);

    static Series zero(int order);
    static Series constant(double c, int order);
    static Series variable(int order); // y

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double operator[](int k) const { return k <= order() ? coeffs_[k] : 0.0; }
    double& operator[](int k) { return coeffs_.at(k); }

    Series truncated(int order) const;
    double evaluate(double y) const;

private:
    std::vector<double> coeffs_{0.0};
};

enum class Op { add, sub, mul, div };

Series series_arith(const Series& a, const Series& b, Op op);
Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator/(const Series& a, const Series& b);
Series operator*(double s, const Series& a);

// f(g(y)); g must have zero constant term.
Series series_compose(const Series& f, const Series& g);

Series series_exp(const Series& a);
Series series_log(const Series& a);
Series series_pow(const Series& a, double rho);
Series derivative(const Series& a);

// Compositional inverse g with f(g(y)) = y.
Series series_revert(const Series& f);

// Given psi(s) = phi(x_m + s) - phi(x_m) (zero constant and linear terms,
// positive quadratic term) returns s(y) solving psi(s) = y^2/2 with
// sign(y) = side * sign(s). Output order is one less than the input order.
Series saddle_series(const Series& psi, int side = 1);

// sum_{k=0}^{K} c_{2k} (2k-1)!! / alpha^k
double laplace_sum(const Series& amplitude, double alpha, int K);
// the individual summands of laplace_sum
std::vector<double> laplace_terms(const Series& amplitude, double alpha, int K);

// Power of a series with unit constant term and coefficients generic over a
// ring (used for polynomial-in-parameter coefficients).
template <class T, class Add, class Mul, class Scale>
std::vector<T> unit_series_pow(const std::vector<T>& a, double rho, int order, T zero, T one, Add add, Mul mul,
                               Scale scale)
{
    // n b_n = sum_{k=1}^{n} (rho k - (n - k)) a_k b_{n-k}, with a_0 = 1
    std::vector<T> b(order + 1, zero);
    b[0] = one;
    for (int n = 1; n <= order; ++n) {
        T acc = zero;
        for (int k = 1; k <= n && k < static_cast<int>(a.size()); ++k) {
            const double w = rho * k - (n - k);
            if (w != 0.0)
                acc = add(acc, scale(mul(a[k], b[n - k]), w));
        }
        b[n] = scale(acc, 1.0 / n);
    }
    return b;
}

} // namespace entropic::series
