#include "entropic/quadrature.hpp"

#include "entropic/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace entropic::quadrature {

double pairwise_sum(const double* v, std::size_t n)
{
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            s += v[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

namespace {

struct Accum
{
    double sum = 0.0;
    double abs_sum = 0.0;
    long evals = 0;
};

void add_node(const Integrand& f, double t, double lo, double hi, Accum& acc)
{
    const double h = 0.5 * (hi - lo);
    const double u = 0.5 * std::numbers::pi * std::sinh(t);
    const double e = std::exp(-2.0 * std::fabs(u));
    const double near = h * 2.0 * e / (1.0 + e); // distance to the nearer end
    if (!(near > 0.0))
        return;
    // 1 / cosh^2(u) = 4 e / (1 + e)^2
    const double w = h * 0.5 * std::numbers::pi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
    Node node;
    node.lo = lo;
    node.hi = hi;
    if (t >= 0.0) {
        node.from_hi = near;
        node.from_lo = 2.0 * h - near;
        node.x = hi - near;
    } else {
        node.from_lo = near;
        node.from_hi = 2.0 * h - near;
        node.x = lo + near;
    }
    const double v = f(node);
    ++acc.evals;
    if (!std::isfinite(v))
        throw numeric_failure("non-finite integrand value at x = " + std::to_string(node.x));
    acc.sum += w * v;
    acc.abs_sum += w * std::fabs(v);
}

} // namespace

Segment tanh_sinh(const Integrand& f, double lo, double hi, double abs_target, const Options& opt)
{
    Segment seg;
    seg.lo = lo;
    seg.hi = hi;
    Accum acc;
    // level 0: integer t
    const int n0 = static_cast<int>(std::floor(opt.t_max));
    for (int k = -n0; k <= n0; ++k)
        add_node(f, k, lo, hi, acc);
    double step = 1.0;
    double prev = acc.sum * step;
    double cur = prev;
    double diff = 0.0;
    int level = 0;
    while (level < opt.max_level) {
        ++level;
        step *= 0.5;
        for (double t = step; t <= opt.t_max; t += 2.0 * step) {
            add_node(f, t, lo, hi, acc);
            add_node(f, -t, lo, hi, acc);
        }
        cur = acc.sum * step;
        diff = std::fabs(cur - prev);
        prev = cur;
        const double floor = 4.0 * std::numeric_limits<double>::epsilon() * acc.abs_sum * step;
        if (level >= opt.min_level && diff <= std::max(abs_target, floor))
            break;
    }
    seg.value = cur;
    seg.abs_value = acc.abs_sum * step;
    seg.error = std::max(diff, 4.0 * std::numeric_limits<double>::epsilon() * seg.abs_value);
    seg.level = level;
    seg.evals = acc.evals;
    return seg;
}

namespace {

void evaluate_all(const Integrand& f, std::vector<Segment>& segs, const std::vector<int>& which, double target,
                  const Options& opt)
{
    const int n = static_cast<int>(which.size());
    if (opt.execution == Execution::parallel) {
        std::vector<std::string> errors(n);
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) {
            try {
                Segment& s = segs[which[i]];
                s = tanh_sinh(f, s.lo, s.hi, target, opt);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
        for (const auto& e : errors)
            if (!e.empty())
                throw numeric_failure(e);
    } else {
        for (int i = 0; i < n; ++i) {
            Segment& s = segs[which[i]];
            s = tanh_sinh(f, s.lo, s.hi, target, opt);
        }
    }
}

} // namespace

Result integrate(const Integrand& f, std::vector<double> breaks, const Options& opt)
{
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    if (breaks.size() < 2)
        throw std::invalid_argument("integrate needs at least two distinct breakpoints");

    std::vector<Segment> segs(breaks.size() - 1);
    std::vector<int> todo(segs.size());
    for (std::size_t i = 0; i < segs.size(); ++i) {
        segs[i].lo = breaks[i];
        segs[i].hi = breaks[i + 1];
        todo[i] = static_cast<int>(i);
    }
    // first pass refines each segment to machine-level agreement
    evaluate_all(f, segs, todo, 0.0, opt);

    Result res;
    std::vector<double> vals, errs, abss;
    for (;;) {
        vals.resize(segs.size());
        errs.resize(segs.size());
        abss.resize(segs.size());
        for (std::size_t i = 0; i < segs.size(); ++i) {
            vals[i] = segs[i].value;
            errs[i] = segs[i].error;
            abss[i] = segs[i].abs_value;
        }
        res.value = pairwise_sum(vals.data(), vals.size());
        res.error = pairwise_sum(errs.data(), errs.size());
        res.abs_value = pairwise_sum(abss.data(), abss.size());
        const double scale = std::max(std::fabs(res.value), 1e-6 * res.abs_value);
        const double target = 0.5 * opt.tol_rel * scale;
        if (res.error <= target || scale == 0.0) {
            res.converged = true;
            break;
        }
        if (static_cast<int>(segs.size()) >= opt.max_segments)
            break;
        // bisect every segment carrying more than its share of the budget
        const double share = target / static_cast<double>(segs.size());
        std::vector<Segment> next;
        next.reserve(segs.size() * 2);
        todo.clear();
        for (const Segment& s : segs) {
            const std::size_t splits = todo.size() / 2;
            if (s.error > share && static_cast<int>(segs.size() + splits) < opt.max_segments) {
                const double mid = 0.5 * (s.lo + s.hi);
                if (mid <= s.lo || mid >= s.hi) {
                    next.push_back(s);
                    continue;
                }
                Segment a, b;
                a.lo = s.lo;
                a.hi = mid;
                b.lo = mid;
                b.hi = s.hi;
                todo.push_back(static_cast<int>(next.size()));
                next.push_back(a);
                todo.push_back(static_cast<int>(next.size()));
                next.push_back(b);
            } else {
                next.push_back(s);
            }
        }
        if (todo.empty())
            break;
        segs = std::move(next);
        evaluate_all(f, segs, todo, 0.0, opt);
    }
    res.n_evals = 0;
    for (const Segment& s : segs)
        res.n_evals += s.evals;
    res.segments = std::move(segs);
    return res;
}

} // namespace entropic::quadrature
