#include "commands.hpp"

#include "entropic/asymptotics.hpp"
#include "entropic/closedforms.hpp"
#include "entropic/coeffs.hpp"
#include "entropic/errors.hpp"
#include "entropic/functional.hpp"
#include "entropic/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace entropic::cli {

using nlohmann::json;
namespace asy = entropic::asymptotics;

namespace {

struct UsageError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

// ---- tables ------------------------------------------------------------------

struct Table
{
    std::vector<std::string> header;
    std::vector<std::vector<json>> rows;
};

std::string fmt17(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string cell_text(const json& j, bool full_precision)
{
    if (j.is_null())
        return "";
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_boolean())
        return j.get<bool>() ? "1" : "0";
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    if (j.is_number()) {
        if (full_precision)
            return fmt17(j.get<double>());
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.10g", j.get<double>());
        return buf;
    }
    return j.dump();
}

std::string render(const Table& t, const std::string& format)
{
    std::ostringstream os;
    if (format == "json") {
        json arr = json::array();
        for (const auto& row : t.rows) {
            json o = json::object();
            for (std::size_t i = 0; i < t.header.size(); ++i)
                o[t.header[i]] = row[i];
            arr.push_back(o);
        }
        os << arr.dump(2) << '\n';
        return os.str();
    }
    if (format == "csv") {
        for (std::size_t i = 0; i < t.header.size(); ++i)
            os << (i ? "," : "") << t.header[i];
        os << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << cell_text(row[i], true);
            os << '\n';
        }
        return os.str();
    }
    std::vector<std::size_t> width(t.header.size());
    for (std::size_t i = 0; i < t.header.size(); ++i)
        width[i] = t.header[i].size();
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], cell_text(row[i], false).size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << (i ? "  " : "") << cells[i];
            if (i + 1 < cells.size())
                os << std::string(width[i] - cells[i].size(), ' ');
        }
        os << '\n';
    };
    line(t.header);
    for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (const auto& c : row)
            cells.push_back(cell_text(c, false));
        line(cells);
    }
    return os.str();
}

// ---- shared options ------------------------------------------------------------

struct Params
{
    std::string kind;
    int m = 0;
    double alpha = 0.0;
    std::optional<double> mu, sigma, lambda, kappa, a, b, c, d;
    double tol = 1e-10;
    std::string order = "auto";
    std::string route = "engine";
    std::string format;
};

void add_functional_options(CLI::App* cmd, Params& p, bool need_alpha)
{
    cmd->add_option("--kind", p.kind, "i1 | i2 | i3 | i4 | i5 | i5s")->required();
    cmd->add_option("--m", p.m, "polynomial degree")->required();
    auto* alpha = cmd->add_option("--alpha", p.alpha, "large parameter");
    if (need_alpha)
        alpha->required();
    cmd->add_option("--mu", p.mu, "weight exponent (i1, i2; default 1)");
    cmd->add_option("--sigma", p.sigma, "exponent shift (i5, i5s; default 0)");
    cmd->add_option("--lambda", p.lambda, "exponential rate (default 1)");
    cmd->add_option("--kappa", p.kappa, "Renyi power (default 2)");
    cmd->add_option("--a", p.a, "default -1/2");
    cmd->add_option("--b", p.b, "default -1/2");
    cmd->add_option("--c", p.c, "default 1");
    cmd->add_option("--d", p.d, "default 1");
    cmd->add_option("--tol", p.tol, "oracle relative tolerance")->capture_default_str();
    cmd->add_option("--order", p.order, "highest expansion order K, or auto")->capture_default_str();
    cmd->add_option("--route", p.route, "engine | printed")->capture_default_str();
}

Functional make_functional(const Params& p)
{
    Functional F;
    F.kind = kind_from_name(p.kind);
    F.m = p.m;
    F.alpha = p.alpha;
    if (F.is_shannon() && p.kappa && *p.kappa != 2.0)
        throw std::invalid_argument("Shannon functionals fix kappa = 2");
    F.kappa = p.kappa.value_or(2.0);
    F.lambda = p.lambda.value_or(1.0);
    F.mu = p.mu.value_or(1.0);
    F.sigma = p.sigma.value_or(0.0);
    F.a = p.a.value_or(-0.5);
    F.b = p.b.value_or(-0.5);
    F.c = p.c.value_or(1.0);
    F.d = p.d.value_or(1.0);
    auto reject = [&](bool given, const char* name) {
        if (given)
            throw std::invalid_argument(std::string("--") + name + " does not apply to kind " + p.kind);
    };
    if (F.is_gegenbauer()) {
        reject(p.mu.has_value(), "mu");
        reject(p.sigma.has_value(), "sigma");
        reject(p.lambda.has_value(), "lambda");
    } else {
        for (auto [opt, name] : {std::pair{&p.a, "a"}, {&p.b, "b"}, {&p.c, "c"}, {&p.d, "d"}})
            reject(opt->has_value(), name);
        reject(F.is_extended() ? p.mu.has_value() : p.sigma.has_value(), F.is_extended() ? "mu" : "sigma");
    }
    F.validate();
    return F;
}

json params_json(const Functional& F)
{
    json j;
    j["m"] = F.m;
    j["alpha"] = F.alpha;
    if (F.is_gegenbauer()) {
        j["a"] = F.a;
        j["b"] = F.b;
        j["c"] = F.c;
        j["d"] = F.d;
    } else {
        j["lambda"] = F.lambda;
        if (F.is_extended())
            j["sigma"] = F.sigma;
        else
            j["mu"] = F.mu;
    }
    if (!F.is_shannon())
        j["kappa"] = F.kappa;
    return j;
}

asy::Options expansion_options(const Params& p)
{
    asy::Options o;
    o.route = asy::route_from_name(p.route);
    o.oracle_tol = p.tol;
    if (p.order != "auto") {
        std::size_t used = 0;
        int K = 0;
        try {
            K = std::stoi(p.order, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != p.order.size())
            throw UsageError("--order must be an integer or 'auto'");
        o.K = K;
    }
    return o;
}

std::vector<std::string> parse_methods(const std::string& list)
{
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item != "oracle" && item != "asym" && item != "closed")
            throw UsageError("unknown method '" + item + "'");
        if (std::find(out.begin(), out.end(), item) == out.end())
            out.push_back(item);
    }
    if (out.empty())
        throw UsageError("at least one method is required");
    return out;
}

json value_json(LogValue v)
{
    json j;
    j["sign"] = v.sign;
    j["log_abs"] = v.is_zero() ? json(nullptr) : json(v.log_abs);
    const auto lin = v.linear();
    j["linear_if_representable"] = lin ? json(*lin) : json(nullptr);
    return j;
}

// ---- single evaluation ---------------------------------------------------------

struct Evaluation
{
    LogValue value;
    std::optional<double> error_estimate;
    std::optional<asy::ExpansionResult> expansion;
};

Evaluation evaluate(const Functional& F, const std::string& method, const Params& p)
{
    Evaluation e;
    if (method == "oracle") {
        const oracle::QuadResult q = oracle::integrate_functional(F, p.tol);
        e.value = q.value;
        e.error_estimate = q.value.is_zero() ? 0.0 : std::exp(q.abs_err_log - q.value.log_abs);
    } else if (method == "closed") {
        const auto v = closedforms::closed_form_value(F);
        if (!v)
            throw std::invalid_argument("no closed form is available for these parameters");
        e.value = *v;
    } else {
        e.expansion = asy::expand(F, expansion_options(p));
        const asy::ExpansionResult& r = *e.expansion;
        e.value = r.value();
        if (r.status != asy::Status::no_expansion && !r.terms.empty() &&
            static_cast<std::size_t>(r.truncation_used) < r.terms.size()) {
            double sum = 0.0;
            for (int k = 0; k < r.truncation_used; ++k)
                sum += r.terms[k];
            if (sum != 0.0)
                e.error_estimate = std::fabs(r.terms[r.truncation_used] / sum);
        }
    }
    return e;
}

std::string status_of(const Evaluation& e)
{
    return e.expansion ? asy::status_name(e.expansion->status) : "ok";
}

// ---- commands ------------------------------------------------------------------

Output cmd_eval(const Params& p, const std::string& method)
{
    const Functional F = make_functional(p);
    const Evaluation e = evaluate(F, method, p);
    json doc;
    doc["functional"] = kind_name(F.kind);
    doc["params"] = params_json(F);
    doc["method"] = method;
    doc["value"] = value_json(e.value);
    doc["error_estimate"] = e.error_estimate ? json(*e.error_estimate) : json(nullptr);
    doc["terms"] = e.expansion ? json(e.expansion->terms) : json::array();
    doc["truncation_used"] = e.expansion ? json(e.expansion->truncation_used) : json(nullptr);
    doc["branch"] = e.expansion ? json(asy::branch_name(e.expansion->branch)) : json(nullptr);
    doc["status"] = status_of(e);
    if (e.expansion && !e.expansion->note.empty())
        doc["note"] = e.expansion->note;

    Output o;
    if (p.format.empty() || p.format == "json") {
        o.out = doc.dump(2) + "\n";
        return o;
    }
    Table t{{"functional", "method", "sign", "log_abs", "value", "error_estimate", "truncation_used", "branch",
             "status"},
            {}};
    t.rows.push_back({doc["functional"], doc["method"], doc["value"]["sign"], doc["value"]["log_abs"],
                      doc["value"]["linear_if_representable"], doc["error_estimate"], doc["truncation_used"],
                      doc["branch"], doc["status"]});
    o.out = render(t, p.format);
    return o;
}

Output cmd_compare(const Params& p, const std::vector<std::string>& methods)
{
    if (methods.size() < 2)
        throw UsageError("compare needs at least two methods");
    if (std::find(methods.begin(), methods.end(), "asym") == methods.end())
        throw UsageError("compare needs the asym method");
    const Functional F = make_functional(p);
    const Evaluation e = evaluate(F, "asym", p);
    const asy::ExpansionResult& r = *e.expansion;

    std::vector<std::pair<std::string, LogValue>> refs;
    for (const std::string& m : methods)
        if (m != "asym")
            refs.emplace_back(m, evaluate(F, m, p).value);

    Table t;
    t.header = {"K", "sign", "log_abs", "partial_sum"};
    for (const auto& ref : refs)
        t.header.push_back("rel_dev_vs_" + ref.first);
    t.header.insert(t.header.end(), {"optimal", "status"});

    if (r.status == asy::Status::no_expansion || r.partial_sums.empty()) {
        std::vector<json> row{nullptr, e.value.sign, e.value.log_abs, value_json(e.value)["linear_if_representable"]};
        for (const auto& ref : refs)
            row.push_back(relative_difference(e.value, ref.second));
        row.insert(row.end(), {nullptr, asy::status_name(r.status)});
        t.rows.push_back(row);
    } else {
        for (std::size_t k = 0; k < r.partial_sums.size(); ++k) {
            const LogValue s = r.partial_sums[k];
            std::vector<json> row{static_cast<int>(k), s.sign, s.is_zero() ? json(nullptr) : json(s.log_abs),
                                  value_json(s)["linear_if_representable"]};
            for (const auto& ref : refs)
                row.push_back(relative_difference(s, ref.second));
            row.push_back(static_cast<int>(k) + 1 == r.truncation_used ? "*" : "");
            row.push_back(asy::status_name(r.status));
            t.rows.push_back(row);
        }
    }
    Output o;
    o.out = render(t, p.format.empty() ? "csv" : p.format);
    return o;
}

struct SweepSpec
{
    double start = 0.0, stop = 0.0;
    int count = 0;
    std::string spacing = "log";
    int jobs = 1;
};

std::vector<double> alpha_grid(const SweepSpec& s)
{
    if (s.count < 2)
        throw UsageError("--count must be at least 2");
    if (!(s.start > 0.0) || !(s.stop > 0.0))
        throw UsageError("--alpha-start and --alpha-stop must be positive");
    std::vector<double> g(s.count);
    const double n = s.count - 1;
    for (int i = 0; i < s.count; ++i) {
        if (s.spacing == "linear")
            g[i] = s.start + (s.stop - s.start) * (i / n);
        else if (s.spacing == "log")
            g[i] = std::pow(10.0, std::log10(s.start) + (std::log10(s.stop) - std::log10(s.start)) * (i / n));
        else
            throw UsageError("--spacing must be linear or log");
    }
    g.front() = s.start;
    g.back() = s.stop;
    return g;
}

Output cmd_sweep(const Params& p, const SweepSpec& spec, std::vector<std::string> methods)
{
    const std::vector<double> grid = alpha_grid(spec);
    std::sort(methods.begin(), methods.end());
    // template check independent of alpha
    {
        Params q = p;
        q.alpha = grid.front();
        make_functional(q);
        expansion_options(p);
    }

    struct Cell
    {
        std::optional<Evaluation> eval;
        std::string error;
    };
    std::vector<Cell> cells(grid.size() * methods.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            Params q = p;
            q.alpha = grid[i / methods.size()];
            try {
                cells[i].eval = evaluate(make_functional(q), methods[i % methods.size()], q);
            } catch (const std::exception& ex) {
                cells[i].error = ex.what();
            }
        }
    };
    const int jobs = std::max(1, std::min<int>(spec.jobs, static_cast<int>(cells.size())));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();

    const auto has = [&](const char* m) { return std::find(methods.begin(), methods.end(), m) != methods.end(); };
    const bool with_oracle = has("oracle") && methods.size() > 1;
    const bool with_closed = has("closed") && methods.size() > 1;
    Table t;
    t.header = {"alpha", "method", "K", "sign", "log_abs"};
    if (with_oracle)
        t.header.push_back("rel_err_vs_oracle");
    if (with_closed)
        t.header.push_back("ratio_to_closed");
    t.header.push_back("status");

    Output o;
    for (std::size_t ia = 0; ia < grid.size(); ++ia) {
        const auto find = [&](const char* m) -> const Cell* {
            for (std::size_t im = 0; im < methods.size(); ++im)
                if (methods[im] == m)
                    return &cells[ia * methods.size() + im];
            return nullptr;
        };
        const Cell* oc = find("oracle");
        const Cell* cc = find("closed");
        for (std::size_t im = 0; im < methods.size(); ++im) {
            const Cell& c = cells[ia * methods.size() + im];
            std::vector<json> row{grid[ia], methods[im]};
            if (!c.eval) {
                row.insert(row.end(), {nullptr, nullptr, nullptr});
                if (with_oracle)
                    row.push_back(nullptr);
                if (with_closed)
                    row.push_back(nullptr);
                row.push_back("error: " + c.error);
                o.exit_code = 1;
                t.rows.push_back(row);
                continue;
            }
            const Evaluation& e = *c.eval;
            row.push_back(e.expansion && e.expansion->status != asy::Status::no_expansion
                              ? json(e.expansion->truncation_used - 1)
                              : json(nullptr));
            row.push_back(e.value.sign);
            row.push_back(e.value.is_zero() ? json(nullptr) : json(e.value.log_abs));
            if (with_oracle)
                row.push_back(oc && oc->eval && methods[im] != "oracle"
                                  ? json(relative_difference(e.value, oc->eval->value))
                                  : json(nullptr));
            if (with_closed) {
                json ratio = nullptr;
                if (cc && cc->eval && methods[im] != "closed" && !cc->eval->value.is_zero() && !e.value.is_zero())
                    ratio = e.value.sign * cc->eval->value.sign * std::exp(e.value.log_abs - cc->eval->value.log_abs);
                row.push_back(ratio);
            }
            row.push_back(status_of(e));
            t.rows.push_back(row);
        }
    }
    o.out = render(t, p.format.empty() ? "csv" : p.format);
    return o;
}

struct CoeffArgs
{
    std::string ladder;
    std::string source = "auto";
    int m = 0;
    double alpha = 1.0, mu = 1.0, sigma = 0.0, lambda = 1.0, kappa = 2.0;
    double a = 0.0, b = 0.0, c = 1.0, d = 1.0, x = 0.0;
    int n = 4, k = 0;
    std::string format;
};

Output cmd_coeffs(const CoeffArgs& A)
{
    if (A.source != "auto" && A.source != "printed" && A.source != "engine")
        throw UsageError("--source must be auto, printed or engine");
    json doc;
    doc["ladder"] = A.ladder;
    std::string source;
    int first = 0;
    std::vector<double> values;
    json params;

    // printed is preferred under auto when the ladder has printed forms in range
    auto choose = [&](bool printed_ok) {
        if (A.source == "printed" && !printed_ok)
            throw std::invalid_argument("no printed form for ladder '" + A.ladder + "' at this order");
        source = A.source == "engine" || !printed_ok ? "engine" : "printed";
    };

    const std::string& L = A.ladder;
    if (L == "f") {
        params = {{"m", A.m}, {"alpha", A.alpha}, {"n", A.n}};
        choose(A.n <= 4);
        if (source == "printed")
            for (int i = 0; i <= A.n; ++i)
                values.push_back(coeffs::f_printed(i, A.m, A.alpha));
        else
            values = coeffs::f_sequence(A.m, A.alpha, A.n);
    } else if (L == "lag-a") {
        params = {{"m", A.m}, {"alpha", A.alpha}, {"kappa", A.kappa}, {"n", A.n}};
        choose(A.n <= 2);
        if (source == "printed")
            for (int j = 0; j <= A.n; ++j)
                values.push_back(coeffs::lag_A_printed(j, A.kappa, A.m, A.alpha));
        else
            values = coeffs::lag_A_coeffs(A.kappa, A.m, A.alpha, A.n);
    } else if (L == "lag-c") {
        params = {{"m", A.m}, {"alpha", A.alpha}, {"mu", A.mu}, {"lambda", A.lambda}, {"kappa", A.kappa}, {"k", A.k}};
        choose(false);
        values = coeffs::lag_C_ladder(A.mu, A.lambda, A.kappa, A.m, A.alpha, A.k).values;
    } else if (L == "lag-d") {
        params = {{"m", A.m}, {"mu", A.mu}, {"lambda", A.lambda}, {"kappa", A.kappa}, {"k", A.k}};
        choose(A.k <= 2);
        if (source == "printed")
            for (int j = 0; j <= A.k; ++j)
                values.push_back(coeffs::lag_D(j, A.mu, A.lambda, A.kappa, A.m));
        else
            values = coeffs::engine_lag_D(A.k, A.mu, A.lambda, A.kappa, A.m);
    } else if (L == "geg-f") {
        params = {{"m", A.m}, {"alpha", A.alpha}};
        choose(false);
        values = coeffs::geg_f_sequence(A.m, A.alpha);
    } else if (L == "geg-a") {
        params = {{"m", A.m}, {"alpha", A.alpha}, {"kappa", A.kappa}, {"n", A.n}};
        choose(A.n <= 2);
        if (source == "printed")
            for (int j = 0; j <= A.n; ++j)
                values.push_back(coeffs::geg_A_printed(j, A.kappa, A.m, A.alpha));
        else
            values = coeffs::geg_A_coeffs(A.kappa, A.m, A.alpha, A.n);
    } else if (L == "geg-d0") {
        params = {{"m", A.m}, {"a", A.a}, {"b", A.b}, {"c", A.c}, {"d", A.d}, {"kappa", A.kappa}};
        choose(true);
        values = {coeffs::geg_D0(A.a, A.b, A.c, A.d, A.kappa, A.m)};
    } else if (L == "saddle-geg") {
        params = {{"c", A.c}, {"d", A.d}, {"n", A.n}};
        first = 1;
        choose(A.n <= 3);
        if (source == "printed") {
            const auto p = coeffs::saddle_geg_printed(A.c, A.d);
            values.assign(p.begin(), p.begin() + A.n);
        } else {
            const auto s = coeffs::saddle_geg(A.c, A.d, A.n).coeffs();
            values.assign(s.begin() + 1, s.end());
        }
    } else if (L == "saddle-ext") {
        params = {{"lambda", A.lambda}, {"n", A.n}};
        first = 1;
        choose(A.n <= 5);
        if (source == "printed") {
            const auto p = coeffs::saddle_ext_printed(A.lambda);
            values.assign(p.begin(), p.begin() + A.n);
        } else {
            const auto s = coeffs::saddle_ext(A.lambda, A.n).coeffs();
            values.assign(s.begin() + 1, s.end());
        }
    } else if (L == "ext-d") {
        params = {{"m", A.m}, {"sigma", A.sigma}, {"lambda", A.lambda}, {"kappa", A.kappa}, {"k", A.k}};
        choose(A.k <= 1);
        if (source == "printed")
            for (int j = 0; j <= A.k; ++j)
                values.push_back(coeffs::ext_lag_D(j, A.sigma, A.lambda, A.kappa, A.m));
        else
            values = coeffs::engine_ext_D(A.k, A.sigma, A.lambda, A.kappa, A.m);
    } else if (L == "hermite-geg") {
        params = {{"m", A.m}, {"x", A.x}};
        choose(true);
        const auto h = coeffs::geg_hermite_coeffs(A.m, A.x);
        doc["p"] = h.p;
        doc["q"] = h.q;
    } else if (L == "hermite-lag") {
        params = {{"m", A.m}, {"alpha", A.alpha}, {"x", A.x}};
        choose(true);
        const auto h = coeffs::lag_hermite_coeffs(A.m, A.alpha, A.x);
        doc["c"] = h.c;
        doc["d"] = h.d;
    } else {
        throw UsageError("unknown ladder '" + L + "'");
    }

    doc["source"] = source;
    doc["params"] = params;
    if (!doc.contains("p") && !doc.contains("c")) {
        doc["first_index"] = first;
        doc["values"] = values;
    }

    Output o;
    if (A.format.empty() || A.format == "json") {
        o.out = doc.dump(2) + "\n";
        return o;
    }
    Table t{{"name", "index", "value"}, {}};
    if (doc.contains("values")) {
        for (std::size_t i = 0; i < values.size(); ++i)
            t.rows.push_back({L, static_cast<int>(first + i), values[i]});
    } else {
        for (const char* key : {"p", "q", "c", "d"})
            if (doc.contains(key))
                for (std::size_t i = 0; i < doc[key].size(); ++i)
                    t.rows.push_back({key, static_cast<int>(i), doc[key][i]});
    }
    o.out = render(t, A.format);
    return o;
}

Output error_output(const std::string& kind, const std::string& message, int code)
{
    Output o;
    o.exit_code = code;
    o.err = json{{"error", {{"kind", kind}, {"message", message}}}}.dump() + "\n";
    return o;
}

} // namespace

Output run(const std::vector<std::string>& args)
{
    CLI::App app{"Entropic integrals of Laguerre and Gegenbauer polynomials", "entropic"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"json", "csv", "pretty"};

    Params ep;
    std::string eval_method = "asym";
    auto* eval = app.add_subcommand("eval", "evaluate one functional by one method");
    add_functional_options(eval, ep, true);
    eval->add_option("--method", eval_method, "asym | oracle | closed")
        ->check(CLI::IsMember({"asym", "oracle", "closed"}))
        ->capture_default_str();
    eval->add_option("--format", ep.format, "json | csv | pretty")->check(CLI::IsMember(formats));

    Params cp;
    std::string compare_methods = "asym,oracle";
    auto* compare = app.add_subcommand("compare", "expansion partial sums against reference values");
    add_functional_options(compare, cp, true);
    compare->add_option("--methods", compare_methods, "comma-separated subset of asym,oracle,closed")
        ->capture_default_str();
    compare->add_option("--format", cp.format, "csv | pretty | json")->check(CLI::IsMember(formats));

    Params sp;
    SweepSpec spec;
    std::string sweep_methods = "asym,oracle";
    auto* sweep = app.add_subcommand("sweep", "evaluate over an alpha grid");
    add_functional_options(sweep, sp, false);
    sweep->add_option("--alpha-start", spec.start)->required();
    sweep->add_option("--alpha-stop", spec.stop)->required();
    sweep->add_option("--count", spec.count)->required();
    sweep->add_option("--spacing", spec.spacing, "linear | log")->capture_default_str();
    sweep->add_option("--methods", sweep_methods, "comma-separated subset of asym,oracle,closed")
        ->capture_default_str();
    sweep->add_option("--jobs", spec.jobs, "concurrent evaluations")->capture_default_str();
    sweep->add_option("--format", sp.format, "csv | pretty | json")->check(CLI::IsMember(formats));

    CoeffArgs ca;
    auto* coeffs_cmd = app.add_subcommand("coeffs", "inspect coefficient ladders");
    coeffs_cmd->add_option("--ladder", ca.ladder,
                           "f | lag-a | lag-c | lag-d | geg-f | geg-a | geg-d0 | saddle-geg | saddle-ext | ext-d | "
                           "hermite-geg | hermite-lag")
        ->required();
    coeffs_cmd->add_option("--source", ca.source, "auto | printed | engine")->capture_default_str();
    coeffs_cmd->add_option("--m", ca.m);
    coeffs_cmd->add_option("--alpha", ca.alpha);
    coeffs_cmd->add_option("--mu", ca.mu);
    coeffs_cmd->add_option("--sigma", ca.sigma);
    coeffs_cmd->add_option("--lambda", ca.lambda);
    coeffs_cmd->add_option("--kappa", ca.kappa);
    coeffs_cmd->add_option("--a", ca.a);
    coeffs_cmd->add_option("--b", ca.b);
    coeffs_cmd->add_option("--c", ca.c);
    coeffs_cmd->add_option("--d", ca.d);
    coeffs_cmd->add_option("--x", ca.x);
    coeffs_cmd->add_option("--n", ca.n, "highest index")->capture_default_str();
    coeffs_cmd->add_option("--k", ca.k, "highest order")->capture_default_str();
    coeffs_cmd->add_option("--format", ca.format, "json | csv | pretty")->check(CLI::IsMember(formats));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream out, err;
        Output o;
        o.exit_code = app.exit(e, out, err);
        o.out = out.str();
        o.err = err.str();
        return o;
    } catch (const CLI::ParseError& e) {
        return error_output("usage", e.what(), 2);
    }

    try {
        if (eval->parsed())
            return cmd_eval(ep, eval_method);
        if (compare->parsed())
            return cmd_compare(cp, parse_methods(compare_methods));
        if (sweep->parsed())
            return cmd_sweep(sp, spec, parse_methods(sweep_methods));
        return cmd_coeffs(ca);
    } catch (const UsageError& e) {
        return error_output("usage", e.what(), 2);
    } catch (const numeric_failure& e) {
        return error_output("numeric_failure", e.what(), 1);
    } catch (const std::invalid_argument& e) {
        return error_output("invalid_argument", e.what(), 1);
    } catch (const std::exception& e) {
        return error_output("internal", e.what(), 1);
    }
}

} // namespace entropic::cli
