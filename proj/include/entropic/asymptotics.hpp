#pragma once

#include "entropic/functional.hpp"
#include "entropic/log_value.hpp"

#include <optional>
#include <string>
#include <vector>

// Large-alpha evaluations of the entropic integrals:
// prefactor x (terms[0] + terms[1] + ...), with terms[k] of order alpha^{-k}.
namespace entropic::asymptotics {

constexpr int max_order = 7;

enum class Branch {
    laguerre,              // fixed mu, Watson's lemma
    gegenbauer_asymmetric, // c != d, interior saddle
    gegenbauer_symmetric,  // c = d = 1, Hermite limit
    extended_saddle,       // mu = alpha + sigma, lambda != 1
    extended_hermite,      // mu = alpha + sigma, lambda = 1
    trivial,               // m = 0 Shannon integrals vanish
    oracle_only,           // no expansion known
};

enum class Status { ok, low_confidence, no_expansion };

// engine: coefficients from the series pipeline (any K <= max_order).
// printed: the low-order closed-form coefficients only.
enum class Route { engine, printed };

struct Options
{
    std::optional<int> K; // highest order kept; empty selects optimal truncation
    Route route = Route::engine;
    double oracle_tol = 1e-10; // used when no expansion exists
};

struct ExpansionResult
{
    LogValue prefactor = LogValue::zero();
    std::vector<double> terms;
    std::vector<LogValue> partial_sums;
    int truncation_used = 0; // number of terms in the reported value
    Branch branch = Branch::laguerre;
    Status status = Status::ok;
    std::optional<LogValue> oracle; // set for oracle_only results
    std::string note;

    LogValue value() const;
};

std::string branch_name(Branch b);
std::string status_name(Status s);
std::string route_name(Route r);
Route route_from_name(const std::string& name);

ExpansionResult renyi_laguerre_asym(const Functional& F, const Options& opt = {});
ExpansionResult shannon_laguerre_asym(const Functional& F, const Options& opt = {});
ExpansionResult renyi_gegenbauer_asym(const Functional& F, const Options& opt = {});
ExpansionResult shannon_gegenbauer_asym(const Functional& F, const Options& opt = {});
ExpansionResult ext_renyi_laguerre_asym(const Functional& F, const Options& opt = {});
ExpansionResult ext_shannon_laguerre_asym(const Functional& F, const Options& opt = {});

// Dispatches on F.kind.
ExpansionResult expand(const Functional& F, const Options& opt = {});

// C_m^(alpha)(x / sqrt(alpha)) with correction series truncated after `orders`
double hermite_type_gegenbauer(int m, double alpha, double x, int orders);
// L_m^(alpha)(alpha x) with correction series truncated after `orders`
double hermite_type_laguerre(int m, double alpha, double x, int orders);

// Number of leading terms kept: stops before the first strict increase in
// magnitude.
int optimal_truncation(const std::vector<double>& terms);

} // namespace entropic::asymptotics
