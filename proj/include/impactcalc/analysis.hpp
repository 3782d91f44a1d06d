#pragma once

#include "impactcalc/decimal.hpp"
#include "impactcalc/ledger.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace impactcalc {

/// Addresses a tunable number in a scenario. `name` alone is a scenario
/// parameter; `item.name` is an argument local to line item `item`.
struct ParamPath {
    std::string item_id;
    std::string name;

    static ParamPath parse(std::string_view text);
    bool is_item_arg() const noexcept { return !item_id.empty(); }
    std::string str() const;
};

/// Throws UnknownParameter when the path does not resolve.
Decimal parameter_value(const Scenario& scenario, std::string_view path);
/// Copy of `scenario` with the addressed number replaced.
Scenario with_parameter(const Scenario& scenario, std::string_view path, const Decimal& value);

/// USD net of `scenario` (zero when no USD rows evaluate).
Decimal usd_net(const Scenario& scenario);

struct SweepPoint {
    Decimal param_value;
    Decimal usd_net;
    friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

struct SweepResult {
    std::string param_path;
    /// Sorted by param_value, one point per requested value.
    std::vector<SweepPoint> points;
    friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

struct SweepOptions {
    /// Evaluate points on worker threads; the output order is unaffected.
    bool parallel = true;
};

SweepResult sweep(const Scenario& scenario, std::string_view path, std::span<const Decimal> values,
                  SweepOptions options = {});

/// Bisection stops once the bracket is this narrow.
inline const Decimal kBreakEvenPrecision = Decimal::from_scaled(1, 12);

struct BreakEvenResult {
    Decimal value;
    Decimal usd_net;
    /// Ledger evaluations including the two bracket endpoints.
    int evaluations = 0;
    /// Midpoint evaluations only; never exceeds bisection_step_bound.
    int bisection_steps = 0;
};

/// ceil(log2((hi - lo) / kBreakEvenPrecision)), and 0 when hi - lo is
/// already within precision.
int bisection_step_bound(const Decimal& lo, const Decimal& hi);

/// Bisection on the USD net over [lo, hi] for a parameter where the net is
/// monotone. Returns the first probe with |net| <= tol.
/// Throws NoSignChange, UnknownParameter, NoConvergence or OutOfRange.
BreakEvenResult break_even(const Scenario& scenario, std::string_view path, const Decimal& lo,
                           const Decimal& hi, const Decimal& tol);

struct TornadoBar {
    std::string param_path;
    Decimal net_low;
    Decimal net_high;
    Decimal span;
    friend bool operator==(const TornadoBar&, const TornadoBar&) = default;
};

/// Nets at (1 - delta) and (1 + delta) times each parameter's current value,
/// ranked by span descending, then path ascending.
std::vector<TornadoBar> tornado(const Scenario& scenario, std::span<const std::string> paths,
                                const Decimal& relative_delta);

}  // namespace impactcalc
